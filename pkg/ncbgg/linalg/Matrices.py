from typing import Any, Iterable, Optional, Sequence
import numpy as np
from ncbgg.Errors import DimensionMismatchError, PreconditionError
from ncbgg.linalg.Fields import Entries, Field, Scalar



class Matrix:
    """
    Dense matrix over an exact field. Instances are treated as immutable:
    every operation returns a new Matrix and never writes into entries.

    Linear maps act on column vectors, so a map V -> W has shape
    (dim W, dim V).
    """
    def __init__(self, field: Field, entries: Any, shape: Optional[tuple[int, int]]=None) -> None:
        arr = entries if isinstance(entries, np.ndarray) and entries.dtype == field.dtype else field.coerce(entries)
        if not shape is None:
            arr = arr.reshape(shape)
        if arr.ndim != 2:
            raise DimensionMismatchError(f'A matrix needs two axes, got shape {arr.shape}')
        self.field = field
        self.entries: Entries = arr

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> 'Matrix':
        return Matrix(field, field.zeros((rows, cols)))

    @staticmethod
    def identity(field: Field, n: int) -> 'Matrix':
        return Matrix(field, field.eye(n))

    @staticmethod
    def unit_rows(field: Field, indices: Sequence[int], cols: int) -> 'Matrix':
        arr = field.zeros((len(indices), cols))
        for r, c in enumerate(indices):
            arr[r, c] = 1
        return Matrix(field, field.coerce(arr))

    @staticmethod
    def hstack(field: Field, blocks: Sequence['Matrix'], rows: int=None) -> 'Matrix':
        if len(blocks) == 0:
            return Matrix.zeros(field, 0 if rows is None else rows, 0)
        return Matrix(field, np.concatenate([b.entries for b in blocks], axis=1))

    @staticmethod
    def vstack(field: Field, blocks: Sequence['Matrix'], cols: int=None) -> 'Matrix':
        if len(blocks) == 0:
            return Matrix.zeros(field, 0, 0 if cols is None else cols)
        widths = set(b.cols for b in blocks)
        if len(widths) > 1:
            raise DimensionMismatchError(f'Cannot stack rows of widths {sorted(widths)}')
        return Matrix(field, np.concatenate([b.entries for b in blocks], axis=0))

    @staticmethod
    def block(field: Field, rows: Sequence[int], cols: Sequence[int], blocks: dict[tuple[int, int], 'Matrix']) -> 'Matrix':
        """
        Assemble a block matrix from row/column block sizes; absent blocks
        are zero.
        """
        arr = field.zeros((sum(rows), sum(cols)))
        row_off = np.concatenate([[0], np.cumsum(rows)]).astype(int)
        col_off = np.concatenate([[0], np.cumsum(cols)]).astype(int)
        for (i, j), b in blocks.items():
            if b.shape != (rows[i], cols[j]):
                raise DimensionMismatchError(f'Block ({i},{j}) has shape {b.shape}, expected {(rows[i], cols[j])}')
            arr[row_off[i]:row_off[i+1], col_off[j]:col_off[j+1]] = b.entries
        return Matrix(field, arr)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    @property
    def T(self) -> 'Matrix':
        return Matrix(self.field, self.entries.T.copy())

    @property
    def is_zero(self) -> bool:
        return not bool(np.any(self.entries != 0))

    def _check_field(self, other: 'Matrix') -> None:
        if self.field != other.field:
            raise PreconditionError(f'Cannot combine matrices over {self.field} and {other.field}')

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(f'Cannot multiply {self.shape} by {other.shape}')
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        return Matrix(self.field, self.field.matmul(self.entries, other.entries))

    def __add__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f'Cannot add {self.shape} and {other.shape}')
        return Matrix(self.field, self.field.reduce(self.entries + other.entries))

    def __sub__(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f'Cannot subtract {other.shape} from {self.shape}')
        return Matrix(self.field, self.field.reduce(self.entries - other.entries))

    def __neg__(self) -> 'Matrix':
        return Matrix(self.field, self.field.reduce(-self.entries))

    def scale(self, c: Scalar) -> 'Matrix':
        c = self.field.parse(c)
        return Matrix(self.field, self.field.reduce(self.entries * c))

    def kron(self, other: 'Matrix') -> 'Matrix':
        self._check_field(other)
        return Matrix(self.field, self.field.kron(self.entries, other.entries))

    def take_rows(self, idx: Iterable[int]) -> 'Matrix':
        idx = list(idx)
        return Matrix(self.field, self.entries[idx, :].reshape(len(idx), self.cols))

    def take_cols(self, idx: Iterable[int]) -> 'Matrix':
        idx = list(idx)
        return Matrix(self.field, self.entries[:, idx].reshape(self.rows, len(idx)))

    def row_slice(self, start: int, stop: int) -> 'Matrix':
        return Matrix(self.field, self.entries[start:stop, :].copy())

    def col_slice(self, start: int, stop: int) -> 'Matrix':
        return Matrix(self.field, self.entries[:, start:stop].copy())

    def tolist(self) -> list[list[Any]]:
        return [[self.field.scalar_to_json(x) for x in row] for row in self.entries]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool(np.all(self.entries == other.entries))

    def __hash__(self) -> int:
        return hash((self.field, self.shape, tuple(str(x) for x in self.entries.ravel())))

    def __repr__(self) -> str:
        return f'Matrix({self.field}, {self.tolist()})'




def _eliminate(m: Matrix) -> tuple[Entries, list[int]]:
    field = m.field
    a = m.entries.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c] != 0)[0]
        if len(nz) == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = field.reduce(a[r] * field.inv(a[r, c]))
        others = np.nonzero(a[:, c] != 0)[0]
        others = others[others != r]
        if len(others) > 0:
            a[others] = field.reduce(a[others] - np.outer(a[others, c], a[r]))
        pivots.append(c)
        r += 1
    return a, pivots


def rank_and_rref(m: Matrix) -> tuple[int, Matrix, list[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination. The returned rref
    keeps the zero rows, so it has the shape of m.
    """
    a, pivots = _eliminate(m)
    return len(pivots), Matrix(m.field, a), pivots


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return len(_eliminate(m)[1])


def row_basis(m: Matrix) -> Matrix:
    """
    Nonzero rows of the rref, i.e. a canonical basis of the row span.
    """
    r, rref, _ = rank_and_rref(m)
    return rref.row_slice(0, r)


def kernel_basis(m: Matrix) -> Matrix:
    """
    Rows v with m . v^T = 0, one for every non-pivot column.
    """
    field = m.field
    r, rref, pivots = rank_and_rref(m)
    free = [c for c in range(m.cols) if not c in set(pivots)]
    basis = field.zeros((len(free), m.cols))
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = field.reduce(-rref.entries[i, f])
    return Matrix(field, field.coerce(basis))


def column_kernel(m: Matrix) -> Matrix:
    """
    Same as kernel_basis, but the basis vectors are returned as columns.
    """
    return kernel_basis(m).T


def quotient_basis(subspace: Matrix, ambient_dim: int) -> tuple[Matrix, Matrix]:
    """
    Quotient of k^ambient_dim by the row span of subspace. Returns
    (section, projection): section rows are unit vectors at the non-pivot
    columns and projection . section^T is the identity of the quotient.
    """
    if subspace.cols != ambient_dim:
        raise DimensionMismatchError(
            f'Subspace rows have length {subspace.cols}, but the ambient dimension is {ambient_dim}')
    field = subspace.field
    r, rref, pivots = rank_and_rref(subspace)
    pivot_set = set(pivots)
    free = [c for c in range(ambient_dim) if not c in pivot_set]
    section = Matrix.unit_rows(field, free, ambient_dim)
    proj = field.zeros((len(free), ambient_dim))
    for k, c in enumerate(free):
        proj[k, c] = 1
        for i, pc in enumerate(pivots):
            proj[k, pc] = field.reduce(-rref.entries[i, c])
    return section, Matrix(field, field.coerce(proj))


def image_basis(m: Matrix) -> Matrix:
    """
    Basis of the column space, returned as columns.
    """
    return row_basis(m.T).T


def solve(a: Matrix, b: Matrix) -> Matrix:
    """
    Some x with a . x = b. Raises PreconditionError if the system is
    inconsistent.
    """
    if a.rows != b.rows:
        raise DimensionMismatchError(f'Cannot solve {a.shape} against right hand side {b.shape}')
    field = a.field
    n = a.cols
    aug = Matrix.hstack(field, [a, b], rows=a.rows)
    r, rref, pivots = rank_and_rref(aug)
    if any(p >= n for p in pivots):
        raise PreconditionError('The linear system has no solution')
    x = field.zeros((n, b.cols))
    for i, pc in enumerate(pivots):
        x[pc] = rref.entries[i, n:]
    return Matrix(field, field.coerce(x))


def left_inverse(basis: Matrix) -> Matrix:
    """
    For a matrix whose columns are independent, some L with L . basis = 1.
    """
    if basis.cols == 0:
        return Matrix.zeros(basis.field, 0, basis.rows)
    return solve(basis.T, Matrix.identity(basis.field, basis.cols)).T


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionMismatchError(f'Only square matrices can be inverted, got {m.shape}')
    return solve(m, Matrix.identity(m.field, m.rows))


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def same_row_span(a: Matrix, b: Matrix) -> bool:
    if a.cols != b.cols:
        return False
    return row_basis(a) == row_basis(b)
