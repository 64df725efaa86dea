from typing import Optional
import logging
import numpy as np
from ncbgg.Errors import NotFiniteError, PreconditionError
from ncbgg.Window import Window
from ncbgg.Windowed import Windowed
from ncbgg.algebra.Presentations import QuadraticPresentation, opposite
from ncbgg.linalg.Fields import Entries
from ncbgg.linalg.Matrices import Matrix, quotient_basis, rank



class TruncatedAlgebra(Windowed):
    """
    The quadratic algebra T(V)/(R) in degrees 0..N. A_n is realized as
    (A_{n-1} (x) V) modulo the image of A_{n-2} (x) R, so every basis element
    of A_n is a normal word w_{n-1} + (a,) whose class is the product of
    its letters.

    Elements of A_n are coordinate vectors in that basis. The right action
    of the generator e_a is the matrix right_generator(a, n): A_n -> A_{n+1};
    mult[(m, n)][:, i, j] holds the coordinates of u_i * v_j.
    """
    def __init__(self, presentation: QuadraticPresentation, N: int) -> None:
        if N < 0:
            raise PreconditionError(f'The truncation degree must be nonnegative, got {N}')
        self.presentation = presentation
        self.field = presentation.field
        self.N = N
        self._window = Window(name='degrees', lower_bound=0, upper_bound=N)
        self.words: list[list[tuple[int, ...]]] = []
        self.sections: list[tuple[Matrix, Matrix]] = []
        self._right: list[list[Matrix]] = []
        self._build()
        self.mult: dict[tuple[int, int], Entries] = {}
        self._build_mult()
        self._opposite: Optional['TruncatedAlgebra'] = None

    @property
    def window(self) -> Window:
        return self._window

    @property
    def truncation(self) -> int:
        return self.N

    @property
    def g(self) -> int:
        return self.presentation.g

    @property
    def component_dims(self) -> list[int]:
        return [len(w) for w in self.words]

    def dim(self, n: int) -> int:
        if n < 0:
            return 0
        self.require(n, n)
        return len(self.words[n])

    def _build(self) -> None:
        field, g = self.field, self.g
        self.words.append([()])
        self.sections.append((Matrix.identity(field, 1), Matrix.identity(field, 1)))
        if self.N == 0:
            return
        self.words.append([(a,) for a in range(g)])
        self.sections.append((Matrix.identity(field, g), Matrix.identity(field, g)))
        self._right.append([Matrix.unit_rows(field, [a], g).T for a in range(g)])
        for n in range(2, self.N + 1):
            prev, prev2 = len(self.words[n - 1]), len(self.words[n - 2])
            ambient = prev * g
            rows = []
            rel = self.presentation.relations.entries
            for l in range(prev2):
                images = [self._right[n - 2][a].entries[:, l] for a in range(g)]
                for r in range(self.presentation.num_relations):
                    vec = field.zeros((prev, g))
                    for a in range(g):
                        for b in range(g):
                            c = rel[r, a * g + b]
                            if c != 0:
                                vec[:, b] = field.reduce(vec[:, b] + images[a] * c)
                    rows.append(vec.reshape(ambient))
            sub = Matrix(field, np.array(rows, dtype=field.dtype).reshape(len(rows), ambient) if rows else field.zeros((0, ambient)))
            section, proj = quotient_basis(sub, ambient)
            words = []
            for row in section.entries:
                idx = int(np.nonzero(row != 0)[0][0])
                k, a = divmod(idx, g)
                words.append(self.words[n - 1][k] + (a,))
            self.words.append(words)
            self.sections.append((section, proj))
            self._right.append([proj.take_cols(range(a, ambient, g)) for a in range(g)])
            logging.debug('  Computed A_%d of dimension %d (span of %d relation images)', n, len(words), sub.rows)

    def _build_mult(self) -> None:
        field = self.field
        for m in range(self.N + 1):
            dm = len(self.words[m])
            self.mult[(m, 0)] = field.eye(dm).reshape(dm, dm, 1)
            for n in range(1, self.N - m + 1):
                prev = self.mult[(m, n - 1)]
                words = self.words[n]
                index_prev = {w: i for i, w in enumerate(self.words[n - 1])}
                out = field.zeros((len(self.words[m + n]), dm, len(words)))
                for j, w in enumerate(words):
                    k = index_prev[w[:-1]]
                    out[:, :, j] = field.matmul(self._right[m + n - 1][w[-1]].entries, prev[:, :, k])
                self.mult[(m, n)] = out

    def right_generator(self, a: int, n: int) -> Matrix:
        """
        u -> u * e_a as a map A_n -> A_{n+1}.
        """
        self.require(n, n + 1)
        return self._right[n][a]

    def left_generator(self, a: int, n: int) -> Matrix:
        """
        u -> e_a * u as a map A_n -> A_{n+1}.
        """
        self.require(n, n + 1)
        return Matrix(self.field, self.mult[(1, n)][:, a, :].copy())

    def right_multiplication(self, n: int, j: int, m: int) -> Matrix:
        """
        u -> u * v_j for the basis element v_j of A_n, as a map A_m -> A_{m+n}.
        """
        self.require(m, m + n)
        return Matrix(self.field, self.mult[(m, n)][:, :, j].copy())

    def left_multiplication(self, m: int, i: int, n: int) -> Matrix:
        """
        v -> u_i * v for the basis element u_i of A_m, as a map A_n -> A_{m+n}.
        """
        self.require(n, m + n)
        return Matrix(self.field, self.mult[(m, n)][:, i, :].copy())

    def product(self, m: int, u: Matrix, n: int, v: Matrix) -> Matrix:
        """
        Product of the column vectors u in A_m and v in A_n.
        """
        self.require(0, m + n)
        t = self.mult[(m, n)]
        acc = self.field.reduce(np.tensordot(t, u.entries[:, 0], axes=([1], [0])))
        return Matrix(self.field, self.field.matmul(acc, v.entries))

    def element(self, n: int, word: tuple[int, ...]) -> Matrix:
        """
        Coordinates of the class of a word of length n.
        """
        vec = Matrix.identity(self.field, 1)
        for k, a in enumerate(word):
            vec = self.right_generator(a, k) @ vec
        return vec

    @property
    def is_finite(self) -> bool:
        return 0 in self.component_dims

    @property
    def top_degree(self) -> int:
        """
        Largest n with A_n != 0; only meaningful for finite algebras.
        """
        if not self.is_finite:
            raise NotFiniteError(f'The algebra has no vanishing component up to degree {self.N}')
        return max(n for n, d in enumerate(self.component_dims) if d > 0)

    @property
    def socle_degree(self) -> int:
        """
        top_degree of a finite algebra; otherwise N, the top degree of the
        finite-dimensional quotient A / A_{>N} that is actually stored.
        """
        return self.top_degree if self.is_finite else self.N

    def is_associative(self) -> bool:
        field = self.field
        for (a, b), tab in self.mult.items():
            for c in range(0, self.N - a - b + 1):
                tbc = self.mult[(b, c)]
                left = np.tensordot(self.mult[(a + b, c)], tab, axes=([1], [0]))
                right = np.tensordot(self.mult[(a, b + c)], tbc, axes=([2], [0]))
                left = field.reduce(np.transpose(left, (0, 2, 3, 1)))
                if not np.array_equal(left, field.reduce(right)):
                    return False
        return True

    def generated_in_degree_one(self) -> bool:
        for n in range(1, self.N):
            cols = [self.left_generator(a, n) for a in range(self.g)]
            if rank(Matrix.hstack(self.field, cols, rows=self.dim(n + 1))) != self.dim(n + 1):
                return False
        return True

    def opposite(self) -> 'TruncatedAlgebra':
        """
        The truncation of the opposite presentation. Flip-symmetric
        presentations are their own opposite.
        """
        if self.presentation.is_flip_symmetric:
            return self
        if self._opposite is None:
            self._opposite = TruncatedAlgebra(opposite(self.presentation), self.N)
            self._opposite._opposite = self
        return self._opposite

    def __repr__(self) -> str:
        return f'TruncatedAlgebra({self.presentation}, dims={self.component_dims})'


def truncate_algebra(pres: QuadraticPresentation, N: int) -> TruncatedAlgebra:
    return TruncatedAlgebra(pres, N)


def hilbert_function(alg: TruncatedAlgebra) -> list[int]:
    return list(alg.component_dims)


def finite_truncation(pres: QuadraticPresentation, max_degree: int=None) -> TruncatedAlgebra:
    """
    Truncate far enough that a zero component appears, i.e. the whole
    algebra is captured.
    """
    N = pres.g + 1 if max_degree is None else max_degree
    alg = TruncatedAlgebra(pres, N)
    if not alg.is_finite:
        raise NotFiniteError(f'{pres} has no vanishing component up to degree {N}')
    return alg
