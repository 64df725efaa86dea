from typing import Any, Sequence
import numpy as np
from ncbgg.Errors import DimensionMismatchError, ParseError, PreconditionError, PresentationMismatchError, UnsupportedInputError
from ncbgg.Window import Window
from ncbgg.Windowed import Windowed
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.linalg.Fields import Field
from ncbgg.linalg.Matrices import Matrix, column_kernel, image_basis, left_inverse, quotient_basis



class GradedModule(Windowed):
    """
    A graded left module, given by its pieces M_lo..M_hi and the action of
    every degree-one generator x_a as matrices M_t -> M_{t+1}.

    Pieces below lo are zero. If bounded is set, pieces above hi are zero
    as well (finite modules, e.g. over a Frobenius algebra); otherwise the
    data above hi is unknown and reads there raise WindowTooSmallError
    (modules over a truncated infinite algebra).
    """
    def __init__(self, algebra: TruncatedAlgebra, lo: int, dims: Sequence[int], actions: Sequence[Sequence[Matrix]],
            bounded: bool=True, name: str=None, check: bool=True) -> None:
        self.algebra = algebra
        self.field = algebra.field
        self.lo = lo
        self.dims = list(dims)
        self.actions = [list(a) for a in actions]
        self.bounded = bounded
        self.name = name
        self._window = Window(name=name or 'module', lower_bound=lo, upper_bound=lo + len(self.dims) - 1)
        self._words: dict[tuple[int, int, int], Matrix] = {}
        if len(self.actions) != algebra.g:
            raise DimensionMismatchError(f'Expected actions for {algebra.g} generators, got {len(self.actions)}')
        for a, per_degree in enumerate(self.actions):
            if len(per_degree) != max(len(self.dims) - 1, 0):
                raise DimensionMismatchError(f'Generator {a} needs {len(self.dims) - 1} action matrices, got {len(per_degree)}')
            for k, m in enumerate(per_degree):
                if m.shape != (self.dims[k + 1], self.dims[k]):
                    raise DimensionMismatchError(
                        f'Action of generator {a} in degree {lo + k} has shape {m.shape}, expected {(self.dims[k + 1], self.dims[k])}')
        if check and not self.satisfies_relations():
            raise PreconditionError(f'The quadratic relations do not annihilate the module {self.name or ""}'.strip())

    @property
    def window(self) -> Window:
        return self._window

    @property
    def truncation(self) -> int:
        return self.algebra.N

    @property
    def hi(self) -> int:
        return self.lo + len(self.dims) - 1

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    @property
    def is_zero(self) -> bool:
        return self.bounded and self.total_dim == 0

    def degrees(self) -> range:
        return range(self.lo, self.hi + 1)

    def support(self) -> list[int]:
        return [t for t in self.degrees() if self.dim(t) > 0]

    def piece_dims(self) -> dict[int, int]:
        """
        Nonzero piece dimensions keyed by degree.
        """
        return {t: d for t, d in zip(self.degrees(), self.dims) if d > 0}

    def dim(self, t: int) -> int:
        if t < self.lo:
            return 0
        if t > self.hi:
            if self.bounded:
                return 0
            self.require(t, t)
        return self.dims[t - self.lo]

    def action(self, a: int, t: int) -> Matrix:
        """
        x_a : M_t -> M_{t+1}.
        """
        if t < self.lo or (self.bounded and t >= self.hi) or t + 1 < self.lo:
            return Matrix.zeros(self.field, self.dim(t + 1), self.dim(t))
        if t >= self.hi:
            self.require(t, t + 1)
        return self.actions[a][t - self.lo]

    def act_basis(self, n: int, j: int, t: int) -> Matrix:
        """
        Action of the basis element j of A_n as a map M_t -> M_{t+n}.
        """
        key = (n, j, t)
        if not key in self._words:
            if n == 0:
                self._words[key] = Matrix.identity(self.field, self.dim(t))
            else:
                word = self.algebra.words[n][j]
                k = self.algebra.words[n - 1].index(word[:-1])
                self._words[key] = self.act_basis(n - 1, k, t + 1) @ self.action(word[-1], t)
        return self._words[key]

    def act_element(self, n: int, coeffs: Matrix, t: int) -> Matrix:
        """
        Action of the element of A_n with coordinate column coeffs.
        """
        out = Matrix.zeros(self.field, self.dim(t + n), self.dim(t))
        for j in range(coeffs.rows):
            c = coeffs.entries[j, 0]
            if c != 0:
                out = out + self.act_basis(n, j, t).scale(c)
        return out

    def satisfies_relations(self) -> bool:
        pres = self.algebra.presentation
        g = pres.g
        for r in range(pres.num_relations):
            for t in range(self.lo, self.hi - 1):
                acc = Matrix.zeros(self.field, self.dim(t + 2), self.dim(t))
                for a in range(g):
                    for b in range(g):
                        c = pres.coefficient(r, a, b)
                        if c != 0:
                            acc = acc + (self.action(a, t + 1) @ self.action(b, t)).scale(c)
                if not acc.is_zero:
                    return False
        return True

    def shift(self, ell: int) -> 'GradedModule':
        """
        M(ell) with M(ell)_t = M_{t + ell}.
        """
        return GradedModule(self.algebra, self.lo - ell, self.dims, self.actions, bounded=self.bounded,
            name=self.name, check=False)

    def restrict(self, lo: int, hi: int) -> 'GradedModule':
        """
        M_{>=lo} / M_{>hi}, a bounded module.
        """
        if not self.bounded and hi > self.hi:
            self.require(self.lo, hi)
        dims = [self.dim(t) for t in range(lo, hi + 1)]
        actions = [[self.action(a, t) for t in range(lo, hi)] for a in range(self.algebra.g)]
        return GradedModule(self.algebra, lo, dims, actions, bounded=True, name=self.name, check=False)

    def trim(self) -> 'GradedModule':
        """
        Drop zero pieces at both ends of a bounded module.
        """
        if not self.bounded:
            return self
        supp = self.support()
        if len(supp) == 0:
            return zero_module(self.algebra)
        return self.restrict(supp[0], supp[-1])

    def socle(self, t: int) -> Matrix:
        """
        Columns spanning soc(M)_t, the joint kernel of all generators.
        """
        maps = [self.action(a, t) for a in range(self.algebra.g)]
        return column_kernel(Matrix.vstack(self.field, maps, cols=self.dim(t)))

    def socle_dims(self) -> dict[int, int]:
        return {t: self.socle(t).cols for t in self.degrees() if self.dim(t) > 0 and self.socle(t).cols > 0}

    def radical(self, t: int) -> Matrix:
        """
        Columns spanning (A_{>=1} M)_t.
        """
        images = [self.action(a, t - 1) for a in range(self.algebra.g)]
        return image_basis(Matrix.hstack(self.field, images, rows=self.dim(t)))

    def radical_series_dims(self) -> list[dict[int, int]]:
        """
        Piece dimensions of rad^k M for k = 0, 1, ... until zero.
        """
        current = self
        out = []
        while not current.is_zero and len(out) <= len(self.dims) + 1:
            out.append(current.piece_dims())
            current = current.submodule({t: current.radical(t) for t in current.degrees()})
        return out

    def submodule(self, bases: dict[int, Matrix]) -> 'GradedModule':
        """
        The submodule whose piece t is spanned by the independent columns
        bases[t]; the spans must be stable under the action.
        """
        bases = {t: bases.get(t, Matrix.zeros(self.field, self.dim(t), 0)) for t in self.degrees()}
        dims = [bases[t].cols for t in self.degrees()]
        lefts = {t: left_inverse(b) for t, b in bases.items()}
        actions = []
        for a in range(self.algebra.g):
            actions.append([lefts[t + 1] @ self.action(a, t) @ bases[t] for t in range(self.lo, self.hi)])
        return GradedModule(self.algebra, self.lo, dims, actions, bounded=self.bounded, name=self.name, check=False)

    def quotient(self, spans: dict[int, Matrix]) -> tuple['GradedModule', dict[int, Matrix]]:
        """
        M modulo the submodule spanned by the columns spans[t]. Also returns
        the projections M_t -> (M/S)_t.
        """
        sections, projections, dims = {}, {}, []
        for t in self.degrees():
            span = spans.get(t, Matrix.zeros(self.field, self.dim(t), 0))
            sec, proj = quotient_basis(span.T, self.dim(t))
            sections[t], projections[t] = sec, proj
            dims.append(proj.rows)
        actions = []
        for a in range(self.algebra.g):
            actions.append([projections[t + 1] @ self.action(a, t) @ sections[t].T for t in range(self.lo, self.hi)])
        quo = GradedModule(self.algebra, self.lo, dims, actions, bounded=self.bounded, name=self.name, check=False)
        return quo, projections

    def to_json(self) -> dict[str, Any]:
        names = self.algebra.presentation.generators
        return {
            'window': [self.lo, self.hi],
            'piece_dims': list(self.dims),
            'actions': {names[a]: [m.tolist() for m in self.actions[a]] for a in range(self.algebra.g)},
        }

    def __repr__(self) -> str:
        label = self.name or 'GradedModule'
        return f'{label}({self.piece_dims()})'


def _same_algebra(modules: Sequence[GradedModule]) -> TruncatedAlgebra:
    alg = modules[0].algebra
    for m in modules[1:]:
        if not m.algebra is alg and not m.algebra.presentation.same_algebra(alg.presentation):
            raise PresentationMismatchError('Modules over different algebras cannot be combined')
    return alg


def zero_module(algebra: TruncatedAlgebra, lo: int=0) -> GradedModule:
    return GradedModule(algebra, lo, [0], [[] for _ in range(algebra.g)], name='0', check=False)


def direct_sum(modules: Sequence[GradedModule], algebra: TruncatedAlgebra=None) -> GradedModule:
    modules = [m for m in modules if not m.is_zero]
    if len(modules) == 0:
        return zero_module(algebra)
    alg = _same_algebra(modules)
    lo = min(m.lo for m in modules)
    open_ended = [m.hi for m in modules if not m.bounded]
    hi = min(open_ended) if len(open_ended) > 0 else max(m.hi for m in modules)
    field = alg.field
    dims = [sum(m.dim(t) for m in modules) for t in range(lo, hi + 1)]
    actions = []
    for a in range(alg.g):
        per_degree = []
        for t in range(lo, hi):
            rows = [m.dim(t + 1) for m in modules]
            cols = [m.dim(t) for m in modules]
            per_degree.append(Matrix.block(field, rows, cols, {(i, i): m.action(a, t) for i, m in enumerate(modules)}))
        actions.append(per_degree)
    return GradedModule(alg, lo, dims, actions, bounded=len(open_ended) == 0, check=False)


def trivial_module(algebra: TruncatedAlgebra, degree: int=0) -> GradedModule:
    """
    k = A/A_{>=1}, concentrated in the given degree.
    """
    return GradedModule(algebra, degree, [1], [[] for _ in range(algebra.g)], name='k', check=False)


def regular_module(algebra: TruncatedAlgebra) -> GradedModule:
    """
    A as a left module over itself; bounded only if A is finite.
    """
    if algebra.is_finite:
        top = algebra.top_degree
        bounded = True
    else:
        top = algebra.N
        bounded = False
    dims = algebra.component_dims[:top + 1]
    actions = [[algebra.left_generator(a, t) for t in range(top)] for a in range(algebra.g)]
    return GradedModule(algebra, 0, dims, actions, bounded=bounded, name='A', check=False)


def regular_dual(algebra: TruncatedAlgebra) -> GradedModule:
    """
    A' with (A')_j = (A_{-j})' and the left action (a.f)(u) = f(u a).
    """
    top = algebra.socle_degree
    dims = [algebra.dim(-j) for j in range(-top, 1)]
    actions = [[algebra.right_generator(a, -j - 1).T for j in range(-top, 0)] for a in range(algebra.g)]
    return GradedModule(algebra, -top, dims, actions, name="A'", check=False)


def sum_of_shifts(base: GradedModule, blocks: Sequence[tuple[int, int]], name: str=None) -> GradedModule:
    """
    The direct sum over blocks (ell, m) of m copies of base(ell). Within a
    block, piece t is laid out copy-major: index c * dim base_{t+ell} + i.
    """
    blocks = [(ell, m) for ell, m in blocks if m > 0]
    alg, field = base.algebra, base.field
    if len(blocks) == 0:
        return zero_module(alg)
    lo = min(base.lo - ell for ell, _ in blocks)
    tops = [base.hi - ell for ell, _ in blocks]
    hi = max(tops) if base.bounded else min(tops)
    dims = [sum(m * base.dim(t + ell) for ell, m in blocks) for t in range(lo, hi + 1)]
    actions = []
    for a in range(alg.g):
        per_degree = []
        for t in range(lo, hi):
            rows = [m * base.dim(t + 1 + ell) for ell, m in blocks]
            cols = [m * base.dim(t + ell) for ell, m in blocks]
            parts = {(b, b): Matrix.identity(field, m).kron(base.action(a, t + ell)) for b, (ell, m) in enumerate(blocks)}
            per_degree.append(Matrix.block(field, rows, cols, parts))
        actions.append(per_degree)
    return GradedModule(alg, lo, dims, actions, bounded=base.bounded, name=name, check=False)


def free_module(algebra: TruncatedAlgebra, generator_degrees: Sequence[int]) -> GradedModule:
    """
    The direct sum of A(-s) over the given generator degrees.
    """
    return sum_of_shifts(regular_module(algebra), [(-s, 1) for s in generator_degrees], name='free')


def cofree_module(algebra: TruncatedAlgebra, socle_degrees: Sequence[int]) -> GradedModule:
    """
    The direct sum of A'(-s), whose socles sit in the given degrees.
    """
    return sum_of_shifts(regular_dual(algebra), [(-s, 1) for s in socle_degrees], name='cofree')


def quotient_by_generators(algebra: TruncatedAlgebra, indices: Sequence[int]) -> GradedModule:
    """
    A / sum_i A x_i for the listed generator indices.
    """
    reg = regular_module(algebra)
    spans = {}
    for t in reg.degrees():
        if t == 0:
            continue
        cols = [algebra.right_generator(i, t - 1) for i in indices]
        spans[t] = image_basis(Matrix.hstack(algebra.field, cols, rows=algebra.dim(t)))
    quo, _ = reg.quotient(spans)
    quo.name = 'A/(' + ','.join(algebra.presentation.generators[i] for i in indices) + ')'
    return quo.trim()


def _action_matrix(field: Field, m: Any, shape: tuple[int, int], a: int, t: int) -> Matrix:
    try:
        given = np.shape(m)
    except ValueError:
        raise ParseError(f'Action of generator {a} from degree {t} is not a rectangular matrix')
    empty = int(np.prod(given)) == 0 and shape[0] * shape[1] == 0
    if tuple(given) != shape and not empty:
        raise ParseError(f'Action of generator {a} from degree {t} must be {shape[0]}x{shape[1]}, got shape {tuple(given)}')
    return Matrix(field, np.zeros(shape, dtype=np.int64) if empty else m, shape=shape)


def module_from_maps(algebra: TruncatedAlgebra, lo: int, dims: Sequence[int],
        actions: dict[int, Sequence[Any]], name: str=None) -> GradedModule:
    """
    Build a bounded module from plain nested lists (e.g. parsed JSON).
    """
    field = algebra.field
    mats = []
    for a in range(algebra.g):
        per_degree = actions.get(a, None)
        if per_degree is None:
            per_degree = [np.zeros((dims[k + 1], dims[k]), dtype=np.int64) for k in range(len(dims) - 1)]
        if len(per_degree) != len(dims) - 1:
            raise ParseError(f'Generator {a} needs {len(dims) - 1} action matrices, got {len(per_degree)}')
        mats.append([_action_matrix(field, m, (dims[k + 1], dims[k]), a, lo + k) for k, m in enumerate(per_degree)])
    return GradedModule(algebra, lo, dims, mats, name=name)


def graded_vector_space(algebra: TruncatedAlgebra, lo: int, dims: Sequence[int], name: str=None) -> GradedModule:
    """
    Pieces with every generator acting as zero; used where only graded
    dimensions matter (e.g. RHom_A(k, N) as a complex of vector spaces).
    """
    actions = [[Matrix.zeros(algebra.field, dims[k + 1], dims[k]) for k in range(len(dims) - 1)] for _ in range(algebra.g)]
    return GradedModule(algebra, lo, dims, actions, name=name, check=False)


def matlis_dual(module: GradedModule) -> GradedModule:
    """
    M' with (M')_j = (M_{-j})' and x.f = f o x. This is naturally a right
    module, so it is returned as a left module over the opposite algebra
    (the same algebra for flip-symmetric presentations).
    """
    if not module.bounded:
        raise UnsupportedInputError('The Matlis dual is only computed for bounded modules')
    alg = module.algebra.opposite()
    dims = module.dims[::-1]
    actions = [[module.action(a, -j - 1).T for j in range(-module.hi, -module.lo)] for a in range(alg.g)]
    name = None if module.name is None else module.name + "'"
    return GradedModule(alg, -module.hi, dims, actions, name=name, check=False)
