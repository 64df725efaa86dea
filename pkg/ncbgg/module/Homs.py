import numpy as np
from ncbgg.Errors import PresentationMismatchError, UnsupportedInputError
from ncbgg.linalg.Matrices import Matrix, column_kernel
from ncbgg.module.GradedModule import GradedModule

GradedMap = dict[int, Matrix]



class HomSpace:
    """
    The space of degree-0 homomorphisms source -> target. A map is a
    family h_t : source_t -> target_t; it is stored as one vector that
    concatenates the row-major entries of h_t over the degrees in
    self.degrees. basis holds a basis of the Hom space as columns.
    """
    def __init__(self, source: GradedModule, target: GradedModule) -> None:
        if not source.bounded or not target.bounded:
            raise UnsupportedInputError('Hom spaces are computed between bounded modules; restrict to a window first')
        if not source.algebra.presentation.same_algebra(target.algebra.presentation):
            raise PresentationMismatchError('Homomorphisms need modules over the same algebra')
        self.source = source
        self.target = target
        self.field = source.field
        self.degrees = [t for t in source.degrees() if source.dim(t) > 0 and target.dim(t) > 0]
        self.offsets: dict[int, int] = {}
        size = 0
        for t in self.degrees:
            self.offsets[t] = size
            size += target.dim(t) * source.dim(t)
        self.ambient_dim = size
        self.basis = self._solve()

    def _block(self, t: int) -> tuple[int, int]:
        return self.offsets[t], self.target.dim(t) * self.source.dim(t)

    def _solve(self) -> Matrix:
        field, M, N = self.field, self.source, self.target
        rows = []
        for t in range(min(M.lo, N.lo) - 1, max(M.hi, N.hi) + 1):
            for a in range(M.algebra.g):
                n_rows = N.dim(t + 1) * M.dim(t)
                if n_rows == 0:
                    continue
                eq = field.zeros((n_rows, self.ambient_dim))
                if t + 1 in self.offsets:
                    start, width = self._block(t + 1)
                    coeff = Matrix.identity(field, N.dim(t + 1)).kron(M.action(a, t).T)
                    eq[:, start:start + width] = coeff.entries
                if t in self.offsets:
                    start, width = self._block(t)
                    coeff = N.action(a, t).kron(Matrix.identity(field, M.dim(t)))
                    eq[:, start:start + width] = field.reduce(eq[:, start:start + width] - coeff.entries)
                rows.append(eq)
        if self.ambient_dim == 0:
            return Matrix.zeros(field, 0, 0)
        if len(rows) == 0:
            return Matrix.identity(field, self.ambient_dim)
        system = Matrix(field, np.concatenate(rows, axis=0))
        return column_kernel(system)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def unvectorize(self, vec: Matrix) -> GradedMap:
        out = {}
        for t in self.degrees:
            start, width = self._block(t)
            block = vec.entries[start:start + width, 0]
            out[t] = Matrix(self.field, block.copy(), shape=(self.target.dim(t), self.source.dim(t)))
        return out

    def vectorize(self, h: GradedMap) -> Matrix:
        vec = self.field.zeros((self.ambient_dim, 1))
        for t in self.degrees:
            if t in h:
                start, width = self._block(t)
                vec[start:start + width, 0] = h[t].entries.reshape(width)
        return Matrix(self.field, vec)

    def basis_maps(self) -> list[GradedMap]:
        return [self.unvectorize(self.basis.take_cols([k])) for k in range(self.dim)]

    def random_map(self, rng: np.random.Generator) -> GradedMap:
        coeffs = Matrix(self.field, self.field.random(rng, (self.dim, 1)))
        return self.unvectorize(self.basis @ coeffs)


def hom_space(source: GradedModule, target: GradedModule) -> HomSpace:
    return HomSpace(source, target)


def compose(second: GradedMap, first: GradedMap, middle: GradedModule, source: GradedModule,
        target: GradedModule) -> GradedMap:
    """
    second o first for first : source -> middle and second : middle -> target.
    """
    field = source.field
    out = {}
    for t in source.degrees():
        f = first.get(t, Matrix.zeros(field, middle.dim(t), source.dim(t)))
        s = second.get(t, Matrix.zeros(field, target.dim(t), middle.dim(t)))
        out[t] = s @ f
    return out


def is_homomorphism(h: GradedMap, source: GradedModule, target: GradedModule) -> bool:
    field = source.field
    for t in range(source.lo, source.hi + 1):
        ht = h.get(t, Matrix.zeros(field, target.dim(t), source.dim(t)))
        hn = h.get(t + 1, Matrix.zeros(field, target.dim(t + 1), source.dim(t + 1)))
        for a in range(source.algebra.g):
            if not (hn @ source.action(a, t) - target.action(a, t) @ ht).is_zero:
                return False
    return True
