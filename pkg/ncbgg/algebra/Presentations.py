from itertools import combinations
from typing import Any, Sequence
import logging
from ncbgg.Errors import DimensionMismatchError, ParseError
from ncbgg.linalg.Fields import Field, PrimeField
from ncbgg.linalg.Matrices import Matrix, kernel_basis, row_basis



def default_names(g: int) -> list[str]:
    if g <= 3:
        return ['x', 'y', 'z'][:g]
    return [f'x{i}' for i in range(1, g + 1)]


def dual_name(name: str) -> str:
    return name[:-1] if name.endswith("'") else name + "'"


class QuadraticPresentation:
    """
    The quadratic algebra T(V)/(R). Generators name a basis e_0..e_{g-1} of
    V; relations are rows in V (x) V with column index i*g + j for
    e_i (x) e_j. The rows are reduced to their rref basis on construction,
    so two presentations are equal iff they have the same relation span.
    """
    def __init__(self, field: Field, generators: Sequence[str], relations: Matrix) -> None:
        g = len(generators)
        if g == 0:
            raise ParseError('A presentation needs at least one generator')
        if len(set(generators)) != g:
            raise ParseError(f'Generator names must be distinct, got {list(generators)}')
        if relations.cols != g * g:
            raise DimensionMismatchError(f'Relations need {g * g} columns for {g} generators, got {relations.cols}')
        self.field = field
        self.generators = list(generators)
        self.relations = row_basis(relations)

    @property
    def g(self) -> int:
        return len(self.generators)

    @property
    def num_relations(self) -> int:
        return self.relations.rows

    def coefficient(self, r: int, a: int, b: int) -> Any:
        return self.relations.entries[r, a * self.g + b]

    def flipped_relations(self) -> Matrix:
        g = self.g
        perm = [b * g + a for a in range(g) for b in range(g)]
        return self.relations.take_cols(perm)

    @property
    def is_flip_symmetric(self) -> bool:
        return row_basis(self.flipped_relations()) == self.relations

    def same_algebra(self, other: 'QuadraticPresentation') -> bool:
        return self.field == other.field and self.g == other.g and self.relations == other.relations

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadraticPresentation):
            return NotImplemented
        return self.same_algebra(other) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.field, tuple(self.generators), self.relations))

    def __repr__(self) -> str:
        return f'QuadraticPresentation({self.field}, {self.generators}, {self.num_relations} relations)'


def koszul_dual(pres: QuadraticPresentation) -> QuadraticPresentation:
    """
    T(V')/(R^perp), where R^perp annihilates R under
    <a (x) b, x (x) y> = a(x) b(y). In coordinates this is the null space of
    the relation matrix.
    """
    perp = kernel_basis(pres.relations)
    logging.debug('  Koszul dual: dim R = %d, dim R^perp = %d', pres.num_relations, perp.rows)
    return QuadraticPresentation(pres.field, [dual_name(n) for n in pres.generators], perp)


def opposite(pres: QuadraticPresentation) -> QuadraticPresentation:
    return QuadraticPresentation(pres.field, pres.generators, pres.flipped_relations())


def cofree_dual(pres: QuadraticPresentation) -> QuadraticPresentation:
    """
    The algebra whose cofree modules pair with free modules over pres in the
    BGG functors, i.e. the opposite of the Koszul dual.
    """
    return koszul_dual(opposite(pres))


def relation_rows(field: Field, g: int, rows: list[dict[tuple[int, int], Any]]) -> Matrix:
    arr = field.zeros((len(rows), g * g))
    for r, terms in enumerate(rows):
        for (a, b), c in terms.items():
            arr[r, a * g + b] = field.reduce(arr[r, a * g + b] + field.parse(c))
    return Matrix(field, field.coerce(arr), shape=(len(rows), g * g))


def free_algebra(field: Field, g: int, names: Sequence[str]=None) -> QuadraticPresentation:
    return QuadraticPresentation(field, names or default_names(g), Matrix.zeros(field, 0, g * g))


def polynomial(field: Field, g: int, names: Sequence[str]=None) -> QuadraticPresentation:
    rows = [{(i, j): 1, (j, i): -1} for i, j in combinations(range(g), 2)]
    return QuadraticPresentation(field, names or default_names(g), relation_rows(field, g, rows))


def exterior(field: Field, g: int, names: Sequence[str]=None) -> QuadraticPresentation:
    rows = [{(i, i): 1} for i in range(g)]
    rows += [{(i, j): 1, (j, i): 1} for i, j in combinations(range(g), 2)]
    return QuadraticPresentation(field, names or [f'Y{i}' for i in range(1, g + 1)], relation_rows(field, g, rows))


def sklyanin(field: Field, a: Any, b: Any, c: Any) -> QuadraticPresentation:
    x, y, z = 0, 1, 2
    rows = [
        {(y, z): a, (z, y): b, (x, x): c},
        {(z, x): a, (x, z): b, (y, y): c},
        {(x, y): a, (y, x): b, (z, z): c}]
    return QuadraticPresentation(field, default_names(3), relation_rows(field, 3, rows))


def quantum_plane(field: Field, q: Any) -> QuadraticPresentation:
    return QuadraticPresentation(field, default_names(2),
        relation_rows(field, 2, [{(0, 1): 1, (1, 0): -field.parse(q)}]))


def skew_polynomial(field: Field, a: Any, b: Any, c: Any) -> QuadraticPresentation:
    x, y, z = 0, 1, 2
    rows = [
        {(y, z): 1, (z, y): -field.parse(a)},
        {(z, x): 1, (x, z): -field.parse(b)},
        {(x, y): 1, (y, x): -field.parse(c)}]
    return QuadraticPresentation(field, default_names(3), relation_rows(field, 3, rows))


def sklyanin_curve_points(field: PrimeField, a: Any, b: Any, c: Any) -> int:
    """
    Number of F_p-points of the plane cubic
    (a^3 + b^3 + c^3) xyz - abc (x^3 + y^3 + z^3) = 0, counted independently
    of any point-scheme computation.
    """
    p = field.p
    a, b, c = (field.parse(t) for t in (a, b, c))
    u = (a**3 + b**3 + c**3) % p
    v = (a * b * c) % p
    count = 0
    for x in range(p):
        for y in range(p):
            for z in range(p):
                if (x, y, z) == (0, 0, 0):
                    continue
                first = x if x != 0 else (y if y != 0 else z)
                if first != 1:
                    continue
                if (u * x * y * z - v * (x**3 + y**3 + z**3)) % p == 0:
                    count += 1
    return count
