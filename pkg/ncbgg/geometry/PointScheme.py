from dataclasses import dataclass
from itertools import product
from typing import Any, Optional, Sequence
import logging
import numpy as np
from ncbgg.Errors import InvalidFieldError, NoAutomorphismError, NotAPointError, ParseError
from ncbgg.algebra.Presentations import QuadraticPresentation
from ncbgg.linalg.Fields import PrimeField



@dataclass(frozen=True, order=True)
class ProjPoint:
    """
    A point of P(V'), i.e. a nonzero functional on the degree-one piece up
    to scalars. Coordinates are normalized so the first nonzero one is 1.
    """
    coords: tuple[int, ...]

    @staticmethod
    def normalized(field: PrimeField, coords: Sequence[Any]) -> 'ProjPoint':
        values = [field.parse(c) for c in coords]
        lead = next((v for v in values if v != 0), None)
        if lead is None:
            raise ParseError('The zero vector is not a projective point')
        inv = field.inv(lead)
        return ProjPoint(tuple(int(v * inv % field.p) for v in values))

    @property
    def g(self) -> int:
        return len(self.coords)

    def perp(self, field: PrimeField) -> np.ndarray:
        """
        Rows spanning the annihilator of this functional in V.
        """
        g = self.g
        k = next(i for i, c in enumerate(self.coords) if c != 0)
        rows = []
        for i in range(g):
            if i == k:
                continue
            row = np.zeros(g, dtype=np.int64)
            row[i] = 1
            row[k] = (-self.coords[i]) % field.p
            rows.append(row)
        return np.array(rows, dtype=np.int64).reshape(len(rows), g)

    def to_json(self) -> list[int]:
        return list(self.coords)

    def __str__(self) -> str:
        return '(' + ':'.join(str(c) for c in self.coords) + ')'


def parse_point(field: PrimeField, text: str) -> ProjPoint:
    """
    Read "1:0:2" or "1,0,2".
    """
    tokens = text.strip().strip('()').replace(',', ':').split(':')
    return ProjPoint.normalized(field, [t.strip() for t in tokens if t.strip() != ''])


def projective_points(field: PrimeField, g: int) -> list[ProjPoint]:
    """
    All (p^g - 1)/(p - 1) points of P^{g-1}(F_p), sorted.
    """
    points = []
    for k in range(g):
        for tail in product(range(field.p), repeat=g - k - 1):
            points.append(ProjPoint(tuple([0] * k + [1] + list(tail))))
    return sorted(points)



class PointScheme:
    """
    The F_p-points of the zero locus of the multilinearized relations in
    P(V') x P(V'). A pair (p, q) satisfies sum_{a,b} c_{ab} p_a q_b = 0 for
    every relation sum c_{ab} e_a e_b: p evaluates the first letter, q the
    second. In a point module the functional on the first letter is the
    successor of the one on the second, so sigma maps p to q.
    """
    def __init__(self, field: PrimeField, pairs: list[tuple[ProjPoint, ProjPoint]]) -> None:
        self.field = field
        self.pairs = sorted(pairs)
        partners: dict[ProjPoint, list[ProjPoint]] = {}
        for p, q in self.pairs:
            partners.setdefault(p, []).append(q)
        self.points = sorted(partners.keys())
        self._members = set(self.points)
        self.predecessors: dict[ProjPoint, list[ProjPoint]] = {}
        for p, q in self.pairs:
            self.predecessors.setdefault(q, []).append(p)
        self.is_graph = all(len(qs) == 1 for qs in partners.values())
        self.sigma: Optional[dict[ProjPoint, ProjPoint]] = None
        self.sigma_inverse: Optional[dict[ProjPoint, ProjPoint]] = None
        if self.is_graph:
            self.sigma = {p: qs[0] for p, qs in partners.items()}
            images = set(self.sigma.values())
            if images == set(self.points):
                self.sigma_inverse = {q: p for p, q in self.sigma.items()}

    @property
    def is_bijective(self) -> bool:
        return not self.sigma_inverse is None

    def __len__(self) -> int:
        return len(self.points)

    def __contains__(self, p: ProjPoint) -> bool:
        return p in self._members

    def failure_degree(self, p: ProjPoint) -> Optional[int]:
        """
        First degree in which the pairs leave no unique way to extend P(p):
        degree n + 1 needs a unique partner r with (r, p_n) a pair, where
        p_1 = p. None if the chain closes up before that happens.
        """
        seen, current = set(), p
        for n in range(1, len(self.points) + 2):
            if current in seen:
                return None
            seen.add(current)
            partners = self.predecessors.get(current, [])
            if len(partners) != 1:
                return n + 1
            current = partners[0]
        return None

    def require_automorphism(self) -> None:
        if not self.is_graph:
            raise NoAutomorphismError('The point scheme is not the graph of a map; some point has several partners')
        if not self.is_bijective:
            raise NoAutomorphismError('The point scheme is a graph, but sigma is not a bijection of its points')

    def power(self, p: ProjPoint, exponent: int) -> ProjPoint:
        """
        sigma^exponent (p).
        """
        self.require_automorphism()
        step = self.sigma if exponent >= 0 else self.sigma_inverse
        for _ in range(abs(exponent)):
            p = step[p]
        return p

    def orbits(self) -> list[list[ProjPoint]]:
        """
        The cycles of sigma, each starting at its smallest point.
        """
        self.require_automorphism()
        seen, out = set(), []
        for p in self.points:
            if p in seen:
                continue
            cycle = [p]
            seen.add(p)
            q = self.sigma[p]
            while q != p:
                cycle.append(q)
                seen.add(q)
                q = self.sigma[q]
            out.append(cycle)
        return out

    def cycle_type(self) -> dict[int, int]:
        counts: dict[int, int] = {}
        for cycle in self.orbits():
            counts[len(cycle)] = counts.get(len(cycle), 0) + 1
        return dict(sorted(counts.items()))

    def to_json(self) -> dict[str, Any]:
        index = {p: i for i, p in enumerate(self.points)}
        out: dict[str, Any] = {
            'field': self.field.to_json(),
            'points': [p.to_json() for p in self.points],
            'pairs': [[p.to_json(), q.to_json()] for p, q in self.pairs],
            'is_graph': self.is_graph,
            'sigma': None,
            'orbits': None,
        }
        if self.is_bijective:
            out['sigma'] = [index[self.sigma[p]] for p in self.points]
            out['orbits'] = [[index[p] for p in cycle] for cycle in self.orbits()]
        return out

    def __repr__(self) -> str:
        return f'PointScheme({self.field}, {len(self.points)} points, {len(self.pairs)} pairs)'


def enumerate_point_scheme(pres: QuadraticPresentation) -> PointScheme:
    """
    Exhaustive search over P(V') x P(V'). For each relation with coefficient
    matrix C the values p^T C q over all pairs are one matrix product.
    """
    field = pres.field
    if not isinstance(field, PrimeField):
        raise InvalidFieldError(f'Point schemes are enumerated over prime fields, got {field}')
    g = pres.g
    points = projective_points(field, g)
    P = np.array([p.coords for p in points], dtype=np.int64).reshape(len(points), g)
    vanishing = np.ones((len(points), len(points)), dtype=bool)
    for r in range(pres.num_relations):
        C = np.asarray(pres.relations.entries[r, :], dtype=np.int64).reshape(g, g)
        values = field.matmul(field.matmul(P, C), P.T)
        vanishing &= values == 0
    pairs = [(points[i], points[j]) for i, j in zip(*np.nonzero(vanishing))]
    logging.info('Point scheme over %s: %d pairs among %d points', field, len(pairs), len(points))
    return PointScheme(field, pairs)


def orbit_length(scheme: PointScheme, p: ProjPoint, exponent: int=-1, bound: int=10) -> Optional[int]:
    """
    Least n <= bound with (sigma^exponent)^n (p) = p, or None if the orbit
    is longer than bound.
    """
    scheme.require_automorphism()
    if not p in scheme:
        raise NotAPointError(f'{p} is not a point of the scheme', degree=scheme.failure_degree(p))
    q = p
    for n in range(1, bound + 1):
        q = scheme.power(q, exponent)
        if q == p:
            return n
    return None
