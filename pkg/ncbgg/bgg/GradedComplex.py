from typing import Any, Optional
import logging
from ncbgg.Errors import DimensionMismatchError, PresentationMismatchError
from ncbgg.Window import Window
from ncbgg.Windowed import Windowed
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.linalg.Matrices import Matrix, column_kernel, image_basis, rank, solve
from ncbgg.module.GradedModule import GradedModule, direct_sum

ChainMap = dict[int, dict[int, Matrix]]



class GradedComplex(Windowed):
    """
    A cochain complex of graded modules. terms[p] sits in cohomological
    position p and differentials[p][u] is d^p on internal degree u, a map
    C^p_u -> C^{p+1}_u; absent entries are zero.

    kind is 'free', 'cofree' or 'module'. For the first two, anchors[p]
    lists the generator degrees (free) or socle degrees (cofree) of the
    summands of C^p.

    The valid window is the range of internal degrees where every term is
    known. Below it all terms vanish unless lower was given explicitly
    (then the data below is unknown, as for product totalizations of
    truncated input).
    """
    def __init__(self, algebra: TruncatedAlgebra, terms: dict[int, GradedModule], differentials: ChainMap,
            kind: str='module', anchors: dict[int, list[int]]=None, lower: int=None, upper: int=None,
            name: str=None) -> None:
        self.algebra = algebra
        self.field = algebra.field
        self.terms = {p: m for p, m in terms.items() if not m.is_zero}
        self.differentials = {p: dict(per) for p, per in differentials.items() if p in self.terms}
        self.kind = kind
        self.anchors = {p: sorted(a) for p, a in (anchors or {}).items() if len(a) > 0}
        self.name = name
        for m in self.terms.values():
            if not m.algebra is algebra and not m.algebra.presentation.same_algebra(algebra.presentation):
                raise PresentationMismatchError('All terms of a complex must be modules over the same algebra')
        los = [m.lo for m in self.terms.values()]
        open_tops = [m.hi for m in self.terms.values() if not m.bounded]
        tops = [m.hi for m in self.terms.values()]
        self._open_below = not lower is None
        self._open_above = len(open_tops) > 0 or not upper is None
        lb = lower if self._open_below else (min(los) if len(los) > 0 else 0)
        if len(open_tops) > 0:
            ub = min(open_tops)
        else:
            ub = max(tops) if len(tops) > 0 else 0
        if not upper is None:
            ub = min(ub, upper)
        self._window = Window(name=name or 'complex', lower_bound=lb, upper_bound=ub)

    @property
    def window(self) -> Window:
        return self._window

    @property
    def truncation(self) -> Optional[int]:
        return self.algebra.N if self._open_above else None

    @property
    def is_zero(self) -> bool:
        return len(self.terms) == 0

    def positions(self) -> list[int]:
        return sorted(self.terms.keys())

    def degrees(self) -> range:
        """
        Internal degrees inside the window where some term is nonzero.
        """
        if self.is_zero:
            return range(0)
        lo = max(self.window.lower_bound, min(m.lo for m in self.terms.values()))
        hi = min(self.window.upper_bound, max(m.hi for m in self.terms.values()))
        return range(lo, hi + 1)

    def _check_degree(self, u: int) -> None:
        w = self.window
        if (u < w.lower_bound and self._open_below) or (u > w.upper_bound and self._open_above):
            self.require(u, u)

    def dim(self, p: int, u: int) -> int:
        self._check_degree(u)
        term = self.terms.get(p, None)
        if term is None or u < term.lo or u > term.hi:
            return 0
        return term.dim(u)

    def differential(self, p: int, u: int) -> Matrix:
        d = self.differentials.get(p, {}).get(u, None)
        if d is None:
            return Matrix.zeros(self.field, self.dim(p + 1, u), self.dim(p, u))
        return d

    def is_square_zero(self) -> bool:
        for p in self.positions():
            if not p + 1 in self.terms:
                continue
            for u in self.degrees():
                if not (self.differential(p + 1, u) @ self.differential(p, u)).is_zero:
                    logging.debug('  d^%d d^%d is nonzero in degree %d', p + 1, p, u)
                    return False
        return True

    def cohomology_dim(self, p: int, u: int) -> int:
        n = self.dim(p, u)
        if n == 0:
            return 0
        return n - rank(self.differential(p, u)) - rank(self.differential(p - 1, u))

    def cohomology_table(self, degrees: range=None) -> dict[int, dict[int, int]]:
        """
        Nonzero dims of h^p(C)_u, keyed by position and then degree.
        """
        degrees = self.degrees() if degrees is None else degrees
        table: dict[int, dict[int, int]] = {}
        for p in self.positions():
            for u in degrees:
                h = self.cohomology_dim(p, u)
                if h != 0:
                    table.setdefault(p, {})[u] = h
        return table

    def is_exact(self, degrees: range=None, except_positions: tuple[int, ...]=()) -> bool:
        table = self.cohomology_table(degrees)
        return all(p in except_positions for p in table.keys())

    def _known_term(self, p: int) -> GradedModule:
        term = self.terms[p]
        w = self.window
        if term.bounded and not self._open_above and not self._open_below:
            return term
        return term.restrict(max(term.lo, w.lower_bound), min(term.hi, w.upper_bound))

    def cycles(self, p: int) -> GradedModule:
        """
        Z^p as a submodule of C^p (restricted to the window).
        """
        term = self._known_term(p)
        return term.submodule({u: column_kernel(self.differential(p, u)) for u in term.degrees()})

    def boundaries(self, p: int) -> GradedModule:
        term = self._known_term(p)
        return term.submodule({u: image_basis(self.differential(p - 1, u)) for u in term.degrees()})

    def cohomology_module(self, p: int) -> GradedModule:
        """
        h^p as the quotient Z^p / B^p, in the basis of the cycles.
        """
        term = self._known_term(p)
        spans = {}
        for u in term.degrees():
            z = column_kernel(self.differential(p, u))
            b = self.differential(p - 1, u)
            # coordinates of the boundaries in the kernel basis
            spans[u] = image_basis(_coordinates(z, b))
        quo, _ = self.cycles(p).quotient(spans)
        return quo

    def shift(self, ell: int) -> 'GradedComplex':
        """
        C(ell), shifting every term: C(ell)^p_u = C^p_{u+ell}.
        """
        terms = {p: m.shift(ell) for p, m in self.terms.items()}
        diffs = {p: {u - ell: d for u, d in per.items()} for p, per in self.differentials.items()}
        anchors = {p: [s - ell for s in a] for p, a in self.anchors.items()}
        return GradedComplex(self.algebra, terms, diffs, kind=self.kind, anchors=anchors,
            lower=self.window.lower_bound - ell if self._open_below else None,
            upper=self.window.upper_bound - ell if self._open_above else None, name=self.name)

    def suspend(self, i: int) -> 'GradedComplex':
        """
        Sigma^i C with (Sigma^i C)^p = C^{p+i} and differential (-1)^i d.
        """
        sign = -1 if i % 2 != 0 else 1
        terms = {p - i: m for p, m in self.terms.items()}
        diffs = {p - i: {u: d.scale(sign) for u, d in per.items()} for p, per in self.differentials.items()}
        anchors = {p - i: a for p, a in self.anchors.items()}
        return GradedComplex(self.algebra, terms, diffs, kind=self.kind, anchors=anchors,
            lower=self.window.lower_bound if self._open_below else None,
            upper=self.window.upper_bound if self._open_above else None, name=self.name)

    def restrict_degrees(self, lo: int, hi: int) -> 'GradedComplex':
        """
        The complex of quotients C_{>=lo} / C_{>hi}, all terms bounded.
        """
        self.require(lo, hi)
        terms = {p: m.restrict(lo, hi) for p, m in self.terms.items()}
        diffs = {p: {u: d for u, d in per.items() if lo <= u <= hi} for p, per in self.differentials.items()}
        return GradedComplex(self.algebra, terms, diffs, kind='module', name=self.name)

    def brutal_truncation(self, lo: int, hi: int) -> 'GradedComplex':
        """
        Keep the terms in positions lo..hi and the differentials between them.
        """
        terms = {p: m for p, m in self.terms.items() if lo <= p <= hi}
        diffs = {p: per for p, per in self.differentials.items() if lo <= p < hi}
        anchors = {p: a for p, a in self.anchors.items() if lo <= p <= hi}
        return GradedComplex(self.algebra, terms, diffs, kind=self.kind, anchors=anchors,
            lower=self.window.lower_bound if self._open_below else None,
            upper=self.window.upper_bound if self._open_above else None, name=self.name)

    def to_json(self) -> dict[str, Any]:
        positions = []
        for p in self.positions():
            positions.append({
                'position': p,
                'anchors': self.anchors.get(p, []),
                'piece_dims': {str(u): self.dim(p, u) for u in self.degrees() if self.dim(p, u) > 0},
            })
        diffs = {}
        for p in self.positions():
            per = {str(u): self.differential(p, u).tolist() for u in self.degrees()
                if self.dim(p, u) > 0 and self.dim(p + 1, u) > 0}
            if len(per) > 0:
                diffs[str(p)] = per
        return {
            'kind': self.kind,
            'window': [self.window.lower_bound, self.window.upper_bound],
            'positions': positions,
            'differentials': diffs,
        }

    def __repr__(self) -> str:
        shape = {p: self.terms[p].piece_dims() for p in self.positions()}
        return f'GradedComplex({self.kind}, {shape})'


def _coordinates(basis: Matrix, vectors: Matrix) -> Matrix:
    if basis.cols == 0 or vectors.cols == 0:
        return Matrix.zeros(basis.field, basis.cols, vectors.cols)
    return solve(basis, vectors)


def zero_complex(algebra: TruncatedAlgebra) -> GradedComplex:
    return GradedComplex(algebra, {}, {}, name='0')


def module_complex(module: GradedModule, position: int=0, kind: str='module',
        anchors: list[int]=None) -> GradedComplex:
    """
    The complex with the single term module in the given position.
    """
    return GradedComplex(module.algebra, {position: module}, {}, kind=kind,
        anchors={position: anchors or []}, name=module.name)


def _joint_degrees(a: GradedComplex, b: GradedComplex) -> tuple[int, int]:
    """
    Internal degrees where both complexes are known. A complex that is not
    open on a side vanishes past its terms there, so only open sides bound.
    """
    below = [c.window.lower_bound for c in (a, b) if c._open_below]
    above = [c.window.upper_bound for c in (a, b) if c._open_above]
    lower = max(below) if len(below) > 0 else min(a.window.lower_bound, b.window.lower_bound)
    upper = min(above) if len(above) > 0 else max(a.window.upper_bound, b.window.upper_bound)
    return lower, upper


def is_chain_map(f: ChainMap, source: GradedComplex, target: GradedComplex) -> bool:
    """
    Whether f^{p+1} d_source^p = d_target^p f^p in every degree of the
    common window.
    """
    field = source.field
    positions = sorted(set(source.positions()) | set(target.positions()))
    lower, upper = _joint_degrees(source, target)
    degrees = range(lower, upper + 1)
    for p in positions:
        for u in degrees:
            fp = f.get(p, {}).get(u, Matrix.zeros(field, target.dim(p, u), source.dim(p, u)))
            fq = f.get(p + 1, {}).get(u, Matrix.zeros(field, target.dim(p + 1, u), source.dim(p + 1, u)))
            if not (fq @ source.differential(p, u) - target.differential(p, u) @ fp).is_zero:
                return False
    return True


def mapping_cone(f: ChainMap, source: GradedComplex, target: GradedComplex) -> GradedComplex:
    """
    cone(f)^p = source^{p+1} + target^p with d(x, y) = (-dx, f x + dy).
    """
    alg, field = source.algebra, source.field
    if not source.algebra.presentation.same_algebra(target.algebra.presentation):
        raise PresentationMismatchError('A chain map needs source and target over the same algebra')
    positions = sorted(set(p - 1 for p in source.positions()) | set(target.positions()))
    terms, diffs = {}, {}
    lower, upper = _joint_degrees(source, target)
    for p in positions:
        parts = [m for m in (source.terms.get(p + 1), target.terms.get(p)) if not m is None]
        terms[p] = direct_sum(parts, algebra=alg)
    for p in positions:
        per = {}
        for u in range(lower, upper + 1):
            rows = [source.dim(p + 2, u), target.dim(p + 1, u)]
            cols = [source.dim(p + 1, u), target.dim(p, u)]
            fmap = f.get(p + 1, {}).get(u, Matrix.zeros(field, target.dim(p + 1, u), source.dim(p + 1, u)))
            if fmap.shape != (rows[1], cols[0]):
                raise DimensionMismatchError(f'Chain map component f^{p + 1} in degree {u} has shape {fmap.shape}')
            per[u] = Matrix.block(field, rows, cols, {
                (0, 0): -source.differential(p + 1, u),
                (1, 0): fmap,
                (1, 1): target.differential(p, u)})
        diffs[p] = per
    return GradedComplex(alg, terms, diffs, lower=lower if source._open_below or target._open_below else None,
        upper=upper if source._open_above or target._open_above else None, name='cone')


def total_differential(field: Any, sources: list[tuple[Any, int]], targets: list[tuple[Any, int]], arrow: Any) -> Matrix:
    """
    Assemble one differential of a total complex. sources and targets list
    (block key, block size) in layout order; arrow(src_key, tgt_key) returns
    the component between two blocks or None if it is zero.
    """
    rows = [n for _, n in targets]
    cols = [n for _, n in sources]
    parts = {}
    for j, (ks, ns) in enumerate(sources):
        for i, (kt, nt) in enumerate(targets):
            if ns == 0 or nt == 0:
                continue
            m = arrow(ks, kt)
            if not m is None:
                parts[(i, j)] = m
    return Matrix.block(field, rows, cols, parts)
