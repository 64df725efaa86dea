from typing import Any, Iterable
import logging
from ncbgg.Errors import InconclusiveError, PreconditionError, PresentationMismatchError, WindowTooSmallError
from ncbgg.Window import Window
from ncbgg.Windowed import Windowed
from ncbgg.algebra.Presentations import cofree_dual
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.bgg.Functors import complete_cofree_resolution, free_resolution_complex, functor_F, functor_G
from ncbgg.bgg.GradedComplex import GradedComplex, module_complex, zero_complex
from ncbgg.module.Frobenius import Verdict, module_isomorphic, require_frobenius
from ncbgg.module.GradedModule import GradedModule, regular_module, trivial_module, zero_module
from ncbgg.module.Homs import hom_space
from ncbgg.module.Resolutions import minimal_free_resolution, minimal_injective_resolution, strip_injective_summands, suspend



class TailsObject(Windowed):
    """
    A complex over A seen in the tails category: only its cohomology in
    internal degrees cutoff..upper is trusted. Below the cutoff the
    cohomology may be torsion; above upper the truncation of A (or of a
    resolution) interferes.
    """
    def __init__(self, underlying: GradedComplex, cutoff: int, upper: int, name: str=None) -> None:
        self.underlying = underlying
        self.cutoff = cutoff
        self.upper = upper
        self.name = name
        self._window = Window(name=name or 'tails', lower_bound=cutoff, upper_bound=upper)

    @property
    def window(self) -> Window:
        return self._window

    @property
    def truncation(self) -> int:
        return self.underlying.algebra.N

    @property
    def algebra(self) -> TruncatedAlgebra:
        return self.underlying.algebra

    def degrees(self) -> range:
        return range(self.cutoff, self.upper + 1)

    def cohomology_dim(self, j: int, ell: int) -> int:
        self.require(ell, ell)
        return self.underlying.cohomology_dim(j, ell)

    def table(self) -> dict[int, dict[int, int]]:
        return self.underlying.cohomology_table(self.degrees())

    def is_zero(self) -> bool:
        return len(self.table()) == 0

    def equals(self, other: 'TailsObject') -> bool:
        """
        Equality of cohomology tables on the common trusted window.
        """
        lo, hi = max(self.cutoff, other.cutoff), min(self.upper, other.upper)
        degrees = range(lo, hi + 1)
        return self.underlying.cohomology_table(degrees) == other.underlying.cohomology_table(degrees)

    def twist(self, ell: int) -> 'TailsObject':
        return TailsObject(self.underlying.shift(ell), self.cutoff - ell, self.upper - ell, name=self.name)

    def suspend(self, i: int) -> 'TailsObject':
        return TailsObject(self.underlying.suspend(i), self.cutoff, self.upper, name=self.name)

    def to_json(self) -> dict[str, Any]:
        return {
            'cutoff': self.cutoff,
            'upper': self.upper,
            'cohomology': {str(j): {str(u): d for u, d in row.items()} for j, row in self.table().items()},
        }

    def __repr__(self) -> str:
        return f'TailsObject({self.name}, [{self.cutoff}, {self.upper}], {self.table()})'


def structure_sheaf(algA: TruncatedAlgebra, cutoff: int=0) -> TailsObject:
    """
    O = pi(A): the complex with the single term A in position 0.
    """
    complex_ = module_complex(regular_module(algA), kind='free', anchors=[0])
    return TailsObject(complex_, cutoff, algA.N, name='O')


def tails_from_module(N: GradedModule, cutoff: int=0, position: int=0) -> TailsObject:
    """
    pi(N) for a module N over A, placed in the given position.
    """
    complex_ = module_complex(N, position=position)
    return TailsObject(complex_, cutoff, complex_.window.upper_bound, name=N.name)


def default_cutoff(M: GradedModule) -> int:
    """
    1 - d - g_min, where d is the socle degree of the Frobenius algebra and
    g_min the lowest generator degree of M. F of the free half of a
    complete resolution of M has cohomology only in degrees <= -d - g_min.
    """
    d = require_frobenius(M.algebra)
    low = min(t for t in M.degrees() if M.dim(t) > 0)
    return 1 - d - low


def phi(M: GradedModule, algA: TruncatedAlgebra, right: int=None, cutoff: int=None) -> TailsObject:
    """
    phi(M) = pi F(C) for a complete cofree resolution C of M. C is cut to
    one free term on the left and right injective terms; the returned
    object records the degrees where this cut does not matter.
    """
    alg = M.algebra
    if not alg.presentation.same_algebra(cofree_dual(algA.presentation)):
        raise PresentationMismatchError(f'{alg.presentation} is not the cofree side of {algA.presentation}')
    d = require_frobenius(alg)
    if M.is_zero:
        return TailsObject(zero_complex(algA), 0 if cutoff is None else cutoff, algA.N, name='0')
    M = M.trim()
    cutoff = default_cutoff(M) if cutoff is None else cutoff
    top_piece = M.hi + d
    edge = algA.N - top_piece
    s0 = max(minimal_injective_resolution(M, 1).anchors[0])
    if right is None:
        right = max(edge + s0 + 1, 1)
    upper = min(edge, right - s0 - 1)
    if upper < cutoff:
        raise WindowTooSmallError(f'phi({M.name or "M"}) has no trusted degrees',
            needed=(cutoff, cutoff), truncation=cutoff + top_piece)
    C = complete_cofree_resolution(M, 1, right)
    FC = functor_F(C, algA)
    logging.info('phi(%s): trusted degrees %d..%d, %d injective terms', M.name or 'M', cutoff, upper, right)
    return TailsObject(FC, cutoff, upper, name=f'phi({M.name or "M"})')


def _desuspended_cycles(GN: GradedComplex, q: int) -> GradedModule:
    K = GN.cycles(q)
    return strip_injective_summands(suspend(K, -q))


def gamma(T: TailsObject, algLam: TruncatedAlgebra, trials: int=32, seed: int=0,
        check_sections: bool=False) -> GradedModule:
    """
    gamma(T) = Z^0 G(R omega T). The complex N of T is read on its trusted
    degrees r..U; then for q = r + b + 1 (b the top position of N) the
    cycles Z^q of G(N_{[r,U]}) agree with those of the untruncated
    resolution, and Sigma^{-q} Z^q is the answer up to injective summands.
    The result for q is checked against q + 1.
    With check_sections, the cohomology of N is first compared with the
    stabilized sections of its cohomology modules (see section_check).
    """
    N = T.underlying
    if N.is_zero or T.is_zero():
        return zero_module(algLam)
    if check_sections:
        bad = [r for r in section_check(T) if not r['ok']]
        if len(bad) > 0:
            raise PreconditionError(f'{T.name or "T"} differs from its sections in degrees '
                f'{sorted(set(r["ell"] for r in bad))}; raise the cutoff')
    a, b = min(N.positions()), max(N.positions())
    r, U = T.cutoff, T.upper
    q = r + b + 1
    needed = q - a + 3
    if U < needed:
        raise WindowTooSmallError(f'gamma needs trusted degrees up to {needed}, the tails object has {U}',
            needed=(r, needed), truncation=T.truncation + (needed - U))
    GN = functor_G(N.restrict_degrees(r, U), algLam)
    first = _desuspended_cycles(GN, q)
    second = _desuspended_cycles(GN, q + 1)
    verdict = module_isomorphic(first, second, trials=trials, seed=seed)
    if verdict == Verdict.NO:
        raise WindowTooSmallError(f'gamma did not stabilize between positions {q} and {q + 1}',
            needed=(r, needed + 1), truncation=T.truncation + 1)
    if verdict == Verdict.INCONCLUSIVE:
        raise InconclusiveError(f'Could not decide whether gamma stabilized after {trials} trials')
    logging.info('gamma(%s) has piece dims %s', T.name or 'T', first.piece_dims())
    return first


def tails_hom_dims(T: TailsObject, j: int, ells: Iterable[int]) -> list[int]:
    """
    dim Hom(O, h^j(T)(ell)) = dim h^j(T)_ell in the trusted window.
    """
    return [T.cohomology_dim(j, ell) for ell in ells]


def _sections_at(H: GradedModule, ell: int, n: int, upper: int) -> int:
    A = regular_module(H.algebra)
    source = A.restrict(n, min(upper - ell, A.hi))
    target = H.restrict(H.lo, upper).shift(ell)
    return hom_space(source, target).dim


def section_dims(H: GradedModule, ells: Iterable[int], upper: int=None) -> list[int]:
    """
    dim Hom_A(A_{>=n}, H(ell)) for n large, the sections of the sheaf of H
    twisted by ell. H is read up to degree upper. The A_{>=n} are linearly
    presented over a Koszul A, so degree n + 1 of the source is all that
    has to fit below upper - ell; n starts where H(ell)_n can be nonzero
    and grows until two successive values agree.
    """
    H = H.trim()
    upper = H.hi if upper is None else upper
    A = regular_module(H.algebra)
    out = []
    for ell in ells:
        if H.is_zero:
            out.append(0)
            continue
        n = max(0, H.lo - ell)
        bound = min(upper - ell, A.hi)
        found = None
        while n + 2 <= bound:
            now, after = _sections_at(H, ell, n, upper), _sections_at(H, ell, n + 1, upper)
            if now == after:
                found = now
                break
            n += 1
        if found is None:
            raise WindowTooSmallError(f'Sections in degree {ell} did not stabilize below degree {upper}',
                needed=(ell, n + 2 + ell), truncation=H.algebra.N + max(1, n + 2 - bound))
        logging.debug('  Sections in degree %d: %d (stable from n = %d)', ell, found, n)
        out.append(found)
    return out


def section_check(T: TailsObject) -> list[dict[str, Any]]:
    """
    Compare dim h^j(T)_ell with the stabilized sections of the module
    h^j(T), for every position j with trusted cohomology and every trusted
    degree where the sections can be read. gamma reads the complex itself
    in place of R omega; the two agree exactly where these rows are ok.
    """
    rows = []
    for j in sorted(T.table().keys()):
        H = T.underlying.cohomology_module(j)
        for ell in T.degrees():
            try:
                sections = section_dims(H, [ell], upper=T.upper)[0]
            except WindowTooSmallError:
                continue
            tails = T.cohomology_dim(j, ell)
            rows.append({'position': j, 'ell': ell, 'tails': tails, 'sections': sections, 'ok': tails == sections})
    return rows


def bass_support_identity(M: GradedModule, algA: TruncatedAlgebra, i_range: Iterable[int],
        T: TailsObject=None) -> list[dict[str, Any]]:
    """
    Compare mu^i(M) from the minimal injective resolution with
    sum_j dim h^j(phi M)_{i-j}.

    A position with nonzero cohomology in the trusted window must be
    readable in degree i - j, otherwise WindowTooSmallError. Any other
    position j of the complex counts as zero below the cutoff (torsion)
    but is unknown above the trusted upper bound; such rows come back with
    verdict 'inconclusive' and ok None.
    """
    i_range = list(i_range)
    if len(i_range) == 0:
        return []
    if M.is_zero:
        return [{'i': i, 'bass': 0, 'tails': 0, 'ok': True, 'verdict': 'ok'} for i in i_range]
    T = phi(M, algA) if T is None else T
    bass = minimal_injective_resolution(M, max(i_range) + 1).numbers
    table = T.table()
    rows = []
    for i in i_range:
        missing = [j for j in table.keys() if not T.cutoff <= i - j <= T.upper]
        if len(missing) > 0:
            raise WindowTooSmallError(f'mu^{i} needs h^j(phi M) in degrees {[i - j for j in missing]}',
                needed=(min(i - j for j in missing), max(i - j for j in missing)),
                truncation=T.truncation + max(0, max(i - j for j in missing) - T.upper))
        total = sum(T.cohomology_dim(j, i - j) for j in table.keys())
        row = {'i': i, 'bass': bass[i], 'tails': total}
        unknown = [p for p in T.underlying.positions() if not p in table and i - p > T.upper]
        if len(unknown) > 0:
            logging.info('mu^%d: positions %s are not trusted in degrees %s', i, unknown, [i - p for p in unknown])
            row.update({'ok': None, 'verdict': 'inconclusive', 'untrusted_positions': unknown})
        else:
            row.update({'ok': bass[i] == total, 'verdict': 'ok' if bass[i] == total else 'mismatch'})
        rows.append(row)
    return rows


def torsion_cohomology_check(j: int, algA: TruncatedAlgebra, algLam: TruncatedAlgebra) -> dict[str, Any]:
    """
    F(L<j>) for the truncation L<j> = P_j -> ... -> P_0 of the minimal free
    resolution of k over the cofree side: its cohomology should sit in
    position d only, in internal degrees -d-j..-d.
    """
    d = require_frobenius(algLam)
    res = minimal_free_resolution(trivial_module(algLam), j + 1)
    FL = functor_F(free_resolution_complex(res), algA)
    table = FL.cohomology_table()
    degrees = sorted(set(u for row in table.values() for u in row.keys()))
    only_d = all(p == d for p in table.keys())
    in_range = all(-d - j <= u <= -d for u in degrees)
    return {
        'j': j,
        'd': d,
        'cohomology': {str(p): {str(u): n for u, n in row.items()} for p, row in table.items()},
        'only_position_d': only_d,
        'degrees_in_range': in_range,
        'holds': only_d and in_range and len(table) > 0,
    }
