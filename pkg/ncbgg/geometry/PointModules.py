from dataclasses import dataclass, field as dataclass_field
from typing import Any, Optional
import logging
from ncbgg.Errors import DimensionMismatchError, InconclusiveError, NotAPointError, WindowTooSmallError
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.bgg.Tails import gamma, tails_from_module
from ncbgg.geometry.PointScheme import PointScheme, ProjPoint, enumerate_point_scheme, orbit_length
from ncbgg.linalg.Matrices import Matrix
from ncbgg.module.Frobenius import Verdict, module_isomorphic
from ncbgg.module.GradedModule import GradedModule, regular_module
from ncbgg.module.Resolutions import minimal_injective_resolution, strip_injective_summands

# Shift law P(p)_{>=1}(1) = P(sigma^SHIFT_EXPONENT p) in the convention of PointScheme.
SHIFT_EXPONENT = -1


def point_module(alg: TruncatedAlgebra, p: ProjPoint) -> GradedModule:
    """
    P(p) = A / A p^perp in degrees 0..N. Raises NotAPointError at the first
    degree whose piece is not one-dimensional.
    """
    if p.g != alg.g:
        raise DimensionMismatchError(f'{p} has {p.g} coordinates, the algebra has {alg.g} generators')
    field = alg.field
    perp = p.perp(field)
    reg = regular_module(alg)
    spans = {}
    for n in range(1, reg.hi + 1):
        cols = []
        for v in perp:
            acc = Matrix.zeros(field, alg.dim(n), alg.dim(n - 1))
            for b in range(alg.g):
                if v[b] != 0:
                    acc = acc + alg.right_generator(b, n - 1).scale(int(v[b]))
            cols.append(acc)
        spans[n] = Matrix.hstack(field, cols, rows=alg.dim(n))
    module, _ = reg.quotient(spans)
    module.name = f'P{p}'
    for n in module.degrees():
        if module.dim(n) != 1:
            raise NotAPointError(f'{p} is not on the point scheme: P(p) has dimension {module.dim(n)} in degree {n}',
                degree=n)
    return module


def verify_shift_law(alg: TruncatedAlgebra, p: ProjPoint, scheme: PointScheme=None, trials: int=32,
        seed: int=0) -> bool:
    """
    P(p)_{>=1}(1) = P(sigma^{-1} p), compared on degrees 0..N-1.
    """
    scheme = enumerate_point_scheme(alg.presentation) if scheme is None else scheme
    scheme.require_automorphism()
    P = point_module(alg, p)
    top = P.hi
    left = P.restrict(1, top).shift(1)
    q = scheme.power(p, SHIFT_EXPONENT)
    right = point_module(alg, q).restrict(0, top - 1)
    verdict = module_isomorphic(left, right, trials=trials, seed=seed)
    logging.debug('  Shift law at %s (partner %s): %s', p, q, verdict.value)
    return verdict == Verdict.YES



@dataclass
class PeriodReport:
    """
    Period of the minimal injective resolution of M(p), the module over the
    cofree side that corresponds to the point module P(p).

    The orbit length of sigma^{-1} at p predicts the period. When the
    transport of P(p) through gamma succeeds, the cosyzygies of M(p) are
    compared with its shifts: matches holds every (i, j) with
    Sigma^i M(p) = M(p)(j) that was found, and a consistent run has i = j
    throughout.
    """
    point: ProjPoint
    bound: int
    orbit_length: Optional[int]
    orbit_predicted: bool = True
    transported: Optional[dict[int, int]] = None
    matches: list[dict[str, int]] = dataclass_field(default_factory=list)
    verified: Optional[bool] = None
    lemma_consistent: Optional[bool] = None
    bass_numbers: list[int] = dataclass_field(default_factory=list)
    bass_bounded: Optional[bool] = None
    note: str = ''

    @property
    def period(self) -> Optional[int]:
        return self.orbit_length

    @property
    def aperiodic_up_to_bound(self) -> bool:
        return self.orbit_length is None

    def to_json(self) -> dict[str, Any]:
        return {
            'point': self.point.to_json(),
            'bound': self.bound,
            'period': self.period,
            'aperiodic_up_to_bound': self.aperiodic_up_to_bound,
            'orbit_predicted': self.orbit_predicted,
            'transported': None if self.transported is None else {str(t): d for t, d in self.transported.items()},
            'matches': self.matches,
            'verified': self.verified,
            'lemma_consistent': self.lemma_consistent,
            'bass_numbers': self.bass_numbers,
            'bass_bounded': self.bass_bounded,
            'note': self.note,
        }


def _aligning_shift(M: GradedModule, S: GradedModule) -> Optional[int]:
    """
    The only j for which S and M(j) can have the same lowest degree.
    """
    if M.is_zero or S.is_zero:
        return None
    return M.trim().lo - S.trim().lo


def predict_period(alg: TruncatedAlgebra, p: ProjPoint, bound: int=10, algLam: TruncatedAlgebra=None,
        scheme: PointScheme=None, steps: int=6, trials: int=32, seed: int=0) -> PeriodReport:
    """
    Period prediction from the sigma-orbit of p. If algLam (the cofree side
    of alg) is given, P(p) is also carried over by gamma and the resolution
    of the result is checked against the prediction; a window that is too
    small leaves the report orbit-predicted.
    """
    scheme = enumerate_point_scheme(alg.presentation) if scheme is None else scheme
    n = orbit_length(scheme, p, exponent=SHIFT_EXPONENT, bound=bound)
    report = PeriodReport(point=p, bound=bound, orbit_length=n)
    if algLam is None:
        return report
    try:
        M = gamma(tails_from_module(point_module(alg, p)), algLam, trials=trials, seed=seed)
    except (WindowTooSmallError, InconclusiveError) as err:
        logging.info('Transport of P%s failed, keeping the orbit prediction: %s', p, err)
        report.note = str(err)
        return report
    report.orbit_predicted = False
    report.transported = M.piece_dims()
    horizon = max(n or 0, steps)
    res = minimal_injective_resolution(M, horizon)
    for i in range(1, horizon + 1):
        S = strip_injective_summands(res.syzygies[i - 1])
        j = _aligning_shift(M, S)
        if j is None:
            continue
        if module_isomorphic(S, M.shift(j), trials=trials, seed=seed) == Verdict.YES:
            report.matches.append({'i': i, 'j': j})
    first = min((m['i'] for m in report.matches), default=None)
    report.verified = first == n
    report.lemma_consistent = all(m['i'] == m['j'] for m in report.matches)
    report.bass_numbers = res.numbers
    report.bass_bounded = all(b == 1 for b in res.numbers[1:])
    logging.info('Period at %s: orbit %s, resolution matches %s', p, n, report.matches)
    return report
