from enum import Enum
from typing import Any, Optional
import logging
import numpy as np
from ncbgg.Errors import PresentationMismatchError, UnsupportedAlgebraError
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.linalg.Matrices import Matrix, is_invertible
from ncbgg.module.GradedModule import GradedModule, regular_dual, regular_module
from ncbgg.module.Homs import GradedMap, hom_space



class Verdict(Enum):
    YES = 'yes'
    NO = 'no'
    INCONCLUSIVE = 'inconclusive'


def _common_window(M: GradedModule, N: GradedModule) -> tuple[GradedModule, GradedModule]:
    if M.bounded and N.bounded:
        return M, N
    tops = [m.hi for m in (M, N) if not m.bounded]
    lo = min(M.lo, N.lo)
    hi = min(tops)
    return M.restrict(lo, hi), N.restrict(lo, hi)


def invariants_differ(M: GradedModule, N: GradedModule) -> Optional[str]:
    """
    Name of the first cheap invariant that tells M and N apart, if any.
    """
    if M.piece_dims() != N.piece_dims():
        return 'piece dimensions'
    if M.socle_dims() != N.socle_dims():
        return 'socle dimensions'
    if M.radical_series_dims() != N.radical_series_dims():
        return 'radical series'
    return None


def find_isomorphism(M: GradedModule, N: GradedModule, trials: int=32, seed: int=0) -> tuple[Verdict, Optional[GradedMap]]:
    """
    Search for a degree-0 isomorphism M -> N among random elements of the
    Hom space. Modules that are not bounded are compared on their common
    window.
    """
    if not M.algebra.presentation.same_algebra(N.algebra.presentation):
        raise PresentationMismatchError('Isomorphism testing needs modules over the same algebra')
    M, N = _common_window(M, N)
    reason = invariants_differ(M, N)
    if not reason is None:
        logging.debug('  Not isomorphic: %s differ', reason)
        return Verdict.NO, None
    if M.total_dim == 0:
        return Verdict.YES, {}
    hom = hom_space(M, N)
    if hom.dim == 0:
        return Verdict.NO, None
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        h = hom.random_map(rng)
        if all(is_invertible(h[t]) for t in hom.degrees):
            logging.debug('  Found an isomorphism after %d samples from a %d-dimensional Hom space', trial + 1, hom.dim)
            return Verdict.YES, h
    return Verdict.INCONCLUSIVE, None


def module_isomorphic(M: GradedModule, N: GradedModule, trials: int=32, seed: int=0) -> Verdict:
    return find_isomorphism(M, N, trials=trials, seed=seed)[0]


def pairing_matrix(alg: TruncatedAlgebra, i: int, top: int) -> Matrix:
    """
    The multiplication A_i x A_{top-i} -> A_top as a matrix, for a
    one-dimensional A_top.
    """
    return Matrix(alg.field, alg.mult[(i, top - i)][0, :, :].copy())


def has_nondegenerate_pairings(alg: TruncatedAlgebra) -> bool:
    top = alg.socle_degree
    if alg.dim(top) != 1:
        return False
    return all(is_invertible(pairing_matrix(alg, i, top)) for i in range(top + 1))


def check_frobenius(alg: TruncatedAlgebra, trials: int=32, seed: int=0) -> dict[str, Any]:
    """
    Decide whether alg is graded Frobenius: the top piece is one-dimensional
    and every pairing A_i x A_{t-i} -> A_t is nondegenerate. Then A' is
    isomorphic to A(t), which is confirmed through module_isomorphic.
    """
    top = alg.socle_degree
    is_frobenius = has_nondegenerate_pairings(alg)
    verdict = None
    if is_frobenius:
        verdict = module_isomorphic(regular_dual(alg), regular_module(alg).shift(top), trials=trials, seed=seed)
    logging.info('Frobenius check: top degree %d, %s', top, 'Frobenius' if is_frobenius else 'not Frobenius')
    return {
        'is_frobenius': is_frobenius,
        'shift': top if is_frobenius else None,
        'top_degree': top,
        'self_duality': None if verdict is None else verdict.value,
    }


def require_frobenius(alg: TruncatedAlgebra) -> int:
    """
    The socle degree t of alg, raising if alg is not Frobenius.
    """
    if not has_nondegenerate_pairings(alg):
        raise UnsupportedAlgebraError(f'{alg.presentation} is not a graded Frobenius algebra')
    return alg.socle_degree
