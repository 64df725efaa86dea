from typing import Any
import logging
from ncbgg.Errors import PreconditionError, PresentationMismatchError
from ncbgg.Probe import Probe
from ncbgg.algebra.Presentations import QuadraticPresentation, koszul_dual
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.bgg.GradedComplex import GradedComplex, total_differential
from ncbgg.linalg.Matrices import Matrix
from ncbgg.module.GradedModule import graded_vector_space, regular_module, sum_of_shifts



def _dual_top(algAd: TruncatedAlgebra) -> int:
    return algAd.socle_degree


def _check_dual_pair(algA: TruncatedAlgebra, algAd: TruncatedAlgebra) -> None:
    if not algAd.presentation.same_algebra(koszul_dual(algA.presentation)):
        raise PresentationMismatchError(f'{algAd.presentation} is not the Koszul dual of {algA.presentation}')


def koszul_complex(algA: TruncatedAlgebra, algAd: TruncatedAlgebra) -> GradedComplex:
    """
    The Koszul complex L with L^{-i} = A(-i) (x) (A!_i)' and differential
    a (x) f -> sum_a a x_a (x) f(y_a .). For Koszul algebras this is the
    minimal free resolution of k.

    On degree u, the copy of A_{u-i} belonging to the c-th basis functional
    of A!_i occupies indices c * dim A_{u-i} + (0..dim A_{u-i}-1).
    """
    _check_dual_pair(algA, algAd)
    reg = regular_module(algA)
    top = _dual_top(algAd)
    terms, anchors = {}, {}
    for i in range(top + 1):
        m = algAd.dim(i)
        terms[-i] = sum_of_shifts(reg, [(-i, m)], name=f'L^{-i}')
        anchors[-i] = [i] * m
    diffs = {}
    for i in range(1, top + 1):
        per = {}
        for u in range(i, algA.N + 1):
            acc = Matrix.zeros(algA.field, algAd.dim(i - 1) * algA.dim(u - i + 1), algAd.dim(i) * algA.dim(u - i))
            for a in range(algA.g):
                acc = acc + algAd.left_generator(a, i - 1).T.kron(algA.right_generator(a, u - i))
            per[u] = acc
        diffs[-i] = per
    logging.debug('  Koszul complex with ranks %s', [algAd.dim(i) for i in range(top + 1)])
    return GradedComplex(algA, terms, diffs, kind='free', anchors=anchors, name='L')


def rhom_k(algA: TruncatedAlgebra, algAd: TruncatedAlgebra, N: GradedComplex) -> GradedComplex:
    """
    RHom_A(k, N) = Hom_A(L, N), computed as the total complex of graded
    vector spaces with terms A!_s (x) N^i_{s+j} in position i + s and
    internal degree j. The differential is 1 (x) d_N plus
    (-1)^i sum_a (y_a .) (x) (x_a .).
    """
    _check_dual_pair(algA, algAd)
    if not N.algebra.presentation.same_algebra(algA.presentation):
        raise PresentationMismatchError('RHom_A(k, -) needs a complex of A-modules')
    field = algA.field
    top = _dual_top(algAd)
    if N.is_zero:
        return GradedComplex(algAd, {}, {}, name='RHom(k,N)')
    w = N.window
    lo = min(N.terms[i].lo for i in N.positions()) - top
    hi = w.upper_bound - top if N._open_above else max(N.terms[i].hi for i in N.positions())
    positions = sorted(set(i + s for i in N.positions() for s in range(top + 1)))

    def layout(p: int, j: int) -> list[tuple[tuple[int, int], int]]:
        return [((i, p - i), algAd.dim(p - i) * N.dim(i, p - i + j)) for i in N.positions() if 0 <= p - i <= top]

    terms = {}
    for p in positions:
        dims = [sum(n for _, n in layout(p, j)) for j in range(lo, hi + 1)]
        terms[p] = graded_vector_space(algAd, lo, dims, name=f'RHom^{p}')
    diffs = {}
    for p in positions:
        per = {}
        for j in range(lo, hi + 1):

            def arrow(src: tuple[int, int], tgt: tuple[int, int]) -> Any:
                (i, s), (i2, s2) = src, tgt
                if i2 == i + 1 and s2 == s:
                    return Matrix.identity(field, algAd.dim(s)).kron(N.differential(i, s + j))
                if i2 == i and s2 == s + 1:
                    acc = Matrix.zeros(field, algAd.dim(s + 1) * N.dim(i, s + 1 + j), algAd.dim(s) * N.dim(i, s + j))
                    for a in range(algA.g):
                        acc = acc + algAd.left_generator(a, s).kron(N.terms[i].action(a, s + j))
                    return acc.scale(-1) if i % 2 != 0 else acc
                return None

            per[j] = total_differential(field, layout(p, j), layout(p + 1, j), arrow)
        diffs[p] = per
    return GradedComplex(algAd, terms, diffs, name='RHom(k,N)', upper=hi if N._open_above else None)


def reciprocity_coefficients(dims: list[int], dual_dims: list[int]) -> list[int]:
    """
    Coefficients of H_A(t) H_{A!}(-t) up to the shorter of the two lists.
    """
    n = min(len(dims), len(dual_dims))
    return [sum(dims[k] * (-1) ** (m - k) * dual_dims[m - k] for k in range(m + 1)) for m in range(n)]


def first_bad_degree(coefficients: list[int]) -> int:
    for m, c in enumerate(coefficients):
        if c != (1 if m == 0 else 0):
            return m
    return None


def koszul_exact_up_to(algA: TruncatedAlgebra, algAd: TruncatedAlgebra) -> int:
    """
    Largest u such that the Koszul complex has cohomology k in position 0
    and degree 0 and nothing else in all internal degrees <= u; -1 if
    already degree 0 fails.
    """
    L = koszul_complex(algA, algAd)
    last = -1
    for u in range(0, algA.N + 1):
        for p in L.positions():
            expected = 1 if (p == 0 and u == 0) else 0
            if L.cohomology_dim(p, u) != expected:
                logging.debug('  Koszul complex has cohomology in position %d, degree %d', p, u)
                return last
        last = u
    return last



class KoszulnessProbe(Probe):
    """
    Numerical evidence for Koszulness of a quadratic presentation up to
    degree N: Hilbert series reciprocity and exactness of the Koszul
    complex.
    """
    def __init__(self, presentation: QuadraticPresentation, N: int) -> None:
        super().__init__()
        if N < 2:
            raise PreconditionError(f'The Koszulness probe needs N >= 2, got {N}')
        self.presentation = presentation
        self.N = N

    def evaluate(self) -> dict[str, Any]:
        algA = TruncatedAlgebra(self.presentation, self.N)
        algAd = TruncatedAlgebra(koszul_dual(self.presentation), self.N)
        coeffs = reciprocity_coefficients(algA.component_dims, algAd.component_dims)
        bad = first_bad_degree(coeffs)
        exact = koszul_exact_up_to(algA, algAd)
        logging.info('Koszulness probe up to degree %d: reciprocity %s, exact up to %d',
            self.N, 'ok' if bad is None else f'fails in degree {bad}', exact)
        return {
            'hilbert': algA.component_dims,
            'dual_hilbert': algAd.component_dims,
            'reciprocity_coefficients': coeffs,
            'reciprocity_ok': bad is None,
            'first_bad_degree': bad,
            'koszul_complex_exact_up_to': exact,
        }


def koszulness_probe(pres: QuadraticPresentation, N: int) -> dict[str, Any]:
    return KoszulnessProbe(pres, N)()
