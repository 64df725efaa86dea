from typing import Any
import logging
from ncbgg.Errors import PreconditionError, PresentationMismatchError, UnsupportedInputError
from ncbgg.Window import Window
from ncbgg.algebra.Koszul import rhom_k
from ncbgg.algebra.Presentations import cofree_dual
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.bgg.GradedComplex import (ChainMap, GradedComplex, is_chain_map, mapping_cone, module_complex, total_differential,
    zero_complex)
from ncbgg.linalg.Matrices import Matrix, column_kernel
from ncbgg.module.Frobenius import require_frobenius
from ncbgg.module.GradedModule import GradedModule, regular_dual, regular_module, sum_of_shifts, trivial_module
from ncbgg.module.Resolutions import ResolutionReport, minimal_free_resolution, minimal_injective_resolution



def _check_cofree_side(algA: TruncatedAlgebra, algLam: TruncatedAlgebra) -> None:
    if not algLam.presentation.same_algebra(cofree_dual(algA.presentation)):
        raise PresentationMismatchError(
            f'{algLam.presentation} is not the cofree side (opposite Koszul dual) of {algA.presentation}')


def functor_F(C: GradedComplex, algA: TruncatedAlgebra, out_window: Window=None) -> GradedComplex:
    """
    F(C) = Tot of the double complex with A(i) (x) (C^p)_i in total position
    p + i. Differential: d_C acting on the second factor, plus
    (-1)^p sum_a (. x_a) (x) (y_a .) from (p, i) to (p, i + 1).

    On degree u the block (p, i) occupies dim (C^p)_i copies of A_{u+i},
    copy-major; blocks are ordered by p.
    """
    _check_cofree_side(algA, C.algebra)
    if C.is_zero:
        return zero_complex(algA)
    if any(not C.terms[p].bounded for p in C.positions()):
        raise UnsupportedInputError('F is applied to complexes of finite modules only')
    field = algA.field
    reg = regular_module(algA)
    blocks: dict[int, list[tuple[int, int]]] = {}
    for p in C.positions():
        term = C.terms[p]
        for i in term.degrees():
            if term.dim(i) > 0:
                blocks.setdefault(p + i, []).append((p, i))
    terms, anchors = {}, {}
    for n, keys in blocks.items():
        terms[n] = sum_of_shifts(reg, [(i, C.dim(p, i)) for p, i in keys], name=f'F^{n}')
        anchors[n] = [-i for p, i in keys for _ in range(C.dim(p, i))]
    top_i = max(i for keys in blocks.values() for _, i in keys)
    lo, hi = -top_i, algA.N - top_i
    if not out_window is None:
        lo = max(lo, out_window.lower_bound)
        if out_window.upper_bound > hi:
            GradedComplex(algA, terms, {}, name='F(C)').require(out_window.lower_bound, out_window.upper_bound)
        hi = out_window.upper_bound

    def layout(n: int, u: int) -> list[tuple[tuple[int, int], int]]:
        return [((p, i), C.dim(p, i) * algA.dim(u + i)) for p, i in blocks.get(n, [])]

    diffs = {}
    for n in blocks.keys():
        if not n + 1 in blocks:
            continue
        per = {}
        for u in range(lo, hi + 1):

            def arrow(src: tuple[int, int], tgt: tuple[int, int]) -> Any:
                (p, i), (p2, i2) = src, tgt
                if p2 == p + 1 and i2 == i:
                    return C.differential(p, i).kron(Matrix.identity(field, algA.dim(u + i)))
                if p2 == p and i2 == i + 1:
                    acc = Matrix.zeros(field, C.dim(p, i + 1) * algA.dim(u + i + 1), C.dim(p, i) * algA.dim(u + i))
                    for a in range(algA.g):
                        acc = acc + C.terms[p].action(a, i).kron(algA.right_generator(a, u + i))
                    return acc.scale(-1) if p % 2 != 0 else acc
                return None

            per[u] = total_differential(field, layout(n, u), layout(n + 1, u), arrow)
        diffs[n] = per
    logging.debug('  F(C) in positions %s, degrees %d..%d', sorted(blocks.keys()), lo, hi)
    return GradedComplex(algA, terms, diffs, kind='free', anchors=anchors, upper=hi, name='F(C)')


def functor_G(N: GradedComplex, algLam: TruncatedAlgebra, out_window: Window=None) -> GradedComplex:
    """
    G(N) = Tot of the double complex with Lambda'(j) (x) N^i_j in total
    position i + j, where Lambda'(j)_u = (Lambda_{-u-j})'. Differential: d_N
    on the first factor, plus (-1)^i sum_a (x_a .) (x) (f -> f(y_a .)) from
    (i, j) to (i, j + 1).

    Only finitely many blocks meet each degree u since Lambda is finite;
    for truncated N the result is valid for u >= -(top of N's window).
    """
    _check_cofree_side(N.algebra, algLam)
    if N.is_zero:
        return zero_complex(algLam)
    top = algLam.top_degree
    field = algLam.field
    w = N.window
    if not out_window is None and out_window.lower_bound is None and N._open_above:
        raise UnsupportedInputError('The product totalization of a truncated complex needs a lower degree bound')
    blocks: dict[int, list[tuple[int, int]]] = {}
    for i in N.positions():
        term = N.terms[i]
        for j in range(term.lo, min(term.hi, w.upper_bound) + 1):
            if N.dim(i, j) > 0:
                blocks.setdefault(i + j, []).append((i, j))
    for keys in blocks.values():
        keys.sort()
    base = regular_dual(algLam)
    terms, anchors = {}, {}
    for n, keys in blocks.items():
        terms[n] = sum_of_shifts(base, [(j, N.dim(i, j)) for i, j in keys], name=f'G^{n}')
        anchors[n] = [-j for i, j in keys for _ in range(N.dim(i, j))]
    lower = -w.upper_bound if N._open_above else None
    upper = -w.lower_bound - top if N._open_below else None
    all_j = [j for keys in blocks.values() for _, j in keys]
    lo = -max(all_j) - top if lower is None else lower
    hi = -min(all_j) if upper is None else upper
    if not out_window is None:
        if not lower is None and out_window.lower_bound < lower:
            GradedComplex(algLam, terms, {}, lower=lower, name='G(N)').require(out_window.lower_bound, out_window.lower_bound)
        lo = max(lo, out_window.lower_bound)
        hi = min(hi, out_window.upper_bound)

    def layout(n: int, u: int) -> list[tuple[tuple[int, int], int]]:
        return [((i, j), N.dim(i, j) * (algLam.dim(-u - j) if -u - j <= top else 0)) for i, j in blocks.get(n, [])]

    diffs = {}
    for n in blocks.keys():
        if not n + 1 in blocks:
            continue
        per = {}
        for u in range(lo, hi + 1):

            def arrow(src: tuple[int, int], tgt: tuple[int, int]) -> Any:
                (i, j), (i2, j2) = src, tgt
                m = -u - j
                if i2 == i + 1 and j2 == j:
                    return N.differential(i, j).kron(Matrix.identity(field, algLam.dim(m)))
                if i2 == i and j2 == j + 1 and m >= 1:
                    acc = Matrix.zeros(field, N.dim(i, j + 1) * algLam.dim(m - 1), N.dim(i, j) * algLam.dim(m))
                    for a in range(algLam.g):
                        acc = acc + N.terms[i].action(a, j).kron(algLam.left_generator(a, m - 1).T)
                    return acc.scale(-1) if i % 2 != 0 else acc
                return None

            per[u] = total_differential(field, layout(n, u), layout(n + 1, u), arrow)
        diffs[n] = per
    logging.debug('  G(N) in positions %s, degrees %d..%d', sorted(blocks.keys()), lo, hi)
    return GradedComplex(algLam, terms, diffs, kind='cofree', anchors=anchors, lower=lower, upper=upper, name='G(N)')


def free_resolution_complex(report: ResolutionReport) -> GradedComplex:
    """
    P_{n-1} -> ... -> P_0 with P_i in position -i.
    """
    alg = report.source.algebra
    terms = {-i: t for i, t in enumerate(report.terms)}
    diffs = {-i - 1: d for i, d in enumerate(report.differentials)}
    anchors = {-i: a for i, a in enumerate(report.anchors)}
    return GradedComplex(alg, terms, diffs, kind='free', anchors=anchors, name='P')


def injective_resolution_complex(report: ResolutionReport) -> GradedComplex:
    alg = report.source.algebra
    terms = {i: t for i, t in enumerate(report.terms)}
    diffs = {i: d for i, d in enumerate(report.differentials)}
    anchors = {i: a for i, a in enumerate(report.anchors)}
    return GradedComplex(alg, terms, diffs, kind='cofree', anchors=anchors, name='I')


def complete_cofree_resolution(M: GradedModule, left: int, right: int) -> GradedComplex:
    """
    Splice the minimal free resolution P of M (positions -left..-1) with the
    minimal injective resolution I (positions 0..right-1) along
    P_0 -> M -> I^0. Over a Frobenius algebra with socle degree t, A(-a) is
    cofree with socle in degree a + t; anchors are socle degrees throughout.
    """
    alg = M.algebra
    top = require_frobenius(alg)
    if M.is_zero:
        return GradedComplex(alg, {}, {}, kind='cofree', name='C')
    field = M.field
    inj = minimal_injective_resolution(M, right)
    proj = minimal_free_resolution(M, left)
    terms, diffs, anchors = {}, {}, {}
    for i, t in enumerate(inj.terms):
        terms[i] = t
        anchors[i] = inj.anchors[i]
    for i, d in enumerate(inj.differentials):
        diffs[i] = d
    for i, t in enumerate(proj.terms):
        terms[-i - 1] = t
        anchors[-i - 1] = [a + top for a in proj.anchors[i]]
    for i, d in enumerate(proj.differentials):
        diffs[-i - 2] = d
    if left > 0 and right > 0:
        splice = {}
        for u in proj.terms[0].degrees():
            eps = inj.augmentation.get(u, Matrix.zeros(field, inj.terms[0].dim(u), M.dim(u)))
            pi = proj.augmentation.get(u, Matrix.zeros(field, M.dim(u), proj.terms[0].dim(u)))
            splice[u] = eps @ pi
        diffs[-1] = splice
    logging.debug('  Complete resolution with Bass numbers %s and Betti numbers %s', inj.numbers, proj.numbers)
    return GradedComplex(alg, terms, diffs, kind='cofree', anchors=anchors, name='C')


def comparison_map(algA: TruncatedAlgebra, algLam: TruncatedAlgebra, left: int) -> tuple[ChainMap, GradedComplex, GradedComplex]:
    """
    The chain map L -> G(A) through k, where L is the minimal free
    resolution of k over the cofree side cut to left terms and G(A) is the
    cofree resolution of k coming from A (one term per degree of algA).
    f^0 sends the generator of L^0 to the socle vector of G(A)^0 that
    spans k = Z^0; every other component is zero.
    """
    _check_cofree_side(algA, algLam)
    L = free_resolution_complex(minimal_free_resolution(trivial_module(algLam), left))
    GA = functor_G(module_complex(regular_module(algA), kind='free', anchors=[0]), algLam)
    z = column_kernel(GA.differential(0, 0))
    if z.cols != 1 or L.dim(0, 0) != 1:
        raise PreconditionError(f'G(A) does not resolve k: Z^0 has dimension {z.cols} in degree 0')
    return {0: {0: z}}, L, GA


def koszul_cone(algA: TruncatedAlgebra, algLam: TruncatedAlgebra, left: int) -> GradedComplex:
    """
    cone(L -> G(A)), a complete cofree resolution of k with L^0 in position
    -1. It is exact except in position -left (where L is cut) and in
    position algA.N (where A is cut).
    """
    f, L, GA = comparison_map(algA, algLam, left)
    if not is_chain_map(f, L, GA):
        raise PreconditionError('L -> G(A) is not a chain map')
    cone = mapping_cone(f, L, GA)
    logging.debug('  Cone of L -> G(A) in positions %s', cone.positions())
    return cone


def adjunction_identity(N: GradedComplex, algAd: TruncatedAlgebra, algLam: TruncatedAlgebra,
        degrees: range=None) -> list[dict[str, Any]]:
    """
    Compare dim h^i(G N)_j with dim h^{i+j+d} RHom_A(k, N)_{-j-d}, where d is
    the top degree of the Koszul dual, computing both sides independently.
    """
    d = algAd.top_degree
    GN = functor_G(N, algLam)
    R = rhom_k(N.algebra, algAd, N)
    degrees = GN.degrees() if degrees is None else degrees
    rows = []
    for j in degrees:
        if -j - d < R.window.lower_bound and R._open_below or -j - d > R.window.upper_bound:
            continue
        for i in sorted(set(GN.positions()) | set(p - j - d for p in R.positions())):
            lhs = GN.cohomology_dim(i, j)
            rhs = R.cohomology_dim(i + j + d, -j - d)
            if lhs != 0 or rhs != 0:
                rows.append({'i': i, 'j': j, 'lhs': lhs, 'rhs': rhs, 'ok': lhs == rhs})
    return rows
