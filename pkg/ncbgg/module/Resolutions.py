from dataclasses import dataclass, field as dataclass_field
from typing import Any, Optional
import logging
from ncbgg.Errors import PreconditionError
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra
from ncbgg.linalg.Matrices import Matrix, column_kernel, image_basis, left_inverse, quotient_basis, rank, rank_and_rref
from ncbgg.module.Frobenius import Verdict, module_isomorphic, require_frobenius
from ncbgg.module.GradedModule import GradedModule, cofree_module, free_module, trivial_module, zero_module
from ncbgg.module.Homs import GradedMap, compose, hom_space



@dataclass
class Envelope:
    module: GradedModule
    embedding: GradedMap
    socle_degrees: list[int]


@dataclass
class Cover:
    module: GradedModule
    projection: GradedMap
    generator_degrees: list[int]


@dataclass
class ResolutionReport:
    """
    A finite prefix of a minimal resolution.

    For direction 'injective', terms[i] = I^i, anchors[i] are the socle
    degrees of its cogenerators, differentials[i] : I^i -> I^{i+1},
    augmentation : M -> I^0 and syzygies[i] = Sigma^{i+1} M.

    For direction 'free', terms[i] = P_i, anchors[i] are generator degrees,
    differentials[i] : P_{i+1} -> P_i, augmentation : P_0 -> M and
    syzygies[i] = Omega^{i+1} M.
    """
    direction: str
    source: GradedModule
    terms: list[GradedModule] = dataclass_field(default_factory=list)
    anchors: list[list[int]] = dataclass_field(default_factory=list)
    differentials: list[GradedMap] = dataclass_field(default_factory=list)
    syzygies: list[GradedModule] = dataclass_field(default_factory=list)
    augmentation: GradedMap = dataclass_field(default_factory=dict)

    @property
    def length(self) -> int:
        return len(self.terms)

    @property
    def numbers(self) -> list[int]:
        """
        Bass numbers (injective) or Betti numbers (free).
        """
        return [len(a) for a in self.anchors]

    def to_json(self) -> dict[str, Any]:
        return {
            'direction': self.direction,
            'length': self.length,
            'numbers': self.numbers,
            'anchors': [list(a) for a in self.anchors],
            'syzygy_dims': [{str(t): d for t, d in s.piece_dims().items()} for s in self.syzygies],
        }


def _block_sizes(alg: TruncatedAlgebra, offsets: list[int], u: int) -> list[int]:
    top = alg.top_degree
    return [alg.dim(u - a) if 0 <= u - a <= top else 0 for a in offsets]


def injective_envelope(M: GradedModule) -> Envelope:
    """
    I(M) = sum of A'(-s) over a basis of the socle, s the degree of the
    basis vector. Each socle vector gets a functional f with f(socle) = 1 on
    it and 0 on the others; m is sent to the functional lambda -> f(lambda m).
    """
    alg = M.algebra
    top = require_frobenius(alg)
    field = M.field
    if M.is_zero:
        return Envelope(zero_module(alg), {}, [])
    functionals: list[tuple[int, Matrix]] = []
    for s in M.degrees():
        if M.dim(s) == 0:
            continue
        soc = M.socle(s)
        if soc.cols == 0:
            continue
        F = left_inverse(soc)
        functionals += [(s, F.take_rows([r])) for r in range(F.rows)]
    degrees = [s for s, _ in functionals]
    I = cofree_module(alg, degrees)
    embedding = {}
    for u in M.degrees():
        blocks = []
        for s, f in functionals:
            n = s - u
            rows = [f @ M.act_basis(n, j, u) for j in range(alg.dim(n))] if 0 <= n <= top else []
            blocks.append(Matrix.vstack(field, rows, cols=M.dim(u)))
        embedding[u] = Matrix.vstack(field, blocks, cols=M.dim(u))
    logging.debug('  Injective envelope with socle degrees %s', degrees)
    return Envelope(I, embedding, degrees)


def projective_cover(M: GradedModule) -> Cover:
    """
    P(M) = sum of A(-t) over a basis of the top M / rad M, sending the
    generator of each summand to a lift of the corresponding top vector.
    """
    alg = M.algebra
    top = alg.top_degree
    field = M.field
    if M.is_zero:
        return Cover(zero_module(alg), {}, [])
    gens: list[tuple[int, Matrix]] = []
    for t in M.degrees():
        if M.dim(t) == 0:
            continue
        section, _ = quotient_basis(M.radical(t).T, M.dim(t))
        gens += [(t, section.take_rows([r]).T) for r in range(section.rows)]
    degrees = [t for t, _ in gens]
    P = free_module(alg, degrees)
    projection = {}
    for u in P.degrees():
        cols = []
        for t, m in gens:
            n = u - t
            if 0 <= n <= top:
                cols += [M.act_basis(n, j, t) @ m for j in range(alg.dim(n))]
        projection[u] = Matrix.hstack(field, cols, rows=M.dim(u))
    logging.debug('  Projective cover with generator degrees %s', degrees)
    return Cover(P, projection, degrees)


def minimal_injective_resolution(M: GradedModule, steps: int) -> ResolutionReport:
    """
    I^0 -> I^1 -> ... -> I^{steps-1}, built from successive injective
    envelopes of the cokernels.
    """
    require_frobenius(M.algebra)
    field = M.field
    report = ResolutionReport(direction='injective', source=M)
    current = M
    previous: Optional[tuple[GradedModule, GradedMap]] = None
    for i in range(steps):
        env = injective_envelope(current)
        report.terms.append(env.module)
        report.anchors.append(env.socle_degrees)
        if previous is None:
            report.augmentation = env.embedding
        else:
            prev_term, prev_proj = previous
            diff = {}
            for u in prev_term.degrees():
                emb = env.embedding.get(u, Matrix.zeros(field, env.module.dim(u), current.dim(u)))
                diff[u] = emb @ prev_proj[u]
            report.differentials.append(diff)
        coker, proj = env.module.quotient({u: image_basis(e) for u, e in env.embedding.items()})
        current = coker.trim()
        previous = (env.module, proj)
        report.syzygies.append(current)
        logging.debug('  Injective resolution step %d: mu = %d', i, len(env.socle_degrees))
    return report


def minimal_free_resolution(M: GradedModule, steps: int) -> ResolutionReport:
    """
    P_{steps-1} -> ... -> P_0, built from successive projective covers of
    the kernels.
    """
    field = M.field
    report = ResolutionReport(direction='free', source=M)
    current = M
    inclusion: Optional[tuple[GradedModule, GradedMap]] = None
    for i in range(steps):
        cover = projective_cover(current)
        report.terms.append(cover.module)
        report.anchors.append(cover.generator_degrees)
        if inclusion is None:
            report.augmentation = cover.projection
        else:
            prev_term, bases = inclusion
            diff = {}
            for u in cover.module.degrees():
                incl = bases.get(u, Matrix.zeros(field, prev_term.dim(u), current.dim(u)))
                diff[u] = incl @ cover.projection[u]
            report.differentials.append(diff)
        bases = {u: column_kernel(cover.projection[u]) for u in cover.module.degrees()}
        kernel = cover.module.submodule(bases)
        current = kernel.trim()
        inclusion = (cover.module, bases)
        report.syzygies.append(current)
        logging.debug('  Free resolution step %d: beta = %d', i, len(cover.generator_degrees))
    return report


def is_minimal(report: ResolutionReport) -> bool:
    """
    Injective: the socle of every I^i is killed by its differential.
    Free: every differential lands in the radical of its target.
    """
    for i, diff in enumerate(report.differentials):
        if report.direction == 'injective':
            term = report.terms[i]
            for u in term.degrees():
                soc = term.socle(u)
                if soc.cols > 0 and u in diff and not (diff[u] @ soc).is_zero:
                    return False
        else:
            target = report.terms[i]
            for u, d in diff.items():
                if d.cols == 0 or d.rows == 0:
                    continue
                rad = target.radical(u)
                if rank(Matrix.hstack(target.field, [rad, d], rows=d.rows)) != rad.cols:
                    return False
    return True


def strip_injective_summands(M: GradedModule) -> GradedModule:
    """
    Remove a maximal injective summand. Over a Frobenius algebra with socle
    degree t, m generates an injective summand iff omega m != 0 for omega
    spanning A_t; vectors whose omega-images are independent generate
    their direct sum.
    """
    alg = M.algebra
    top = require_frobenius(alg)
    field = M.field
    omega = Matrix.identity(field, 1)
    current = M.trim()
    while not current.is_zero:
        chosen: list[tuple[int, Matrix]] = []
        for u in current.degrees():
            if current.dim(u) == 0 or current.dim(u + top) == 0:
                continue
            image = current.act_element(top, omega, u)
            _, _, pivots = rank_and_rref(image)
            chosen += [(u, Matrix.unit_rows(field, [c], current.dim(u)).T) for c in pivots]
        if len(chosen) == 0:
            break
        spans = {}
        for v in current.degrees():
            cols = []
            for u, m in chosen:
                n = v - u
                if 0 <= n <= top:
                    cols += [current.act_basis(n, j, u) @ m for j in range(alg.dim(n))]
            spans[v] = Matrix.hstack(field, cols, rows=current.dim(v))
        logging.debug('  Stripping %d injective summands', len(chosen))
        current, _ = current.quotient(spans)
        current = current.trim()
    return current


def cosyzygy(M: GradedModule, i: int) -> GradedModule:
    """
    Sigma^i M, free of injective summands.
    """
    if i < 0:
        raise PreconditionError(f'Cosyzygies are indexed by i >= 0, got {i}')
    if i == 0:
        return M
    return strip_injective_summands(minimal_injective_resolution(M, i).syzygies[i - 1])


def syzygy(M: GradedModule, i: int) -> GradedModule:
    """
    Omega^i M, free of projective (= injective) summands.
    """
    if i < 0:
        raise PreconditionError(f'Syzygies are indexed by i >= 0, got {i}')
    if i == 0:
        return M
    return strip_injective_summands(minimal_free_resolution(M, i).syzygies[i - 1])


def suspend(M: GradedModule, n: int) -> GradedModule:
    """
    Sigma^n M in the stable category: cosyzygies for n > 0, syzygies for
    n < 0.
    """
    return cosyzygy(M, n) if n >= 0 else syzygy(M, -n)


def _generator_column(alg: TruncatedAlgebra, degrees: list[int], g: int) -> int:
    a = degrees[g]
    return sum(_block_sizes(alg, degrees[:g], a))


def _coboundary(res: ResolutionReport, j: int, M: GradedModule, s: int) -> Matrix:
    """
    delta^j : Hom(P_j, M(s)) -> Hom(P_{j+1}, M(s)), phi -> phi o d_{j+1},
    in coordinates sum_g M_{a_g + s} over generators g.
    """
    alg, field = M.algebra, M.field
    src, tgt = res.anchors[j], res.anchors[j + 1]
    rows = [M.dim(a + s) for a in tgt]
    cols = [M.dim(a + s) for a in src]
    diff = res.differentials[j]
    blocks = {}
    for g, a_g in enumerate(tgt):
        column = diff[a_g].take_cols([_generator_column(alg, tgt, g)])
        sizes = _block_sizes(alg, src, a_g)
        offset = 0
        for h, a_h in enumerate(src):
            n = a_g - a_h
            if sizes[h] > 0 and rows[g] > 0 and cols[h] > 0:
                coeffs = column.row_slice(offset, offset + sizes[h])
                blocks[(g, h)] = M.act_element(n, coeffs, a_h + s)
            offset += sizes[h]
    return Matrix.block(field, rows, cols, blocks)


def ext_k(M: GradedModule, i: int) -> dict[int, int]:
    """
    dim Ext^i(k, M(s)) for every shift s where it is nonzero, computed from
    Hom(P, M(s)) over the minimal free resolution P of k.
    """
    if i < 0:
        raise PreconditionError(f'Ext is indexed by i >= 0, got {i}')
    alg = M.algebra
    require_frobenius(alg)
    if M.is_zero:
        return {}
    res = minimal_free_resolution(trivial_module(alg), i + 2)
    gens = res.anchors[i]
    if len(gens) == 0:
        return {}
    table = {}
    for s in range(M.lo - max(gens), M.hi - min(gens) + 1):
        n = sum(M.dim(a + s) for a in gens)
        if n == 0:
            continue
        out_rank = rank(_coboundary(res, i, M, s))
        in_rank = rank(_coboundary(res, i - 1, M, s)) if i > 0 else 0
        if n - out_rank - in_rank != 0:
            table[s] = n - out_rank - in_rank
    return table


def stable_hom(M: GradedModule, N: GradedModule) -> int:
    """
    dim of Hom(M, N) modulo the maps that factor through an injective,
    i.e. through the envelope M -> I(M).
    """
    require_frobenius(M.algebra)
    homs = hom_space(M, N)
    if homs.dim == 0:
        return 0
    env = injective_envelope(M)
    through = hom_space(env.module, N)
    vectors = [homs.vectorize(compose(h, env.embedding, env.module, M, N)) for h in through.basis_maps()]
    if len(vectors) == 0:
        return homs.dim
    return homs.dim - rank(Matrix.hstack(M.field, vectors, rows=homs.ambient_dim))


def detect_period(M: GradedModule, steps: int, trials: int=32, seed: int=0) -> dict[str, Any]:
    """
    Least n <= steps with Sigma^n M isomorphic to M(n). Injective inputs
    are reported as trivial.
    """
    base = strip_injective_summands(M)
    if base.is_zero:
        return {'period': None, 'trivial': True, 'checked': 0}
    res = minimal_injective_resolution(base, steps)
    for n in range(1, steps + 1):
        sigma = strip_injective_summands(res.syzygies[n - 1])
        verdict = module_isomorphic(sigma, base.shift(n), trials=trials, seed=seed)
        if verdict == Verdict.YES:
            logging.info('Sigma^%d M is isomorphic to M(%d)', n, n)
            return {'period': n, 'trivial': False, 'checked': n}
    return {'period': None, 'trivial': False, 'checked': steps}
