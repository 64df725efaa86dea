from typing import Any, Callable, Sequence
import argparse
import logging
import sys
from ncbgg.Errors import NcbggError, PresentationMismatchError
from ncbgg.algebra.Koszul import koszulness_probe
from ncbgg.algebra.Presentations import QuadraticPresentation, cofree_dual, koszul_dual
from ncbgg.algebra.TruncatedAlgebra import TruncatedAlgebra, finite_truncation, truncate_algebra
from ncbgg.bgg.Support import support_dimension
from ncbgg.bgg.Tails import bass_support_identity, gamma, phi, tails_hom_dims
from ncbgg.geometry.PointModules import predict_period, verify_shift_law
from ncbgg.geometry.PointScheme import enumerate_point_scheme, orbit_length, parse_point
from ncbgg.module.Frobenius import check_frobenius, module_isomorphic, require_frobenius
from ncbgg.module.GradedModule import GradedModule
from ncbgg.module.Resolutions import detect_period, minimal_injective_resolution, strip_injective_summands
from ncbgg.workbench.Files import dumps, presentation_to_json, read_module, read_presentation, write_text
from ncbgg.workbench.Reports import render
from ncbgg.workbench.RunConfig import COMMANDS, FORMATS, RunConfig, parse_window

PROG = 'ncbgg'


def _dims(module: GradedModule) -> dict[str, int]:
    return {str(t): d for t, d in module.piece_dims().items()}


def _cofree_side(config: RunConfig, pres: QuadraticPresentation) -> TruncatedAlgebra:
    expected = cofree_dual(pres)
    if config.dual_input is None:
        return finite_truncation(expected)
    given = read_presentation(config.dual_input)
    if not given.same_algebra(expected):
        raise PresentationMismatchError(f'{config.dual_input} is not the cofree side of {config.input}')
    return finite_truncation(given)


def cmd_dual(config: RunConfig) -> dict[str, Any]:
    return presentation_to_json(koszul_dual(read_presentation(config.require_input())))


def cmd_truncate(config: RunConfig) -> dict[str, Any]:
    alg = truncate_algebra(read_presentation(config.require_input()), config.N)
    report = {
        'hilbert': alg.component_dims,
        'finite': alg.is_finite,
        'associative': alg.is_associative(),
        'generated_in_degree_one': alg.generated_in_degree_one(),
    }
    if alg.is_finite:
        report['frobenius'] = check_frobenius(alg, trials=config.trials, seed=config.seed)
    return report


def cmd_probe(config: RunConfig) -> dict[str, Any]:
    return koszulness_probe(read_presentation(config.require_input()), config.N)


def cmd_resolve(config: RunConfig) -> dict[str, Any]:
    alg = finite_truncation(read_presentation(config.require_input()))
    require_frobenius(alg)
    M = read_module(config.require_module(), alg)
    res = minimal_injective_resolution(M, config.steps)
    return {
        'module': _dims(M),
        'bass': res.numbers,
        'resolution': res.to_json(),
        'period': detect_period(M, config.steps, trials=config.trials, seed=config.seed),
    }


def cmd_bgg(config: RunConfig) -> dict[str, Any]:
    """
    tail_dims[j] lists dim h^j(phi M)_ell over the trusted degrees ell, one
    entry per cohomological position j with nonzero cohomology there;
    tail_position is that j when it is unique. tail_support is read off the
    sums over j, and support off the tails column of the identity table.
    The identity is evaluated on the degrees i where every position of
    phi M is readable.
    """
    pres = read_presentation(config.require_input())
    algA = truncate_algebra(pres, config.N)
    algLam = _cofree_side(config, pres)
    M = read_module(config.require_module(), algLam)
    T = phi(M, algA)
    stripped = strip_injective_summands(M)
    if T.is_zero():
        round_trip = 'yes' if stripped.is_zero else 'no'
    else:
        back = gamma(T, algLam, trials=config.trials, seed=config.seed)
        round_trip = module_isomorphic(back, stripped, trials=config.trials, seed=config.seed).value
    table = T.table()
    tail_dims = {j: tails_hom_dims(T, j, T.degrees()) for j in sorted(table.keys())}
    totals = [sum(dims[k] for dims in tail_dims.values()) for k in range(len(T.degrees()))]
    if len(table) == 0:
        i_range = range(0, config.steps)
    else:
        i_range = range(max(0, T.cutoff + max(table.keys())), T.upper + min(T.underlying.positions()) + 1)
    if not config.window is None:
        i_range = range(max(i_range.start, config.window.lower_bound), min(i_range.stop, config.window.upper_bound + 1))
    rows = bass_support_identity(M, algA, i_range, T=T)
    return {
        'module': _dims(M),
        'phi': T.to_json(),
        'tail_degrees': [T.cutoff, T.upper],
        'tail_dims': {str(j): dims for j, dims in tail_dims.items()},
        'tail_position': next(iter(tail_dims)) if len(tail_dims) == 1 else None,
        'tail_support': support_dimension(totals),
        'round_trip': round_trip,
        'identity': rows,
        'support': support_dimension([r['tails'] for r in rows]),
    }


def cmd_points(config: RunConfig) -> dict[str, Any]:
    pres = read_presentation(config.require_input())
    scheme = enumerate_point_scheme(pres)
    report: dict[str, Any] = {'size': len(scheme), 'scheme': scheme.to_json()}
    if not scheme.is_bijective and config.point is None:
        report['orbit_operations'] = 'disabled: sigma is not a bijection of the scheme'
        return report
    if scheme.is_bijective:
        report['cycle_type'] = {str(n): c for n, c in scheme.cycle_type().items()}
        report['periods'] = [{'point': str(p), 'period': orbit_length(scheme, p, bound=config.bound)}
            for p in scheme.points]
    if not config.point is None:
        p = parse_point(pres.field, config.point)
        alg = truncate_algebra(pres, config.N)
        report['shift_law'] = verify_shift_law(alg, p, scheme=scheme, trials=config.trials, seed=config.seed)
        report['prediction'] = predict_period(alg, p, bound=config.bound, algLam=finite_truncation(cofree_dual(pres)),
            scheme=scheme, steps=config.steps, trials=config.trials, seed=config.seed).to_json()
    return report


HANDLERS: dict[str, Callable[[RunConfig], dict[str, Any]]] = {
    'dual': cmd_dual,
    'truncate': cmd_truncate,
    'resolve': cmd_resolve,
    'bgg': cmd_bgg,
    'points': cmd_points,
    'probe': cmd_probe,
}

HELP = {
    'dual': 'write the Koszul dual presentation.',
    'truncate': 'Hilbert function, associativity and Frobenius check of a truncation.',
    'resolve': 'minimal injective resolution, Bass numbers and period of a module.',
    'bgg': 'phi of a module, the gamma round trip and the Bass number identity.',
    'points': 'point scheme, sigma orbits and period predictions.',
    'probe': 'Hilbert series reciprocity and Koszul complex exactness.',
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-i', '--input',
        action='store',
        help='presentation file (JSON).',
        metavar='filename')
    common.add_argument('--dual-input',
        action='store',
        help='presentation of the cofree side; checked against the input.',
        metavar='filename')
    common.add_argument('-m', '--module',
        action='store',
        help='module file (JSON).',
        metavar='filename')
    common.add_argument('-o', '--output',
        action='store',
        help='write the report to this file instead of stdout.',
        metavar='filename')
    common.add_argument('-N', '--trunc',
        action='store',
        type=int,
        default=6,
        dest='N',
        help='truncation degree of infinite algebras.',
        metavar='N')
    common.add_argument('--window',
        action='store',
        help='restrict reported degrees to lo:hi.',
        metavar='lo:hi')
    common.add_argument('--steps',
        action='store',
        type=int,
        default=6,
        help='length of resolutions.',
        metavar='S')
    common.add_argument('-s', '--seed',
        action='store',
        type=int,
        default=0,
        help='seed for randomized isomorphism tests.',
        metavar='n')
    common.add_argument('--trials',
        action='store',
        type=int,
        default=32,
        help='number of random samples per isomorphism test.',
        metavar='n')
    common.add_argument('--bound',
        action='store',
        type=int,
        default=10,
        help='largest orbit length searched for.',
        metavar='B')
    common.add_argument('--point',
        action='store',
        help='projective point as "1:0:2".',
        metavar='coords')
    common.add_argument('--format',
        action='store',
        choices=FORMATS,
        default='json',
        help='json (default) or aligned tables.')
    common.add_argument('-v', '--verbose',
        action='store_true',
        help='log progress of the computation.')
    parser = argparse.ArgumentParser(prog=PROG, description='Workbench for the noncommutative BGG correspondence.')
    sub = parser.add_subparsers(dest='command', required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=HELP[name])
    return parser


def run_parser(argv: Sequence[str]=None) -> int:
    """
    Run the command line interface and return the exit code.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
        format=f'[{PROG}] %(levelname)s %(message)s')
    try:
        config = RunConfig(command=args.command, input=args.input, dual_input=args.dual_input, module=args.module,
            output=args.output, N=args.N, window=parse_window(args.window), steps=args.steps, seed=args.seed,
            trials=args.trials, bound=args.bound, point=args.point, format=args.format, verbose=args.verbose)
        report = HANDLERS[config.command](config)
        text = dumps(report) if config.format == 'json' else render(report)
        if config.output is None:
            sys.stdout.write(text)
        else:
            write_text(config.output, text)
    except NcbggError as err:
        logging.error('%s', err)
        return err.exit_code
    return 0
