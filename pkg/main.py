#!/usr/bin/env python3
"""
Shifted W-infinity engine - Main Entry Point
"""
import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

# Add project root to path
PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from algebra.laurent import LaurentScalar, format_rational, parse_rational
from algebra.series import TruncatedSeries
from characters.schur import schur_poly
from characters.symmetric_group import character, phi
from combinatorics.partial_perm import structure_constants
from combinatorics.partitions import Partition
from common.errors import InvalidInputError, InvalidStateError, InvariantBreach
from config.settings import (
    LOG_FILE,
    LOG_FORMAT,
    LOG_LEVEL,
    OUTPUT_FORMATS,
    EngineSettings,
    load_settings,
    resolve_config_path,
)
from cutjoin.eigen import eigencheck, genus_schur
from cutjoin.explicit import build_w_explicit
from cutjoin.normal_ordered import build_w_normal_ordered
from cutjoin.operators import BlockOperator, apply, build_w_action, compose, normalize
from genfun.closed_forms import (
    phi0_closed,
    phi0_exponential,
    phi0_first_line,
    phi0_two_family,
    phi0_two_family_first_line,
    two_family_exponential,
)
from genfun.generating import InsertionSpec, phi_direct, phi_exp_action, phi_exp_literal
from hurwitz.exponential import connected_CU
from hurwitz.numbers import HurwitzQuery, classical_mu, disconnected_U
from reports.generator import ReportGenerator
from reports.serializers import Output, multiseries_rows, operator_rows, series_rows, to_json, to_tsv
from verify.registry import SUITE_CHOICES, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

CLOSED_FORMS = {
    'initial': phi0_closed,
    'first-line': phi0_first_line,
    'exp': phi0_exponential,
    'two-family': phi0_two_family,
    'two-family-first-line': phi0_two_family_first_line,
    'two-family-exp': lambda bound: two_family_exponential(bound, inverse_m=True),
    'two-family-exp-no-m': lambda bound: two_family_exponential(bound, inverse_m=False),
}


def setup_logging(level: str):
    """Configure the root logger; results go to stdout, logs to stderr"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if LOG_FILE:
        handlers.append(logging.FileHandler(LOG_FILE, encoding='utf-8'))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format=LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


def partition_arg(text: str) -> Partition:
    """argparse type for "[2,1]" style partitions"""
    try:
        return Partition.parse(text)
    except InvalidInputError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def parse_term(text: str) -> TruncatedSeries:
    """
    Parse a monomial "[2,1]", "3/2:[2,1]" or "3/2:[2,1]:-2" (coefficient, partition, z exponent)

    Returns:
        Single-term series with bound |Γ|
    """
    pieces = text.split(':')
    if len(pieces) == 1:
        coeff, gamma, exponent = Fraction(1), Partition.parse(pieces[0]), 0
    elif len(pieces) in (2, 3):
        coeff = parse_rational(pieces[0])
        gamma = Partition.parse(pieces[1])
        try:
            exponent = int(pieces[2]) if len(pieces) == 3 else 0
        except ValueError as e:
            raise InvalidInputError(f"Malformed z exponent in {text!r}") from e
    else:
        raise InvalidInputError(f"Malformed term {text!r}, expected [coeff:]partition[:z_exp]")
    return TruncatedSeries.monomial(gamma, gamma.size, LaurentScalar.monomial(exponent, coeff))


def check_bound(value: int, limit: int, what: str):
    if value > limit:
        raise InvalidInputError(f"{what} {value} exceeds the configured bound {limit}")


def cmd_char(args, settings: EngineSettings) -> Output:
    value = character(args.shape, args.cycle_type)
    payload = {'lambda': str(args.shape), 'mu': str(args.cycle_type), 'value': value}
    return Output('char', payload, ('lambda', 'mu', 'value'),
                  [[payload['lambda'], payload['mu'], value]], title=f"χ_{args.shape}({args.cycle_type})")


def cmd_phi(args, settings: EngineSettings) -> Output:
    value = format_rational(phi(args.shape, args.delta))
    payload = {'lambda': str(args.shape), 'delta': str(args.delta), 'value': value}
    return Output('phi', payload, ('lambda', 'delta', 'value'),
                  [[payload['lambda'], payload['delta'], value]], title=f"φ_{args.shape}({args.delta})")


def cmd_hurwitz(args, settings: EngineSettings) -> Output:
    """Disconnected or connected shifted Hurwitz number, optionally with the classical value"""
    if args.n > settings.hurwitz_hard_max_n:
        raise InvalidInputError(f"Degree {args.n} exceeds the hard limit {settings.hurwitz_hard_max_n}")
    check_bound(args.n, settings.hurwitz_max_n, "Degree")
    check_bound(args.g, settings.hurwitz_max_genus, "Genus")
    query = HurwitzQuery(args.g, args.n, tuple(args.ramification))
    result = connected_CU(query) if args.connected else disconnected_U(query, settings.threads)
    payload = result.to_dict()
    if args.classical:
        payload['classical'] = format_rational(classical_mu(query, settings.threads))
    row = [payload['g'], payload['h'], payload['n'], ";".join(payload['ramification']),
           payload['value'], payload['connected']]
    return Output('hurwitz', payload, ('g', 'h', 'n', 'ramification', 'value', 'connected'), [row],
                  title=f"{'CU' if args.connected else 'U'}_{args.g}^(h={result.source_genus_h}, n={args.n})")


def cmd_classprod(args, settings: EngineSettings) -> Output:
    ambient = args.n if args.n is not None else args.left.size + args.right.size
    check_bound(ambient, settings.hurwitz_max_n, "Ambient degree")
    constants = structure_constants(args.left, args.right, args.n, settings.threads)
    result = constants.to_dict()
    payload = {'lhs': str(args.left), 'rhs': str(args.right), 'result': result}
    rows = [[entry['partition'], entry['coeff']] for entry in result]
    title = f"A{args.left} A{args.right} in B_{ambient}"
    return Output('classprod', payload, ('partition', 'coeff'), rows, title=title)


def _operator(delta: Partition, bound: int, method: str, normalized: bool, threads: int) -> BlockOperator:
    if method == 'normal-ordered':
        operator = build_w_normal_ordered(delta, bound)
    elif method == 'explicit':
        operator = build_w_explicit(delta, bound)
    else:
        operator = build_w_action(delta, bound, threads)
    return normalize(operator) if normalized else operator


def cmd_cutjoin(args, settings: EngineSettings) -> Output:
    """build, apply, compose and eigen actions on W(Δ, z)"""
    bound = args.N if args.N is not None else settings.operator_max_n
    check_bound(bound, settings.operator_max_n, "Truncation")
    threads = settings.threads

    if args.action == 'build':
        operator = _operator(args.delta, bound, args.method, args.normalized, threads)
        payload = operator.to_dict()
        return Output('operator', payload, ('n', 'from', 'to', 'z_exp', 'coeff'), operator_rows(payload),
                      title=operator.label)

    if args.action == 'compose':
        left = _operator(args.delta, bound, args.method, args.normalized, threads)
        right = _operator(args.other, bound, args.method, args.normalized, threads)
        operator = compose(left, right)
        payload = operator.to_dict()
        return Output('operator', payload, ('n', 'from', 'to', 'z_exp', 'coeff'), operator_rows(payload),
                      title=operator.label)

    if args.action == 'apply':
        operator = _operator(args.delta, bound, args.method, args.normalized, threads)
        series = TruncatedSeries(bound)
        for term in args.terms:
            parsed = parse_term(term)
            check_bound(parsed.bound, bound, "Monomial degree")
            for gamma, value in parsed.items():
                series = series + TruncatedSeries(bound, {gamma: value})
        image = apply(operator, series)
        payload = {'operator': operator.label, 'N': bound, 'terms': image.to_dict()}
        return Output('series', payload, ('partition', 'z_exp', 'coeff'), series_rows(payload['terms']),
                      title=f"{operator.label} applied")

    check_bound(args.shape.size, bound, "Shape size")
    result = eigencheck(args.delta, args.shape, bound, _operator(args.delta, bound, args.method, False, threads))
    payload = result.to_dict()
    rows = [[payload['delta'], payload['lambda'], term['z_exp'], term['coeff'], payload['holds']]
            for term in payload['eigenvalue']] or [[payload['delta'], payload['lambda'], 0, '0', payload['holds']]]
    return Output('eigen', payload, ('delta', 'lambda', 'z_exp', 'coeff', 'holds'), rows,
                  title=f"W({args.delta}) on S_{args.shape}")


def cmd_schur(args, settings: EngineSettings) -> Output:
    if args.genus_expanded is not None:
        series = genus_schur(args.shape, args.genus_expanded)
    else:
        series = schur_poly(args.shape)
    payload = {
        'lambda': str(args.shape),
        'genus_expanded': args.genus_expanded is not None,
        'N': series.bound,
        'terms': series.to_dict(),
    }
    return Output('series', payload, ('partition', 'z_exp', 'coeff'), series_rows(payload['terms']),
                  title=f"S_{args.shape}")


def cmd_genfun(args, settings: EngineSettings) -> Output:
    """Φ_g by the direct sum, an operator exponential, or a closed form"""
    bound = args.N if args.N is not None else settings.genfun_max_n
    u_bound = args.U if args.U is not None else settings.genfun_max_u
    check_bound(bound, max(settings.genfun_max_n, settings.operator_max_n), "Truncation")
    check_bound(args.g, settings.hurwitz_max_genus, "Genus")
    insertions = InsertionSpec.parse(args.insert)

    if args.closed:
        series = CLOSED_FORMS[args.closed](bound)
        method = f"closed:{args.closed}"
    elif args.method == 'direct':
        series = phi_direct(args.g, insertions, bound, u_bound, two_family=args.two_family, threads=settings.threads)
        method = 'direct'
    else:
        base = phi_direct(args.g, InsertionSpec(), bound, 0, two_family=args.two_family, threads=settings.threads)
        exponentiate = phi_exp_action if args.method == 'action' else phi_exp_literal
        series = exponentiate(args.g, insertions, base, bound, u_bound, settings.threads)
        method = args.method

    payload = {
        'g': args.g,
        'N': series.bound,
        'U': series.u_bound,
        'method': method,
        'families': series.families,
        'insertions': insertions.to_dict() if not args.closed else [],
        'terms': series.to_dict(),
    }
    return Output('genfun', payload, ('u_exps', 'partitions', 'z_exp', 'coeff'), multiseries_rows(payload['terms']),
                  title=f"Φ_{args.g} ({method})")


def cmd_verify(args, settings: EngineSettings):
    results = run_suites(args.suite, settings)
    generator = ReportGenerator()
    if args.report:
        generator.write_report(results, Path(args.report))
    payload = {
        'suite': args.suite,
        'passed': all(result.passed for result in results),
        'suites': [result.to_dict() for result in results],
    }
    rows = [[result.suite, check.name, check.hard, check.passed, check.detail]
            for result in results for check in result.checks]
    output = Output('verify', payload, ('suite', 'check', 'hard', 'passed', 'detail'), rows, title='verify')
    return output, results


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description='Exact engine for shifted genus-expanded cut-and-join operators')
    parser.add_argument('--format', choices=OUTPUT_FORMATS, default='json', help='Output format')
    parser.add_argument('--max-n', type=int, help='Raise the degree/truncation bounds of this run')
    parser.add_argument('--threads', type=int, help='Worker threads (results do not depend on it)')
    parser.add_argument('--config', help='key=value or JSON configuration file')
    parser.add_argument('--log-level', help='DEBUG, INFO, WARNING or ERROR')
    commands = parser.add_subparsers(dest='command', required=True)

    char_parser = commands.add_parser('char', help='Irreducible character χ_λ(μ)')
    char_parser.add_argument('shape', type=partition_arg)
    char_parser.add_argument('cycle_type', type=partition_arg)

    phi_parser = commands.add_parser('phi', help='Normalized shifted character φ_λ(Δ)')
    phi_parser.add_argument('shape', type=partition_arg)
    phi_parser.add_argument('delta', type=partition_arg)

    hurwitz_parser = commands.add_parser('hurwitz', help='Shifted Hurwitz number')
    hurwitz_parser.add_argument('--connected', action='store_true', help='Connected number')
    hurwitz_parser.add_argument('--classical', action='store_true', help='Also report the classical number')
    hurwitz_parser.add_argument('g', type=int)
    hurwitz_parser.add_argument('n', type=int)
    hurwitz_parser.add_argument('ramification', type=partition_arg, nargs='*')

    classprod_parser = commands.add_parser('classprod', help='Structure constants of A_Δ1 A_Δ2')
    classprod_parser.add_argument('left', type=partition_arg)
    classprod_parser.add_argument('right', type=partition_arg)
    classprod_parser.add_argument('--n', type=int, help='Ambient degree (default |Δ1|+|Δ2|)')

    cutjoin_parser = commands.add_parser('cutjoin', help='Cut-and-join operators')
    cutjoin_parser.add_argument('--N', type=int, help='Truncation degree')
    cutjoin_parser.add_argument('--normalized', action='store_true', help='Use Ŵ(Δ, z)')
    cutjoin_parser.add_argument('--method', choices=('action', 'normal-ordered', 'explicit'), default='action')
    actions = cutjoin_parser.add_subparsers(dest='action', required=True)
    build = actions.add_parser('build')
    build.add_argument('delta', type=partition_arg)
    apply_parser = actions.add_parser('apply')
    apply_parser.add_argument('delta', type=partition_arg)
    apply_parser.add_argument('terms', nargs='+', help='[coeff:]partition[:z_exp]')
    compose_parser = actions.add_parser('compose')
    compose_parser.add_argument('delta', type=partition_arg)
    compose_parser.add_argument('other', type=partition_arg)
    eigen = actions.add_parser('eigen')
    eigen.add_argument('delta', type=partition_arg)
    eigen.add_argument('shape', type=partition_arg)

    schur_parser = commands.add_parser('schur', help='Schur function in power sums')
    schur_parser.add_argument('shape', type=partition_arg)
    schur_parser.add_argument('--genus-expanded', type=int, metavar='N', help='Genus-expanded, truncated at N')

    genfun_parser = commands.add_parser('genfun', help='Generating function Φ_g')
    genfun_parser.add_argument('--g', type=int, default=0)
    genfun_parser.add_argument('--insert', action='append', default=[], help='name=[parts], repeatable')
    genfun_parser.add_argument('--N', type=int, help='Largest covering degree')
    genfun_parser.add_argument('--U', type=int, help='Largest total u-order')
    genfun_parser.add_argument('--method', choices=('direct', 'action', 'literal'), default='direct')
    genfun_parser.add_argument('--two-family', action='store_true')
    genfun_parser.add_argument('--closed', choices=tuple(CLOSED_FORMS), help='Evaluate a closed form instead')

    verify_parser = commands.add_parser('verify', help='Run verification suites')
    verify_parser.add_argument('suite', nargs='?', default='all', choices=SUITE_CHOICES)
    verify_parser.add_argument('--report', help='Also write the rendered report to this file')

    return parser


COMMANDS = {
    'char': cmd_char,
    'phi': cmd_phi,
    'hurwitz': cmd_hurwitz,
    'classprod': cmd_classprod,
    'cutjoin': cmd_cutjoin,
    'schur': cmd_schur,
    'genfun': cmd_genfun,
}


def resolve_settings(args) -> EngineSettings:
    """Defaults, then the config file, then command-line flags"""
    settings = load_settings(resolve_config_path(args.config))
    if args.threads is not None and args.threads < 1:
        raise InvalidInputError(f"--threads must be positive, got {args.threads}")
    max_n = args.max_n
    if max_n is not None and max_n < 0:
        raise InvalidInputError(f"--max-n must be nonnegative, got {max_n}")
    return settings.with_overrides(
        threads=args.threads,
        hurwitz_max_n=max_n,
        operator_max_n=max_n,
    )


def render(output: Output, fmt: str) -> str:
    if fmt == 'tsv':
        return to_tsv(output)
    if fmt == 'pretty':
        return ReportGenerator().render_pretty(output)
    return to_json(output)


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and print its result

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Exit code: 0 pass, 1 verification failure, 2 usage error, 3 internal error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level or LOG_LEVEL)
    logger.info(f"=== Running {args.command} ===")

    try:
        settings = resolve_settings(args)
        logger.debug(f"Settings: {settings.to_dict()}")
        if args.command == 'verify':
            output, results = cmd_verify(args, settings)
            if args.format == 'pretty':
                print(ReportGenerator().render_verification(results))
            else:
                print(render(output, args.format))
            code = EXIT_OK if output.payload['passed'] else EXIT_VERIFY_FAILED
        else:
            print(render(COMMANDS[args.command](args, settings), args.format))
            code = EXIT_OK
    except (InvalidInputError, InvalidStateError) as e:
        logger.error(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantBreach as e:
        logger.error(f"Invariant breach in {args.command}: {e}", exc_info=True)
        return EXIT_INTERNAL
    except Exception as e:
        logger.error(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return EXIT_INTERNAL

    logger.info("=== Task Completed ===")
    return code


def main():
    """Main entry point"""
    sys.exit(run())


if __name__ == '__main__':
    main()
