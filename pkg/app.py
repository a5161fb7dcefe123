"""
tracecode
Command-line entry point: quantum codes from trace-depending polynomials
"""

import argparse
import logging
import os
import sys
from typing import List, Optional

from pydantic import ValidationError

from commands import build, gv, sporadic, verify
from config import config
from exceptions import TracecodeError
from report_generator import ReportGenerator
from result_models import RunConfig

logger = logging.getLogger('tracecode')

COMMAND_MODULES = (verify, build, sporadic, gv)


def int_ranges(values: Optional[List[str]]) -> List[int]:
    """Expand '3', '0-12' and '1,4' style arguments into a sorted list"""
    result = set()
    for value in values or []:
        for part in value.split(','):
            if not part:
                continue
            if '-' in part.strip('-'):
                low, high = part.split('-', 1)
                result.update(range(int(low), int(high) + 1))
            else:
                result.add(int(part))
    return sorted(result)


def common_options(profile) -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    triple = parent.add_argument_group('parameters')
    triple.add_argument('--q', nargs='+', help='base field orders q')
    triple.add_argument('--n', nargs='+', help='half extension degrees n (GF(q^2n))')
    triple.add_argument('--t', nargs='+', help='t with b = 1 + q^t')
    triple.add_argument('--b', nargs='+', help='b = 1 + q^t, alternative to --t')
    triple.add_argument('--nprime', type=int, dest='n_prime', help="subfield parameter n' (GF(q^2n'))")
    triple.add_argument('--tau', nargs='+', help="tau values, e.g. '0-12' or '3,5'")
    triple.add_argument('--r', type=int, help='base-field expansion degree r')
    triple.add_argument('--k', type=int, help='quantum dimension, for gv')
    triple.add_argument('--d', type=int, help='minimum distance, for gv')
    triple.add_argument('--construction', choices=['delta', 'gamma'], default='delta')

    run = parent.add_argument_group('run')
    run.add_argument('--format', choices=['json', 'csv', 'text'], default='json')
    run.add_argument('--out', help='report file, stdout when omitted')
    run.add_argument('--export', metavar='DIR',
                     help='write polynomial and generator matrix files of built codes to DIR')
    run.add_argument('--jobs', type=int, default=profile.JOBS)
    run.add_argument('--heavy', action='store_true', default=profile.HEAVY,
                     help='include the large-field rows')
    run.add_argument('--budget', type=int, default=profile.SUBSET_BUDGET,
                     help='largest subset count checked exhaustively')
    run.add_argument('--trials', type=int, default=profile.SAMPLE_TRIALS,
                     help='random subsets when the budget is exceeded')
    run.add_argument('--enumeration-cap', type=int, default=profile.ENUMERATION_CAP)
    run.add_argument('--seed', type=int, default=profile.RANDOM_SEED)
    run.add_argument('--all-primitive', action='store_true',
                     help='report every primitive element giving self-orthogonality')
    run.add_argument('--golden', action='store_true',
                     help='build the golden rows matching the filters instead of one triple')
    run.add_argument('--quiet', action='store_true', help='no progress bars, warnings only')
    return parent


def build_parser(profile) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='tracecode',
        description='Stabilizer codes from evaluation codes at the roots of trace-depending polynomials')
    subparsers = parser.add_subparsers(dest='command', required=True)
    parent = common_options(profile)
    for module in COMMAND_MODULES:
        module.register(subparsers, parent)
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        q=int_ranges(args.q), n=int_ranges(args.n), t=int_ranges(args.t), b=int_ranges(args.b),
        n_prime=args.n_prime, tau=int_ranges(args.tau), r=args.r, k=args.k, d=args.d,
        construction=args.construction, format=args.format, out=args.out, export=args.export,
        jobs=args.jobs, heavy=args.heavy, budget=args.budget, trials=args.trials,
        enumeration_cap=args.enumeration_cap, seed=args.seed,
        all_primitive=args.all_primitive, golden=args.golden, quiet=args.quiet,
    )


def main(argv: Optional[List[str]] = None) -> int:
    profile = config[os.getenv('TRACECODE_PROFILE', 'default')]
    parser = build_parser(profile)
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING if args.quiet else profile.LOG_LEVEL,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        cfg = run_config(args)
    except (ValidationError, ValueError) as e:
        parser.error(str(e))

    try:
        report = args.handler(cfg)
    except TracecodeError as e:
        logger.error(f"{cfg.command} failed: {e}")
        return 2

    ReportGenerator(cfg.format).write(report, cfg.out)
    logger.info(f"{cfg.command}: {report.summary()}")
    return 1 if report.failed else 0


if __name__ == '__main__':
    sys.exit(main())
