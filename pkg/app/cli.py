"""Command-line interface"""

import argparse
import logging
import sys
from typing import Optional, Sequence

from config import Settings
from .errors import DegreeGuardExceeded, DomainError, ResourceGuardExceeded
from .report import ReportFormatter
from .session import VERIFY_KINDS, RunConfig, VerificationSession

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_GUARD = 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int, required=True, help="number of rows")
    common.add_argument("--n", type=int, required=True, help="number of columns")
    common.add_argument("--y", help='permutation in one-line notation, e.g. "3,1,2,4", or "top" for c^m')
    common.add_argument("--format", dest="output_format", choices=Settings.OUTPUT_FORMATS, default=None)
    common.add_argument("--degree-guard", type=int, default=None, help="maximum degree reached by Groebner completion")
    common.add_argument("--dedup", action="store_true", help="drop repeated minors from generating sequences")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for independent verifications")
    common.add_argument("--log-level", default=None, help="logging level (default from QPRIME_LOG_LEVEL)")
    common.add_argument("--timing", action="store_true", default=None, help="record elapsed_ms in certificates")

    parser = argparse.ArgumentParser(
        prog="qprime",
        description="Torus-invariant primes of quantum matrices: constructions and verifications",
    )
    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("list-primes", parents=[common], help="all y <= c^m with their generating minors")
    commands.add_parser("generators", parents=[common], help="ordered generating sequence of I(y)")
    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("kind", choices=VERIFY_KINDS + ("all",))
    verify.add_argument("--pairs", choices=("covers", "all"), default="covers", help="pairs used by separation")
    commands.add_parser("export-poset", parents=[common], help="DOT graph of the prime poset")
    return parser


def _configure_logging(level: Optional[str]):
    logging.basicConfig(
        stream=sys.stderr,
        level=(level or Settings.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def run(args: argparse.Namespace) -> int:
    config = RunConfig.from_text(
        args.m,
        args.n,
        args.y,
        degree_guard=args.degree_guard,
        output_format=args.output_format,
        dedup=args.dedup,
        jobs=args.jobs,
        pairs=getattr(args, "pairs", None),
        timing=args.timing,
    )
    session = VerificationSession(config)
    formatter = ReportFormatter(config.output_format)

    if args.command == "list-primes":
        if config.output_format == "dot":
            nodes, edges = session.poset_graph()
            print(formatter.format_dot(nodes, edges, config.m, config.n))
        else:
            print(formatter.format_primes(session.list_primes()))
        return EXIT_PASS
    if args.command == "generators":
        print(formatter.format_generators(session.generators()))
        return EXIT_PASS
    if args.command == "export-poset":
        nodes, edges = session.poset_graph()
        print(formatter.format_dot(nodes, edges, config.m, config.n))
        return EXIT_PASS

    certificates = session.verify(args.kind)
    print(formatter.format_certificates(certificates))
    return EXIT_PASS if all(cert.passed for cert in certificates) else EXIT_FAIL


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.log_level)
    try:
        return run(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (DegreeGuardExceeded, ResourceGuardExceeded) as exc:
        logger.warning("guard exhausted: %s", exc)
        print(f"guard exhausted: {exc}", file=sys.stderr)
        return EXIT_GUARD
