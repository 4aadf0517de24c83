import argparse
import logging
import os
import sys

from typing import Optional, Sequence

from pydantic import ValidationError

from .commands import (
    CharpolyCommand,
    ClassifyCommand,
    DehairCommand,
    EnumerateCommand,
    FamilyCommand,
    HairCommand,
    ReconcileCommand,
    SurveyCommand,
    TensorCommand,
    VerifyCommand,
)
from .errors import PalindromicError
from .models import CommandConfig, OutputFormat

WORKERS_ENV = "PALINDROMIC_WORKERS"

COMMAND_MAP = {
    "charpoly": CharpolyCommand,
    "classify": ClassifyCommand,
    "hair": HairCommand,
    "dehair": DehairCommand,
    "tensor": TensorCommand,
    "enumerate": EnumerateCommand,
    "survey": SurveyCommand,
    "verify": VerifyCommand,
    "reconcile": ReconcileCommand,
    "family": FamilyCommand,
}


def default_workers() -> int:
    """Worker count from PALINDROMIC_WORKERS, else the number of CPUs

    Raises:
        ValueError: If the variable is set but not a positive integer
    """

    value = os.environ.get(WORKERS_ENV)
    if value is None or not value.strip():
        return os.cpu_count() or 1
    try:
        workers = int(value)
    except ValueError:
        raise ValueError(f"Invalid {WORKERS_ENV}: {value!r}") from None
    if workers < 1:
        raise ValueError(f"Invalid {WORKERS_ENV}: {value!r}")
    return workers


def default_format() -> OutputFormat:
    return OutputFormat.TEXT if sys.stdout.isatty() else OutputFormat.JSON


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log progress to stderr (-v for info, -vv for debug)",
    )
    common.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        help="Output format (default: text on a terminal, json otherwise)",
    )
    common.add_argument("--input", help="Read graph6 lines from this file instead of stdin")
    common.add_argument(
        "--workers", type=int, help=f"Worker processes (default: ${WORKERS_ENV} or the CPU count)"
    )

    parser = argparse.ArgumentParser(
        prog="palindromic",
        description="Characteristic polynomials, palindromicity, hairings and surveys of small graphs",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    charpoly = subparsers.add_parser("charpoly", parents=[common], help="Characteristic polynomial of each graph")
    charpoly.add_argument("--method", default="berkowitz", help="berkowitz (default) or sachs")

    subparsers.add_parser("classify", parents=[common], help="Palindromic class of each graph")

    hair = subparsers.add_parser("hair", parents=[common], help="k-hairing of each graph")
    hair.add_argument("--k", type=int, default=1, help="Pendant vertices per vertex (default: 1)")

    subparsers.add_parser("dehair", parents=[common], help="Recover the core of a hairing")

    tensor = subparsers.add_parser("tensor", parents=[common], help="Kronecker product of two graphs")
    tensor.add_argument("graphs", nargs="*", help="Two graph6 strings (default: first two input lines)")

    enumerate_ = subparsers.add_parser("enumerate", parents=[common], help="All graphs of an order")
    enumerate_.add_argument("--n", type=int, required=True, help="Order")
    enumerate_.add_argument("--connected-only", action="store_true", help="Only connected graphs")

    survey = subparsers.add_parser("survey", parents=[common], help="Classify every graph of an order")
    survey.add_argument("--n", type=int, required=True, help="Order")
    survey.add_argument("--connected-only", action="store_true", help="Only connected graphs")
    survey.add_argument("--triangle-free", action="store_true", help="Only triangle-free graphs")
    survey.add_argument("--checkpoint", help="Directory for resumable progress")
    survey.add_argument("--resume", action="store_true", help="Continue from --checkpoint")

    verify = subparsers.add_parser("verify", parents=[common], help="Run the invariant suite")
    verify.add_argument("--slow", action="store_true", help="Include long-running checks")
    verify.add_argument("--only", nargs="+", help="Run only the named checks")

    reconcile = subparsers.add_parser("reconcile", parents=[common], help="Compare surveys with the published table")
    reconcile.add_argument("--reports", nargs="+", help="Survey report JSON files")

    family = subparsers.add_parser("family", parents=[common], help="Palindromic product family of a seed")
    family.add_argument("--seed", help="Seed graph6 (default: a bald palindromic graph of order 8)")
    family.add_argument("--limit", type=int, help="Stop after this many members")
    family.add_argument("--sidecar", help="Write JSON records of the members to this file")
    return parser


def build_config(args: argparse.Namespace) -> CommandConfig:
    """Shared settings of a parsed command line

    Raises:
        ValueError: If a value is out of range
    """

    try:
        return CommandConfig(
            command=args.command,
            input=args.input,
            output_format=OutputFormat(args.format) if args.format else default_format(),
            order=getattr(args, "n", None),
            k=getattr(args, "k", 1),
            connected_only=getattr(args, "connected_only", False),
            triangle_free=getattr(args, "triangle_free", False),
            workers=args.workers if args.workers is not None else default_workers(),
            checkpoint=getattr(args, "checkpoint", None),
            resume=getattr(args, "resume", False),
            verbose=args.verbose,
        )
    except ValidationError as e:
        error = e.errors()[0]
        flag = "--" + str(error["loc"][0]).replace("_", "-") if error["loc"] else "arguments"
        raise ValueError(f"Invalid {flag}: {error['msg']}") from None


def configure_logging(verbose: int) -> None:
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr, force=True
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run one subcommand and return its exit code

    0 on success, 1 on a domain error, 2 on a usage error
    """

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    configure_logging(args.verbose)
    try:
        config = build_config(args)
        command = COMMAND_MAP[args.command](config, args)
        return command.execute()
    except PalindromicError as e:
        print(f"palindromic {args.command}: error: {e}", file=sys.stderr)
        return 1
    except (ValueError, FileNotFoundError) as e:
        print(f"palindromic {args.command}: error: {e}", file=sys.stderr)
        return 2


def main():
    """Entry point for the palindromic CLI"""

    sys.exit(run())


if __name__ == "__main__":
    main()
