"""
Command-line front end for unruh-tangle: point evaluation, grid sweeps and
self-verification.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""
import argparse
import logging
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "src"))

from pydantic import ValidationError  # noqa: E402

from unruh.config import DEFAULT_GRID_N, MAX_GRID_N  # noqa: E402
from unruh.exceptions import ConsistencyError, ConvergenceError, ParameterRangeError  # noqa: E402
from unruh.model import AccelPair, check_r  # noqa: E402
from unruh.resolver import QUANTITIES  # noqa: E402
from unruh.sweep import SweepConfig, format_float, print_report, run_sweep, write_sweep  # noqa: E402
from unruh.tangles import build_report, single_acceleration_tangles  # noqa: E402
from unruh.verify import print_verification, run_verify  # noqa: E402

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_INTERRUPTED = 130

DEFAULT_QUANTITIES = "corrected,legacy,deltas"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruh-tangle",
        description="Negativities and pi-tangle of a fermionic GHZ state with two accelerated observers",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=f"""
Acceleration parameters are in radians on [0, pi/4]; pi/4 is infinite acceleration.

Examples:
  python main.py eval 0 0
  python main.py eval 0.7853981633974483 0.7853981633974483
  python main.py single 0.5
  python main.py sweep --grid 33 --quantities corrected,deltas --format csv --out fig.csv
  python main.py verify --grid 65

Sweep quantities: {', '.join(QUANTITIES)}
        """,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="Evaluate every quantity at one (r_b, r_c) point")
    p_eval.add_argument("r_b", type=float)
    p_eval.add_argument("r_c", type=float)

    p_single = sub.add_parser("single", help="Single-acceleration tangles (r_b = 0)")
    p_single.add_argument("r_c", type=float)

    p_sweep = sub.add_parser("sweep", help="Write a grid sweep to CSV or JSON")
    p_sweep.add_argument("--grid", type=int, default=DEFAULT_GRID_N, help=f"Points per axis, 2..{MAX_GRID_N}")
    p_sweep.add_argument(
        "--quantities",
        default=DEFAULT_QUANTITIES,
        help=f"Comma-separated quantity names (default: {DEFAULT_QUANTITIES})",
    )
    p_sweep.add_argument("--format", choices=["csv", "json"], default="csv", dest="output_format")
    p_sweep.add_argument("--out", required=True, help="Output file path")
    p_sweep.add_argument("--workers", type=int, default=1, help="Worker processes (rows stay in grid order)")

    p_verify = sub.add_parser("verify", help="Run every invariant suite over a grid")
    p_verify.add_argument("--grid", type=int, default=DEFAULT_GRID_N, help="Points per axis, at least 2")

    return parser


def _validation_message(e: ValidationError) -> str:
    err = e.errors()[0]
    field = ".".join(str(x) for x in err.get("loc", ()))
    return f"{field}: {err['msg']}" if field else err["msg"]


def cmd_eval(args, parser: argparse.ArgumentParser) -> int:
    try:
        p = AccelPair.of(args.r_b, args.r_c)
    except ParameterRangeError as e:
        parser.error(str(e))

    try:
        report = build_report(p)
        print_report(report)
        report.check()
    except (ConsistencyError, ConvergenceError) as e:
        print(f"ERROR: consistency check failed: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_single(args, parser: argparse.ArgumentParser) -> int:
    try:
        r_c = check_r("r_c", args.r_c)
    except ParameterRangeError as e:
        parser.error(str(e))

    tangles = single_acceleration_tangles(r_c)
    print(f"\n{'='*80}")
    print(f"Single acceleration (r_b = 0) at r_c={format_float(r_c)}")
    print(f"{'='*80}")
    for name, value in tangles._asdict().items():
        print(f"{name:>6}  {format_float(value)}")
    print(f"{'='*80}\n")
    return EXIT_OK


def cmd_sweep(args, parser: argparse.ArgumentParser) -> int:
    names = [q for q in (s.strip() for s in args.quantities.split(",")) if q]
    try:
        config = SweepConfig(
            grid_n=args.grid,
            output_format=args.output_format,
            output_path=args.out,
            quantities=names,
            workers=args.workers,
        )
    except ValidationError as e:
        parser.error(_validation_message(e))

    df = run_sweep(config)
    try:
        write_sweep(df, config)
    except OSError as e:
        print(f"ERROR: cannot write {config.output_path}: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_verify(args, parser: argparse.ArgumentParser) -> int:
    if args.grid < 2:
        parser.error(f"--grid must be at least 2, got {args.grid}")

    result = run_verify(args.grid)
    print_verification(result)
    return EXIT_OK if result.passed else EXIT_VERIFY_FAILED


COMMANDS = {
    "eval": cmd_eval,
    "single": cmd_single,
    "sweep": cmd_sweep,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    """Main entry point. Returns the process exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    try:
        return COMMANDS[args.command](args, parser)
    except KeyboardInterrupt:
        print("\n\nInterrupted.")
        return EXIT_INTERRUPTED


if __name__ == "__main__":
    sys.exit(main())
