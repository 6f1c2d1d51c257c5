"""
secatbounds - cohomological bounds for sectional category and topological complexity

Subcommands:
1. bound       symbolic interval for cd, k, TC_r, secat, TC[rho] or TC_r(X) from a descriptor file
2. cohomology  H^n(G; A) of a finite group
3. height      cup-power height of the relative class of H <= G
4. spectral    exact-couple pages, the D_p lower bound and kappa for H <= G
5. verify      structural identity suites (catalog grid, or one group from --input)

Exit status: 0 success, 1 verification failure, 2 input error or cap exceeded.
"""
import argparse
import logging
import sys
from typing import Optional, Sequence

from secatbounds import __version__
from secatbounds.config import load_settings
from secatbounds.core import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, Request, dispatch
from secatbounds.errors import CapExceededError, InconsistentBoundsError, InputError, VerificationError
from secatbounds.utils import render, setup_logging

logger = logging.getLogger("secatbounds")


def _error_report(kind: str, exc: Exception, **extra) -> dict:
    return {"error": kind, "message": str(exc.args[0]) if exc.args else str(exc), **extra}


def run(request: Request) -> tuple[int, dict]:
    """Dispatch one request and turn engine exceptions into exit codes."""
    try:
        return dispatch(request)
    except CapExceededError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT, _error_report("cap_exceeded", exc, cap=exc.cap, value=exc.value, limit=exc.limit)
    except InputError as exc:
        logger.error("%s", exc)
        return EXIT_INPUT, _error_report("input", exc, field=exc.field)
    except InconsistentBoundsError as exc:
        # contradictory metadata is an input problem
        logger.error("%s", exc)
        return EXIT_INPUT, _error_report("inconsistent_bounds", exc)
    except VerificationError as exc:
        logger.error("%s", exc)
        return EXIT_VERIFICATION, _error_report("verification", exc, counterexample=exc.counterexample)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="secatbounds", description="Cohomological bounds for secat and TC_r")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name in ("bound", "cohomology", "height", "spectral", "verify"):
        p = sub.add_parser(name)
        p.add_argument("--input", "-i", type=str, required=name != "verify",
                       help="JSON, TOML or YAML input file")
        p.add_argument("--r", type=int, help="number of path points / power of the diagonal")
        p.add_argument("--degree", type=int, help="cohomological degree")
        p.add_argument("--max-n", dest="max_n", type=int, help="largest cup power for height")
        p.add_argument("--window", type=int, help="spectral window r + s")
        p.add_argument("--coefficients", choices=("trivial", "regular", "ideal"))
        p.add_argument("--max-degree", dest="max_degree", type=int)
        p.add_argument("--max-rank", dest="max_rank", type=int)
        p.add_argument("--max-order", dest="max_order", type=int)
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
        fmt.add_argument("--text", dest="fmt", action="store_const", const="text")
        p.add_argument("--config", "-c", type=str, help="config file path (default: config.yaml)")
        p.add_argument("--log-level", dest="log_level", type=str, help="overrides logging.level from config")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    request = Request(
        subcommand=args.subcommand, input=args.input, r=args.r, degree=args.degree, max_n=args.max_n,
        window=args.window, coefficients=args.coefficients, fmt=args.fmt or "json", config=args.config,
        max_degree=args.max_degree, max_rank=args.max_rank, max_order=args.max_order,
    )
    try:
        log_cfg = load_settings(args.config).logging
        setup_logging(args.log_level or log_cfg.level, log_cfg.fmt)
    except InputError as exc:
        setup_logging("WARNING")
        sys.stdout.write(render(_error_report("input", exc, field=exc.field), request.fmt))
        return EXIT_INPUT
    status, report = run(request)
    sys.stdout.write(render(report, request.fmt))
    if status == EXIT_OK:
        logger.info("%s finished", request.subcommand)
    return status


if __name__ == "__main__":
    sys.exit(main())
