"""Command-line entry point.

Usage:
    python -m apolar hilbert --invariant det --n 3
    python -m apolar verify --invariant pf --n 3 --route both
    python -m apolar groebner --invariant det --n 4
    python -m apolar bounds --invariant det --n 4 --strict
    python -m apolar table --n 2..6 --golden tests/golden/determinant_bounds.csv
    python -m apolar contract --invariant det --n 2 --operator "d_{1,1}*d_{2,2}"
    python -m apolar waring --grid 1x3 --form "a_{1,1}*a_{1,2}*a_{1,3}" --linear "a_{1,1} + a_{1,2} + a_{1,3}" ...

Exit codes: 0 success, 1 usage error, 2 resource ceiling exceeded, 3 verification failed.
"""

import argparse
import sys
from typing import List, Optional

from pydantic import ValidationError

from apolar.cli import commands
from apolar.core.config import settings
from apolar.core.errors import ApolarError, UsageError
from apolar.core.logger import logger
from apolar.core.progress import LogProgressObserver, progress
from apolar.store.models import InvariantKind, Mode, OutputFormat, Route


class ApolarArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting, so bad flags share the exit-code path."""

    def error(self, message: str):
        raise UsageError(message)


def _engine_flags() -> ApolarArgumentParser:
    parent = ApolarArgumentParser(add_help=False)
    parent.add_argument("--mode", choices=[m.value for m in Mode], default=None,
                        help="Arithmetic: exact rationals or a prime field (env APOLAR_MODE)")
    parent.add_argument("--prime", type=int, default=None, help="Prime for mod-p mode (env APOLAR_PRIME)")
    parent.add_argument("--ceiling", type=int, default=None,
                        help="Largest ambient dimension or row count built (env APOLAR_CEILING)")
    parent.add_argument("--max-pivots", type=int, default=None, help="Largest echelon basis (env APOLAR_MAX_PIVOTS)")
    parent.add_argument("--threads", type=int, default=None, help="Worker threads (env APOLAR_THREADS)")
    parent.add_argument("--seed", type=int, default=None, help="Seed for randomized checks (env APOLAR_SEED)")
    parent.add_argument("--format", choices=[f.value for f in OutputFormat], default=None, help="Output format")
    parent.add_argument("--store", nargs="?", const=settings.RESULTS_PATH, default=None,
                        help="Reuse and record results in a JSON file")
    return parent


def _invariant_flags() -> ApolarArgumentParser:
    parent = ApolarArgumentParser(add_help=False)
    parent.add_argument("--invariant", choices=[k.value for k in InvariantKind], required=True)
    parent.add_argument("--n", type=int, required=True)
    return parent


def _explicit_form_flags() -> ApolarArgumentParser:
    parent = ApolarArgumentParser(add_help=False)
    parent.add_argument("--invariant", choices=[k.value for k in InvariantKind], default=None)
    parent.add_argument("--n", type=int, default=None)
    parent.add_argument("--form", default=None, help="Form in R, e.g. 'a_{1,1}*a_{2,2} - a_{1,2}*a_{2,1}'")
    parent.add_argument("--grid", default=None, help="ROWSxCOLS grid for --form")
    parent.add_argument("--symmetry", default="generic", choices=["generic", "skew", "zero-diagonal-symmetric"])
    return parent


def build_parser() -> ApolarArgumentParser:
    parser = ApolarArgumentParser(
        prog="apolar",
        description="Apolar ideals, Hilbert functions and rank bounds of det, perm, Pf and Hf",
    )
    sub = parser.add_subparsers(dest="command")
    engine = _engine_flags()
    invariant = _invariant_flags()
    explicit = _explicit_form_flags()

    p_hilbert = sub.add_parser("hilbert", parents=[engine, invariant], help="Hilbert function of S/Ann(F)")
    p_hilbert.add_argument("--generators", action="store_true", help="Also report minimal generator counts")
    p_hilbert.add_argument("--k-max", type=int, default=None)

    p_verify = sub.add_parser("verify", parents=[engine, invariant], help="Check Ann(F) = (degree-2 candidates)")
    p_verify.add_argument("--route", choices=[r.value for r in Route], default=None)
    p_verify.add_argument("--k-max", type=int, default=None)
    p_verify.add_argument("--drop-candidate", type=int, action="append", default=None,
                          help="Leave out candidate #i (repeatable)")

    p_groebner = sub.add_parser("groebner", parents=[engine, invariant], help="Buchberger check of a generating set")
    p_groebner.add_argument("--basis", choices=["candidates", "permanental"], default="candidates")
    p_groebner.add_argument("--drop-candidate", type=int, action="append", default=None)
    p_groebner.add_argument("--no-skip-coprime", action="store_true", help="Reduce coprime pairs as well")
    p_groebner.add_argument("--complete", action="store_true", help="Run Buchberger completion and print the basis")
    p_groebner.add_argument("--max-generators", type=int, default=None)
    p_groebner.add_argument("--spot-checks", type=int, default=100,
                            help="Seeded random ideal members divided by a passing basis (0 to skip)")

    p_bounds = sub.add_parser("bounds", parents=[engine, invariant], help="Rank and cactus-rank bounds")
    p_bounds.add_argument("--strict", action="store_true", help="Certify the generating degree first")
    p_bounds.add_argument("--asymptotic", action="store_true", help="Include asymptotic estimates")

    p_table = sub.add_parser("table", parents=[engine], help="Determinant bounds table")
    p_table.add_argument("--n", default="2..6", help="Range such as 2..6 or 2,3,4")
    p_table.add_argument("--golden", default=None, help="CSV file the table must reproduce")
    p_table.add_argument("--strict", action="store_true", help="Certify degree-2 generation per row")

    p_contract = sub.add_parser("contract", parents=[engine, explicit], help="Contraction h o F")
    p_contract.add_argument("--operator", required=True, help="Operator in S, e.g. 'd_{1,1}*d_{2,2}'")

    p_waring = sub.add_parser("waring", parents=[engine, explicit], help="Check or solve a power-sum decomposition")
    p_waring.add_argument("--linear", action="append", default=None, help="Linear form (repeatable)")
    p_waring.add_argument("--coeff", action="append", default=None, help="Coefficient per linear form (repeatable)")

    return parser


COMMANDS = {
    "hilbert": commands.cmd_hilbert,
    "verify": commands.cmd_verify,
    "groebner": commands.cmd_groebner,
    "bounds": commands.cmd_bounds,
    "table": commands.cmd_table,
    "contract": commands.cmd_contract,
    "waring": commands.cmd_waring,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    observer = LogProgressObserver()
    progress.attach(observer)
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            parser.print_help()
            return 0
        logger.debug(f"Running {args.command} with {vars(args)}")
        return COMMANDS[args.command](args)
    except ValidationError as e:
        logger.error(f"Invalid configuration: {e.errors()[0]['msg']}")
        return UsageError.exit_code
    except ApolarError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    finally:
        progress.detach(observer)


if __name__ == "__main__":
    sys.exit(main())
