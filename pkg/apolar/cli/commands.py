"""Subcommand bodies. Each takes the parsed arguments and returns an exit code; results go to stdout."""

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional

from apolar.algebra.contraction import contract
from apolar.algebra.grid import Ring, Symmetry, VariableGrid
from apolar.algebra.polynomial import Polynomial
from apolar.apolarity.certify import certify_generating_degree
from apolar.apolarity.engine import minimal_generator_degrees, verify_degree2_generation_direct
from apolar.apolarity.waring import waring_solve, waring_verify
from apolar.bounds.ranks import asymptotic_estimates
from apolar.bounds.table import (
    assemble_table,
    bounds_report,
    cached_hilbert,
    compare_golden,
    load_golden,
    parse_range,
    render_table,
)
from apolar.core.config import settings
from apolar.core.errors import RouteUnavailableError, UsageError
from apolar.core.logger import logger
from apolar.core.options import EngineOptions
from apolar.groebner.buchberger import buchberger_check, buchberger_complete, spot_check_members
from apolar.groebner.permanental import permanental_basis
from apolar.groebner.verify import verify_degree2_generation_via_groebner
from apolar.invariants.builder import build_invariant, degree2_candidates, strategy_for
from apolar.store.models import InvariantKind, Mode, OutputFormat, Route, RunConfig, VerificationReport
from apolar.store.results import ResultStore

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 3


def emit(payload: Any):
    print(payload if isinstance(payload, str) else json.dumps(payload, indent=2))


def _flag(value, default):
    return default if value is None else value


def run_config(args) -> RunConfig:
    """Flags win over APOLAR_* environment variables, which win over defaults."""
    return RunConfig(
        invariant=args.invariant,
        n=args.n,
        mode=_flag(args.mode, settings.MODE),
        prime=_flag(args.prime, settings.PRIME),
        max_ambient=_flag(args.ceiling, settings.CEILING),
        max_pivots=_flag(args.max_pivots, settings.MAX_PIVOTS),
        output=_flag(args.format, OutputFormat.JSON),
        route=_flag(getattr(args, "route", None), Route.DIRECT),
        seed=_flag(args.seed, settings.SEED),
        threads=_flag(args.threads, settings.THREADS),
    )


def engine_options(args, config: Optional[RunConfig] = None) -> EngineOptions:
    mode = config.mode if config else Mode(_flag(args.mode, settings.MODE))
    return EngineOptions(
        prime=(config.prime if config else _flag(args.prime, settings.PRIME)) if mode == Mode.MOD_P else None,
        max_ambient=_flag(args.ceiling, settings.CEILING),
        max_pivots=_flag(args.max_pivots, settings.MAX_PIVOTS),
        threads=_flag(args.threads, settings.THREADS),
        dense_threshold=settings.DENSE_THRESHOLD,
    )


def result_store(args) -> Optional[ResultStore]:
    return ResultStore(args.store) if getattr(args, "store", None) else None


def cmd_hilbert(args) -> int:
    config = run_config(args)
    options = engine_options(args, config)
    if config.output == OutputFormat.TEXT_POLY:
        raise UsageError("text-poly output applies to contract and groebner")
    hilbert = cached_hilbert(config.invariant, config.n, options, result_store(args))
    record: Dict[str, Any] = {
        "invariant": config.invariant.value,
        "n": config.n,
        "hilbert": hilbert.values,
        "length": hilbert.length,
        "mode": config.mode.value,
    }
    if args.generators:
        form = build_invariant(config.invariant, config.n)
        record["mu"] = minimal_generator_degrees(form, args.k_max, options).mu
    if config.output == OutputFormat.CSV:
        lines = ["invariant,n,mode,k,h"]
        lines += [f"{config.invariant.value},{config.n},{config.mode.value},{k},{h}" for k, h in enumerate(hilbert.values)]
        emit("\n".join(lines))
    elif config.output == OutputFormat.TABLE:
        emit(f"{config.invariant.value} n={config.n}: H = {tuple(hilbert.values)}, length {hilbert.length}")
    else:
        emit(record)
    return EXIT_OK


def _candidates(kind: InvariantKind, n: int, drop: Optional[List[int]]) -> List[Polynomial]:
    candidates = degree2_candidates(kind, n)
    for index in sorted(set(drop or []), reverse=True):
        if not 0 <= index < len(candidates):
            raise UsageError(f"--drop-candidate {index} outside 0..{len(candidates) - 1}")
        logger.info(f"Dropping candidate #{index}: {candidates[index].to_text()}")
        del candidates[index]
    return candidates


def cmd_verify(args) -> int:
    config = run_config(args)
    options = engine_options(args, config)
    form = build_invariant(config.invariant, config.n)
    candidates = _candidates(config.invariant, config.n, args.drop_candidate)
    reports: List[VerificationReport] = []
    groebner_available = None

    if config.route in (Route.GROEBNER, Route.BOTH):
        try:
            reports.append(verify_degree2_generation_via_groebner(
                form, candidates, options=options, k_max=args.k_max, invariant=config.invariant, n=config.n
            ))
            groebner_available = True
        except RouteUnavailableError as e:
            logger.warning(f"{e}; falling back to the direct route")
            groebner_available = False
    if config.route in (Route.DIRECT, Route.BOTH) or groebner_available is False:
        reports.append(verify_degree2_generation_direct(
            form, candidates, args.k_max, options, invariant=config.invariant, n=config.n
        ))

    passed = all(report.passed for report in reports)
    emit({
        "invariant": config.invariant.value,
        "n": config.n,
        "mode": config.mode.value,
        "groebnerAvailable": groebner_available,
        "reports": [report.model_dump(mode="json", by_alias=True) for report in reports],
        "passed": passed,
    })
    return EXIT_OK if passed else EXIT_VERIFICATION_FAILED


def cmd_groebner(args) -> int:
    config = run_config(args)
    if args.basis == "permanental":
        if config.invariant != InvariantKind.PERMANENT:
            logger.info("The permanental basis generates the 2x2 permanents of D; --invariant is ignored")
        gens = permanental_basis(config.n)
    else:
        gens = _candidates(config.invariant, config.n, args.drop_candidate)
    if args.complete:
        basis = buchberger_complete(gens, max_generators=args.max_generators)
        emit("\n".join(g.to_text() for g in basis))
        return EXIT_OK
    report = buchberger_check(gens, skip_coprime=not args.no_skip_coprime, threads=config.threads)
    failures = 0
    if report.is_groebner and args.spot_checks:
        failures = spot_check_members(gens, args.spot_checks, config.seed)
    if config.output == OutputFormat.TEXT_POLY:
        emit("\n".join(g.to_text() for g in gens))
    else:
        record = report.model_dump(mode="json", by_alias=True)
        if report.is_groebner and args.spot_checks:
            record["spotChecks"] = {"samples": args.spot_checks, "seed": config.seed, "failures": failures}
        emit(record)
    return EXIT_OK if report.is_groebner and not failures else EXIT_VERIFICATION_FAILED


def cmd_bounds(args) -> int:
    config = run_config(args)
    options = engine_options(args, config)
    certificate = None
    if args.strict:
        route = Route.GROEBNER if config.invariant in (InvariantKind.DETERMINANT, InvariantKind.PERMANENT) else Route.DIRECT
        certificate = certify_generating_degree(config.invariant, config.n, route, options)
    report = bounds_report(config.invariant, config.n, certificate=certificate, strict=args.strict,
                           options=options, store=result_store(args))
    record = report.model_dump(mode="json")
    record["rs_beats_l_diff"] = report.rs_beats_l_diff
    if args.asymptotic:
        record["asymptotic"] = asymptotic_estimates(config.n).model_dump()
    emit(record)
    return EXIT_OK


def cmd_table(args) -> int:
    options = engine_options(args)
    rows = assemble_table(parse_range(args.n), certify=args.strict, options=options, store=result_store(args))
    output = OutputFormat(args.format) if args.format else OutputFormat.CSV
    emit(render_table(rows, output))
    if args.golden:
        problems = compare_golden(rows, load_golden(args.golden))
        for problem in problems:
            logger.error(f"Golden mismatch: {problem}")
        if problems:
            return EXIT_VERIFICATION_FAILED
        logger.info(f"Table matches {args.golden}")
    return EXIT_OK


def _grid(args) -> VariableGrid:
    if args.invariant and args.n:
        return strategy_for(args.invariant).grid(args.n)
    try:
        rows, cols = (int(part) for part in args.grid.lower().split("x"))
    except (AttributeError, ValueError):
        raise UsageError("give --invariant with --n, or --grid ROWSxCOLS") from None
    return VariableGrid(rows, cols, Symmetry(args.symmetry))


def _form(args, grid: VariableGrid) -> Polynomial:
    if args.form:
        return Polynomial.from_text(args.form, Ring.R, grid)
    if args.invariant and args.n:
        return build_invariant(args.invariant, args.n)
    raise UsageError("give --form or --invariant with --n")


def cmd_contract(args) -> int:
    grid = _grid(args)
    form = _form(args, grid)
    operator = Polynomial.from_text(args.operator, Ring.S, grid)
    result = contract(operator, form)
    if args.format == OutputFormat.JSON.value:
        emit({"operator": operator.to_text(), "form": form.to_text(), "result": result.to_text()})
    else:
        emit(result.to_text())
    return EXIT_OK


def cmd_waring(args) -> int:
    grid = _grid(args)
    form = _form(args, grid)
    forms = [Polynomial.from_text(text, Ring.R, grid) for text in args.linear or []]
    if args.coeff:
        try:
            coefficients = [Fraction(c) for c in args.coeff]
        except (ValueError, ZeroDivisionError):
            raise UsageError("coefficients must be rationals such as 1/4 or -3") from None
        verified = waring_verify(form, forms, coefficients)
        emit({"verified": verified})
        return EXIT_OK if verified else EXIT_VERIFICATION_FAILED
    solution = waring_solve(form, forms)
    emit({"coefficients": None if solution is None else [str(c) for c in solution]})
    return EXIT_OK if solution is not None else EXIT_VERIFICATION_FAILED
