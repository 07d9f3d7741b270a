import csv
import io
import json
from typing import Iterable, List, Optional, Union

from apolar.apolarity.certify import certify_generating_degree
from apolar.apolarity.engine import hilbert_function, mode_of, resolve_options
from apolar.bounds.ranks import (
    det_rank_upper_bound,
    lt_lower_bound_det,
    matching_rank_upper_bound,
    pfaffian_cactus_bounds,
    rs_lower_bound,
)
from apolar.core.errors import UsageError
from apolar.core.logger import logger
from apolar.core.options import EngineOptions
from apolar.invariants.builder import build_invariant
from apolar.store.models import BoundsReport, GeneratorReport, HilbertFunction, InvariantKind, OutputFormat, Route, TableRow
from apolar.store.results import ResultStore

TABLE_FIELDS = ["n", "rs_lower", "lt_lower", "l_diff"]


def cached_hilbert(kind: InvariantKind, n: int, options: EngineOptions,
                   store: Optional[ResultStore] = None) -> HilbertFunction:
    """Hilbert function of an invariant, reusing a stored run with the same mode when there is one."""
    key = ResultStore.key(kind.value, n, mode_of(options).value)
    if store is not None:
        stored = store.load_model("hilbert", key, HilbertFunction)
        if stored is not None:
            logger.info(f"Reusing stored Hilbert function {key}")
            return stored
    result = hilbert_function(build_invariant(kind, n), options, invariant=kind, n=n)
    if store is not None:
        store.save_model("hilbert", key, result)
    return result


def bounds_report(kind: Union[InvariantKind, str], n: int, hilbert: Optional[HilbertFunction] = None,
                  certificate: Optional[GeneratorReport] = None, strict: bool = False,
                  options: Optional[EngineOptions] = None, store: Optional[ResultStore] = None) -> BoundsReport:
    """Every bound for one invariant. Without a certificate the generating degree 2 is asserted, and refused when strict."""
    options = resolve_options(options)
    kind = InvariantKind(kind)
    hilbert = hilbert or cached_hilbert(kind, n, options, store)
    d = certificate.max_degree if certificate is not None else 2
    notes: List[str] = []
    if certificate is None:
        notes.append("generating degree 2 asserted, not certified")
    rs_lower = rs_lower_bound(hilbert.length, d, certificate, strict)

    if kind in (InvariantKind.DETERMINANT, InvariantKind.PERMANENT):
        rank_upper = det_rank_upper_bound(n)
    else:
        rank_upper = matching_rank_upper_bound(n)
    lt_lower = lt_lower_bound_det(n) if kind == InvariantKind.DETERMINANT and n >= 2 else None
    cactus_upper = hilbert.length
    if kind == InvariantKind.PFAFFIAN:
        lower, cactus_upper = pfaffian_cactus_bounds(n)
        notes.append(
            f"cactus upper bound taken as the apolar length 2^(2n-1) = {cactus_upper}; "
            f"the printed 2^(n-1) = {2 ** (n - 1)} would fall below l_diff"
        )
        if lower != rs_lower:
            notes.append(f"closed-form lower bound {lower} differs from the computed {rs_lower}")

    report = BoundsReport(
        invariant=kind,
        n=n,
        generating_degree=d,
        length=hilbert.length,
        rs_lower=rs_lower,
        lt_lower=lt_lower,
        l_diff=hilbert.l_diff,
        cactus_upper=cactus_upper,
        rank_upper=rank_upper,
        certified=certificate is not None,
        notes=notes,
    )
    relation = "exceeds" if report.rs_beats_l_diff else "does not exceed"
    logger.info(f"{kind.value} n={n}: rs_lower {rs_lower} {relation} l_diff {report.l_diff}")
    return report


def table_row(n: int, certify: bool = False, options: Optional[EngineOptions] = None,
              store: Optional[ResultStore] = None) -> TableRow:
    """One column of the determinant table; ``certify`` proves degree-2 generation through the Groebner route first."""
    options = resolve_options(options)
    certificate = certify_generating_degree(InvariantKind.DETERMINANT, n, Route.GROEBNER, options) if certify else None
    report = bounds_report(InvariantKind.DETERMINANT, n, certificate=certificate, strict=certify,
                           options=options, store=store)
    return TableRow(n=n, rs_lower=report.rs_lower, lt_lower=report.lt_lower, l_diff=report.l_diff)


def assemble_table(n_values: Iterable[int], certify: bool = False, options: Optional[EngineOptions] = None,
                   store: Optional[ResultStore] = None) -> List[TableRow]:
    rows = []
    for n in n_values:
        if n < 2:
            raise UsageError(f"table rows start at n = 2, got {n}")
        rows.append(table_row(n, certify, options, store))
    return rows


def parse_range(text: str) -> List[int]:
    """``2..6`` or ``2,3,5`` or ``4``."""
    try:
        if ".." in text:
            low, high = text.split("..", 1)
            return list(range(int(low), int(high) + 1))
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise UsageError(f"cannot read the range {text!r}") from None


def render_table(rows: List[TableRow], output: OutputFormat = OutputFormat.CSV) -> str:
    if output == OutputFormat.JSON:
        return json.dumps([row.model_dump() for row in rows], indent=2)
    if output == OutputFormat.TABLE:
        lines = ["| " + " | ".join(TABLE_FIELDS) + " |", "|" + "---|" * len(TABLE_FIELDS)]
        for row in rows:
            lines.append("| " + " | ".join(str(getattr(row, name)) for name in TABLE_FIELDS) + " |")
        return "\n".join(lines)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=TABLE_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.model_dump())
    return buffer.getvalue().rstrip("\n")


def load_golden(path: str) -> List[TableRow]:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return [TableRow(**{name: int(value) for name, value in record.items()}) for record in csv.DictReader(f)]
    except OSError as e:
        raise UsageError(f"cannot read golden file {path}: {e}") from None


def compare_golden(rows: List[TableRow], golden: List[TableRow]) -> List[str]:
    """Human-readable mismatches; empty when the table reproduces the golden file exactly."""
    expected = {row.n: row for row in golden}
    problems = []
    for row in rows:
        reference = expected.get(row.n)
        if reference is None:
            problems.append(f"n={row.n}: no golden row")
        elif reference != row:
            problems.append(f"n={row.n}: got {row.model_dump()}, expected {reference.model_dump()}")
    return problems
