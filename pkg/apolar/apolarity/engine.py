"""Catalecticant images, graded annihilators, Hilbert functions and degree-2 generation checks.

Every rank is exact: rational arithmetic by default, or F_p when the options carry a
prime. Coordinates in degree k are the degree-k monomials ordered by the diagonal
lexicographic order, so RREF bases are reproducible across runs and thread counts.
"""

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

from apolar.algebra.contraction import contract
from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.linalg import SparseEchelon, bareiss_rank
from apolar.algebra.monomial import Monomial, count_monomials, monomials_of_degree
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import (
    CandidateError,
    CeilingExceededError,
    DegreeMismatchError,
    GridMismatchError,
    InhomogeneousFormError,
    RingMismatchError,
    UsageError,
)
from apolar.core.logger import logger
from apolar.core.options import EngineOptions
from apolar.core.progress import progress
from apolar.groebner.monomial_ideal import MonomialIdeal
from apolar.store.models import (
    DegreeCheck,
    GeneratorReport,
    HilbertFunction,
    InvariantKind,
    Mode,
    Route,
    VerificationReport,
)
from apolar.tasks.pool import chunked, parallel_map

Row = Dict[Hashable, object]


def _desc(mono: Monomial):
    return mono.desc_key


class GradedSubspace:
    """A subspace of the degree-k piece of R or S, stored as an RREF basis."""

    def __init__(self, ring: Ring, grid: VariableGrid, degree: int, basis: List[Polynomial],
                 prime: Optional[int] = None):
        self.ring = ring
        self.grid = grid
        self.degree = degree
        self.basis = basis
        self.prime = prime
        self._echelon: Optional[SparseEchelon] = None

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def ambient_dimension(self) -> int:
        return count_monomials(self.grid.variable_count, self.degree)

    def contains(self, poly: Polynomial) -> bool:
        if poly.ring != self.ring or poly.grid != self.grid:
            raise RingMismatchError("polynomial does not live in the ambient space of this subspace")
        if poly.is_zero():
            return True
        if not poly.is_homogeneous() or poly.degree != self.degree:
            return False
        if self._echelon is None:
            self._echelon = SparseEchelon(key=_desc, prime=self.prime)
            for element in self.basis:
                self._echelon.insert(element.terms)
        return self._echelon.contains(poly.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return (
            (self.ring, self.grid, self.degree, self.prime) == (other.ring, other.grid, other.degree, other.prime)
            and [p.terms for p in self.basis] == [q.terms for q in other.basis]
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"GradedSubspace({self.ring.value}_{self.degree}, rank={self.rank}, ambient={self.ambient_dimension})"


def resolve_options(options: Optional[EngineOptions]) -> EngineOptions:
    return options or EngineOptions.from_settings()


def mode_of(options: EngineOptions) -> Mode:
    return Mode.MOD_P if options.prime else Mode.RATIONAL


def require_form(form: Polynomial, options: EngineOptions):
    if form.ring != Ring.R:
        raise RingMismatchError("apolarity is computed for R-side forms")
    if form.is_zero():
        raise InhomogeneousFormError("the zero polynomial is not a form")
    if not form.is_homogeneous():
        raise InhomogeneousFormError("form must be homogeneous")
    options.check_prime(form.degree)


def _ambient_guard(grid: VariableGrid, k: int, options: EngineOptions, what: str) -> int:
    needed = count_monomials(grid.variable_count, k)
    if needed > options.max_ambient:
        raise CeilingExceededError(f"degree-{k} monomial basis for {what}", needed, options.max_ambient)
    return needed


def _from_rref(echelon: SparseEchelon, ring: Ring, grid: VariableGrid,
               column=lambda col: col) -> List[Polynomial]:
    return [
        Polynomial(ring, grid, {column(col): value for col, value in row.items()})
        for _, row in echelon.rref()
    ]


def catalecticant_rows(forms: Sequence[Polynomial], k: int,
                       options: Optional[EngineOptions] = None) -> Dict[Monomial, Row]:
    """m o F for every degree-k monomial m dividing some term; columns are (form index, monomial).

    Monomials dividing no term contract every form to zero and get no row.
    """
    options = resolve_options(options)
    entries: List[Tuple[int, Monomial, Fraction]] = [
        (index, mono, coeff) for index, form in enumerate(forms) for mono, coeff in form.sorted_terms()
    ]

    def build(chunk) -> Dict[Monomial, Row]:
        rows: Dict[Monomial, Row] = {}
        for index, mono, coeff in chunk:
            for op in mono.divisors_of_degree(k):
                row = rows.setdefault(op, {})
                col = (index, mono.quotient(op))
                row[col] = row.get(col, 0) + coeff
        return rows

    merged: Dict[Monomial, Row] = {}
    for part in parallel_map(build, chunked(entries, options.threads), options.threads):
        for op, row in part.items():
            target = merged.setdefault(op, {})
            for col, value in row.items():
                target[col] = target.get(col, 0) + value
    if len(merged) > options.max_ambient:
        raise CeilingExceededError(f"catalecticant rows in degree {k}", len(merged), options.max_ambient)
    return {op: merged[op] for op in sorted(merged, key=_desc)}


def _column_key(col):
    return col[0], col[1].desc_key


def _check_degree(form: Polynomial, k: int):
    if not 0 <= k <= form.degree:
        raise DegreeMismatchError(f"k = {k} outside 0..{form.degree}")


def image_space(form: Polynomial, k: int, options: Optional[EngineOptions] = None) -> GradedSubspace:
    """S_k o F inside R_{deg F - k}, as an RREF basis."""
    options = resolve_options(options)
    require_form(form, options)
    _check_degree(form, k)
    rows = catalecticant_rows([form], k, options)
    columns = {col for row in rows.values() for col in row}
    limit = min(len(rows), len(columns))
    echelon = SparseEchelon(key=_column_key, prime=options.prime, max_pivots=options.max_pivots)
    for row in rows.values():
        echelon.insert(row)
        if echelon.rank == limit:
            break
    progress.notify("image", degree=k, rank=echelon.rank, rows=len(rows))
    basis = _from_rref(echelon, Ring.R, form.grid, column=lambda col: col[1])
    return GradedSubspace(Ring.R, form.grid, form.degree - k, basis, options.prime)


def catalecticant_rank(form: Polynomial, k: int, options: Optional[EngineOptions] = None) -> int:
    """Rank of S_k -> R_{deg F - k}; small rational blocks go through fraction-free elimination."""
    options = resolve_options(options)
    require_form(form, options)
    _check_degree(form, k)
    rows = catalecticant_rows([form], k, options)
    columns = sorted({col for row in rows.values() for col in row}, key=_column_key)
    if options.prime is None and len(rows) * len(columns) <= options.dense_threshold:
        position = {col: pos for pos, col in enumerate(columns)}
        dense = []
        for row in rows.values():
            line = [0] * len(columns)
            for col, value in row.items():
                line[position[col]] = value
            dense.append(line)
        return bareiss_rank(dense)
    limit = min(len(rows), len(columns))
    echelon = SparseEchelon(key=_column_key, prime=options.prime, max_pivots=options.max_pivots)
    for row in rows.values():
        echelon.insert(row)
        if echelon.rank == limit:
            break
    return echelon.rank


def _kernel(forms: Sequence[Polynomial], k: int, options: EngineOptions) -> GradedSubspace:
    grid = forms[0].grid
    _ambient_guard(grid, k, options, "an annihilator")
    rows = catalecticant_rows(forms, k, options)

    # [image | tag]: image columns sort before tag columns, so a row whose pivot is a
    # tag has a zero image part and its tag part is a kernel vector.
    def key(col):
        return (col[0], col[1], col[2].desc_key)

    tagged = SparseEchelon(key=key, prime=options.prime, max_pivots=options.max_pivots)
    for op, row in rows.items():
        vector = {(0, index, mono): value for (index, mono), value in row.items()}
        vector[(1, 0, op)] = 1
        tagged.insert(vector)

    kernel = SparseEchelon(key=_desc, prime=options.prime, max_pivots=options.max_pivots)
    for pivot, row in tagged.pivots.items():
        if pivot[0] == 1:
            kernel.insert({col[2]: value for col, value in row.items()})
    for mono in monomials_of_degree(grid.variable_count, k):
        if mono not in rows:
            kernel.insert({mono: 1})
    return GradedSubspace(Ring.S, grid, k, _from_rref(kernel, Ring.S, grid), options.prime)


def graded_annihilator(form: Polynomial, k: int, options: Optional[EngineOptions] = None) -> GradedSubspace:
    """Ann(F)_k = {h in S_k : h o F = 0}; above deg F it is all of S_k."""
    options = resolve_options(options)
    require_form(form, options)
    if k < 0:
        raise DegreeMismatchError(f"negative degree {k}")
    result = _kernel([form], k, options)
    progress.notify("annihilator", degree=k, dimension=result.rank)
    return result


def family_annihilator(forms: Sequence[Polynomial], k: int,
                       options: Optional[EngineOptions] = None) -> GradedSubspace:
    """Degree-k operators killing every form of the family, i.e. the annihilator of their span."""
    options = resolve_options(options)
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise UsageError("family annihilator of an empty family")
    for form in forms:
        require_form(form, options)
        if form.grid != forms[0].grid:
            raise GridMismatchError("family members live on different grids")
        if form.degree != forms[0].degree:
            raise DegreeMismatchError("family members must share one degree")
    if k < 0:
        raise DegreeMismatchError(f"negative degree {k}")
    return _kernel(forms, k, options)


def hilbert_function(form: Polynomial, options: Optional[EngineOptions] = None,
                     invariant: Optional[InvariantKind] = None, n: Optional[int] = None) -> HilbertFunction:
    """h_k = rank of the degree-k catalecticant, k = 0..deg F."""
    options = resolve_options(options)
    require_form(form, options)
    values = []
    for k in range(form.degree + 1):
        values.append(catalecticant_rank(form, k, options))
        progress.notify("hilbert", degree=k, value=values[-1])
    result = HilbertFunction(invariant=invariant, n=n, values=values, mode=mode_of(options))
    logger.info(f"Hilbert function {values}, length {result.length}")
    return result


def _multiply_by_variables(basis: Sequence[Row], grid: VariableGrid, target: int,
                           options: EngineOptions) -> SparseEchelon:
    """Echelon of span{x_v * b}; stops as soon as the rank reaches ``target``."""
    echelon = SparseEchelon(key=_desc, prime=options.prime, max_pivots=options.max_pivots)
    if target <= 0:
        return echelon
    for var in grid.variables():
        for row in basis:
            echelon.insert({mono.times_variable(var): value for mono, value in row.items()})
            if echelon.rank >= target:
                return echelon
    return echelon


def _monomials_fill_degree(grid: VariableGrid, monomials: Sequence[Monomial], degree: int,
                            options: EngineOptions) -> bool:
    if not monomials:
        return False
    ideal = MonomialIdeal(monomials, grid.variable_count)
    return ideal.standard_monomial_count(degree, max_nodes=options.max_ambient) == 0


def family_generator_degrees(forms: Sequence[Polynomial], k_max: Optional[int] = None,
                             options: Optional[EngineOptions] = None) -> GeneratorReport:
    """mu_k = dim Ann_k - dim S_1 * Ann_{k-1} for the annihilator of a family of forms."""
    options = resolve_options(options)
    forms = [f for f in forms if not f.is_zero()]
    if not forms:
        raise UsageError("generator degrees of an empty family")
    top = max(f.degree for f in forms)
    k_max = top + 1 if k_max is None else k_max
    grid = forms[0].grid
    mu: Dict[int, int] = {}
    previous: Optional[GradedSubspace] = None
    low_monomials: List[Monomial] = []
    for k in range(1, k_max + 1):
        if k > top and k >= 3 and _monomials_fill_degree(grid, low_monomials, k, options):
            # Ann_k = S_k is already S_1 * Ann_{k-1}, and so is every higher degree
            for rest in range(k, k_max + 1):
                mu[rest] = 0
                progress.notify("generators", degree=rest, annihilator=count_monomials(grid.variable_count, rest),
                                minimal=0)
            break
        current = family_annihilator(forms, k, options)
        if k <= 2:
            low_monomials += [next(iter(p.terms)) for p in current.basis if len(p.terms) == 1]
        generated = 0
        if previous is not None and previous.rank:
            generated = _multiply_by_variables(
                [p.terms for p in previous.basis], grid, current.rank, options
            ).rank
        mu[k] = current.rank - generated
        progress.notify("generators", degree=k, annihilator=current.rank, minimal=mu[k])
        previous = current
    return GeneratorReport(mu=mu, k_max=k_max, route=Route.DIRECT, mode=mode_of(options))


def minimal_generator_degrees(form: Polynomial, k_max: Optional[int] = None,
                              options: Optional[EngineOptions] = None) -> GeneratorReport:
    options = resolve_options(options)
    require_form(form, options)
    return family_generator_degrees([form], k_max, options)


def check_candidates(form: Polynomial, candidates: Sequence[Polynomial]):
    """Every candidate must be a degree-2 S-side operator killing ``form``."""
    for index, g in enumerate(candidates):
        if g.grid != form.grid:
            raise GridMismatchError(f"candidate #{index} lives on {g.grid!r}")
        if g.ring != Ring.S:
            raise RingMismatchError(f"candidate #{index} is not an S-side operator")
        if g.is_zero() or not g.is_homogeneous() or g.degree != 2:
            raise DegreeMismatchError(f"candidate #{index} is not a nonzero quadric")
        residue = contract(g, form)
        if not residue.is_zero():
            raise CandidateError(index, residue.to_text())


def monomials_fill(grid: VariableGrid, candidates: Sequence[Polynomial], degree: int,
                   options: Optional[EngineOptions] = None) -> bool:
    """True when the monomial candidates alone generate all of S_degree."""
    options = resolve_options(options)
    monomials = [next(iter(g.terms)) for g in candidates if len(g.terms) == 1]
    return _monomials_fill_degree(grid, monomials, degree, options)


def verify_degree2_generation_direct(form: Polynomial, candidates: Sequence[Polynomial],
                                     k_max: Optional[int] = None,
                                     options: Optional[EngineOptions] = None,
                                     invariant: Optional[InvariantKind] = None,
                                     n: Optional[int] = None,
                                     fill_check: bool = True) -> VerificationReport:
    """Compare dim (candidates)_k with dim S_k - h_k for k = 1..k_max.

    (candidates)_k is built as S_1 * (candidates)_{k-1} from degree 3 on. Once the
    monomial candidates fill S_{deg F + 1}, every higher degree is all of S_k.
    """
    options = resolve_options(options)
    require_form(form, options)
    check_candidates(form, candidates)
    k_max = form.degree + 1 if k_max is None else k_max
    grid = form.grid
    variables = grid.variable_count

    fill = monomials_fill(grid, candidates, form.degree + 1, options) if fill_check else None
    checks: List[DegreeCheck] = []
    current: Optional[SparseEchelon] = None
    full_from: Optional[int] = None
    for k in range(1, k_max + 1):
        dimension = count_monomials(variables, k)
        h = catalecticant_rank(form, k, options) if k <= form.degree else 0
        expected = dimension - h
        if k == 1:
            actual = 0
        elif full_from is not None or (fill and k > form.degree):
            actual = dimension
        elif k == 2:
            _ambient_guard(grid, k, options, "the candidate span")
            current = SparseEchelon(key=_desc, prime=options.prime, max_pivots=options.max_pivots)
            for g in candidates:
                current.insert(g.terms)
            actual = current.rank
        else:
            _ambient_guard(grid, k, options, "the candidate ideal")
            basis = [row for _, row in current.rref()]
            current = _multiply_by_variables(basis, grid, expected, options)
            actual = current.rank
        if actual == dimension and full_from is None:
            full_from = k
        checks.append(DegreeCheck(degree=k, expected=expected, actual=actual))
        progress.notify("verify", degree=k, expected=expected, actual=actual)
        if actual != expected:
            logger.warning(f"Degree {k}: candidate ideal has dimension {actual}, annihilator {expected}")

    return VerificationReport(
        invariant=invariant, n=n, route=Route.DIRECT, checks=checks, fill_check=fill, mode=mode_of(options)
    )
