"""Closed-form rank bounds and the dehomogenized Diff computation."""

from math import comb, e, factorial, pi, prod, sqrt
from typing import Optional, Sequence, Tuple

from apolar.algebra.contraction import contract
from apolar.algebra.grid import Ring
from apolar.algebra.linalg import SparseEchelon
from apolar.algebra.polynomial import Polynomial
from apolar.apolarity.engine import catalecticant_rank, require_form, resolve_options
from apolar.core.errors import MissingSingularLocusError, UncertifiedDegreeError, UsageError
from apolar.core.options import EngineOptions
from apolar.store.models import AsymptoticEstimates, DiffDimension, GeneratorReport


def rs_lower_bound(length: int, d: int, certificate: Optional[GeneratorReport] = None,
                   strict: bool = False) -> int:
    """ceil(length / d), the cactus-rank lower bound when Ann(F) is generated in degree d."""
    if d < 1:
        raise UsageError(f"generating degree must be positive, got {d}")
    if certificate is not None and certificate.max_degree != d:
        raise UncertifiedDegreeError(
            f"asserted generating degree {d}, certificate says {certificate.max_degree}"
        )
    if certificate is None and strict:
        raise UncertifiedDegreeError(f"generating degree {d} has no certificate")
    return -(-length // d)


def lt_lower_bound_det(n: int) -> int:
    """C(n, n//2)^2 + n^2 - (n//2 + 1)^2."""
    if n < 2:
        raise UsageError(f"the determinant rank bound needs n >= 2, got {n}")
    half = n // 2
    return comb(n, half) ** 2 + n * n - (half + 1) ** 2


def det_singular_locus_dimension(n: int) -> int:
    if n < 2:
        raise UsageError(f"n >= 2 required, got {n}")
    return n * n - (n // 2 + 1) ** 2 - 1


def general_lt_lower_bound(form: Polynomial, s: int, dim_sigma: Optional[int] = None,
                           options: Optional[EngineOptions] = None) -> int:
    """rank of the degree-s catalecticant + dim Sigma_s + 1; dim Sigma_s comes from the caller (-1 when empty)."""
    if dim_sigma is None:
        raise MissingSingularLocusError("the singular-locus dimension must be supplied")
    options = resolve_options(options)
    require_form(form, options)
    if not 1 <= s <= form.degree:
        raise UsageError(f"s = {s} outside 1..{form.degree}")
    return catalecticant_rank(form, s, options) + dim_sigma + 1


def monomial_ranks(exponents: Sequence[int]) -> Tuple[int, int]:
    """(rank, cactus rank) of x_1^b_1 ... x_n^b_n with b_1 <= ... <= b_n."""
    b = list(exponents)
    if not b or any(x < 1 for x in b):
        raise UsageError("exponents must be positive")
    if b != sorted(b):
        raise UsageError("exponents must be listed in ascending order")
    return prod(x + 1 for x in b[1:]), prod(x + 1 for x in b[:-1])


def det_rank_upper_bound(n: int) -> int:
    """n! square-free terms of degree n, each of rank 2^(n-1)."""
    if n < 1:
        raise UsageError(f"n >= 1 required, got {n}")
    return factorial(n) * monomial_ranks([1] * n)[0]


def matching_rank_upper_bound(n: int) -> int:
    """(2n-1)!! square-free terms of degree n, each of rank 2^(n-1)."""
    if n < 1:
        raise UsageError(f"n >= 1 required, got {n}")
    return factorial(2 * n) // (2 ** n * factorial(n)) * monomial_ranks([1] * n)[0]


def pfaffian_cactus_bounds(n: int) -> Tuple[int, int]:
    """(2^(2n-2), 2^(2n-1)): half the apolar length, and the length itself."""
    if n < 1:
        raise UsageError(f"n >= 1 required, got {n}")
    return 2 ** (2 * n - 2), 2 ** (2 * n - 1)


def asymptotic_estimates(n: int) -> AsymptoticEstimates:
    if n < 1:
        raise UsageError(f"n >= 1 required, got {n}")
    power = 4 ** n
    return AsymptoticEstimates(
        n=n,
        rs_lower_exact=-(-comb(2 * n, n) // 2),
        rs_lower_asymptotic=power / (2 * sqrt(n * pi)),
        lt_lower_asymptotic=2 * power / (n * pi),
        l_diff_exact=comb(n, n // 2) ** 2,
        rank_upper_asymptotic=sqrt(2 * pi * n) * (n / e) ** n * 2 ** (n - 1),
        cactus_upper_asymptotic=power / sqrt(n * pi),
    )


def dehomogenized_diff_dimension(form: Polynomial, cell: Tuple[int, int] = (1, 1),
                                 options: Optional[EngineOptions] = None) -> DiffDimension:
    """dim Diff(f) for f = F with the variable in ``cell`` set to 1.

    D_j is spanned by all m o f with deg m >= j; graded[j] = dim D_j - dim D_{j+1}.
    """
    options = resolve_options(options)
    require_form(form, options)
    entry = form.grid.canonical(*cell)
    if entry is None:
        raise UsageError(f"cell {cell} holds no variable")
    f = form.substitute_one(entry[1])
    echelon = SparseEchelon(key=lambda m: m.desc_key, prime=options.prime, max_pivots=options.max_pivots)
    dimensions = {}
    for j in range(f.degree, -1, -1):
        operators = {op for mono in f.terms for op in mono.divisors_of_degree(j)}
        for op in sorted(operators, key=lambda m: m.desc_key):
            echelon.insert(contract(Polynomial.monomial(Ring.S, f.grid, op), f).terms)
        dimensions[j] = echelon.rank
    graded = [dimensions[j] - dimensions.get(j + 1, 0) for j in range(f.degree + 1)]
    return DiffDimension(total=dimensions[0], graded=graded)
