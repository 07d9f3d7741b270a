from fractions import Fraction
from typing import List, Optional, Sequence

from apolar.algebra.monomial import Monomial
from apolar.algebra.polynomial import Polynomial, Scalar, linear_combination
from apolar.algebra.linalg import solve_fraction_free
from apolar.core.errors import DegreeMismatchError, UsageError
from apolar.core.logger import logger


def _powers(form: Polynomial, linear_forms: Sequence[Polynomial]) -> List[Polynomial]:
    if not form.is_homogeneous() or form.is_zero():
        raise DegreeMismatchError("a Waring decomposition needs a nonzero homogeneous form")
    if not linear_forms:
        raise UsageError("no linear forms given")
    for index, l in enumerate(linear_forms):
        if l.grid != form.grid or l.ring != form.ring:
            raise UsageError(f"linear form #{index} lives outside the ring of F")
        if l.is_zero() or not l.is_homogeneous() or l.degree != 1:
            raise DegreeMismatchError(f"form #{index} is not linear")
    return [l ** form.degree for l in linear_forms]


def waring_verify(form: Polynomial, linear_forms: Sequence[Polynomial], coefficients: Sequence[Scalar]) -> bool:
    """F == sum c_i l_i^d, exactly."""
    if len(coefficients) != len(linear_forms):
        raise UsageError(f"{len(linear_forms)} forms but {len(coefficients)} coefficients")
    powers = _powers(form, linear_forms)
    return linear_combination(powers, [Fraction(c) for c in coefficients]) == form


def waring_solve(form: Polynomial, linear_forms: Sequence[Polynomial]) -> Optional[List[Fraction]]:
    """Coefficients c_i with F = sum c_i l_i^d, or None when F is outside span{l_i^d}."""
    powers = _powers(form, linear_forms)
    monomials: List[Monomial] = sorted(
        {m for p in powers for m in p.terms} | set(form.terms), key=lambda m: m.desc_key
    )
    matrix = [[p.terms.get(m, Fraction(0)) for p in powers] for m in monomials]
    rhs = [form.terms.get(m, Fraction(0)) for m in monomials]
    solution = solve_fraction_free(matrix, rhs)
    if solution is None:
        logger.info(f"F is not a combination of the {len(linear_forms)} given powers")
    return solution
