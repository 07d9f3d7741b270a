from fractions import Fraction
from typing import Dict

from apolar.algebra.grid import Ring
from apolar.algebra.monomial import Monomial
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import GridMismatchError, RingMismatchError


def contract(h: Polynomial, form: Polynomial) -> Polynomial:
    """h o F: an operator d^k lowers a^l to a^(l-k) and kills it when k > l."""
    if h.grid != form.grid:
        raise GridMismatchError(f"operator grid {h.grid!r} differs from form grid {form.grid!r}")
    if h.ring != Ring.S or form.ring != Ring.R:
        raise RingMismatchError("contraction pairs an S-side operator with an R-side form")

    result: Dict[Monomial, Fraction] = {}
    for op, c in h.terms.items():
        for mono, e in form.terms.items():
            if op.degree <= mono.degree and op.divides(mono):
                rest = mono.quotient(op)
                total = result.get(rest, 0) + c * e
                if total:
                    result[rest] = total
                else:
                    result.pop(rest, None)
    return Polynomial(Ring.R, form.grid, result)


def annihilates(h: Polynomial, form: Polynomial) -> bool:
    return contract(h, form).is_zero()
