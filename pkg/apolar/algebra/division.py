from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from apolar.algebra.monomial import Monomial
from apolar.algebra.order import DIAGONAL_LEX, TermOrder
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import RingMismatchError, ZeroDivisorError


class DivisionResult:
    __slots__ = ("quotients", "remainder")

    def __init__(self, quotients: List[Polynomial], remainder: Polynomial):
        self.quotients = quotients
        self.remainder = remainder

    def __iter__(self):
        return iter((self.quotients, self.remainder))


class LeadingTermIndex:
    """Finds the first divisor (by list position) whose leading monomial divides a monomial."""

    _SCAN_LIMIT = 8

    def __init__(self, divisors: Sequence[Polynomial], order: TermOrder):
        self.leads: List[Monomial] = []
        self.lead_coeffs: List[Fraction] = []
        self._first: Dict[Monomial, int] = {}
        for position, g in enumerate(divisors):
            if g.is_zero():
                raise ZeroDivisorError(f"divisor #{position} is the zero polynomial")
            mono, coeff = order.leading_term(g)
            self.leads.append(mono)
            self.lead_coeffs.append(coeff)
            self._first.setdefault(mono, position)
        self._degrees = sorted({m.degree for m in self._first})

    def find(self, mono: Monomial) -> Optional[int]:
        if len(self.leads) <= self._SCAN_LIMIT:
            for position, lead in enumerate(self.leads):
                if lead.divides(mono):
                    return position
            return None
        best = None
        for degree in self._degrees:
            if degree > mono.degree:
                break
            for sub in mono.divisors_of_degree(degree):
                position = self._first.get(sub)
                if position is not None and (best is None or position < best):
                    best = position
        return best


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX,
           index: Optional[LeadingTermIndex] = None) -> DivisionResult:
    """Multivariate division: f = sum q_i g_i + r, no term of r divisible by any LT(g_i)."""
    for g in divisors:
        if g.ring != f.ring or g.grid != f.grid:
            raise RingMismatchError("divisors must live in the ring of the dividend")
    index = index or LeadingTermIndex(divisors, order)
    quotients: List[Dict[Monomial, Fraction]] = [{} for _ in divisors]
    remainder: Dict[Monomial, Fraction] = {}
    rest = dict(f.terms)

    while rest:
        lead = min(rest, key=lambda m: m.desc_key)
        coeff = rest[lead]
        position = index.find(lead)
        if position is None:
            remainder[lead] = coeff
            del rest[lead]
            continue
        factor_mono = lead.quotient(index.leads[position])
        factor = coeff / index.lead_coeffs[position]
        q = quotients[position]
        q[factor_mono] = q.get(factor_mono, 0) + factor
        for mono, c in divisors[position].terms.items():
            target = mono * factor_mono
            value = rest.get(target, 0) - factor * c
            if value:
                rest[target] = value
            else:
                rest.pop(target, None)

    return DivisionResult(
        [Polynomial(f.ring, f.grid, q) for q in quotients],
        Polynomial(f.ring, f.grid, remainder),
    )
