from enum import Enum
from fractions import Fraction
from typing import Iterable, List, Tuple

from apolar.algebra.grid import VariableGrid
from apolar.algebra.monomial import Monomial
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import ZeroDivisorError


class TermOrderKind(str, Enum):
    DIAGONAL_LEX = "diagonal-lex"


class TermOrder:
    """Degree-compatible lexicographic order induced by the diagonal variable order.

    Variables compare as d_ij < d_kl iff l > j, or l = j and k > i. Grids number
    their variables in exactly this ascending order, so comparing variable
    indices is comparing variables.
    """

    def __init__(self, kind: TermOrderKind = TermOrderKind.DIAGONAL_LEX):
        self.kind = kind

    @staticmethod
    def variable_less(cell: Tuple[int, int], other: Tuple[int, int]) -> bool:
        (i, j), (k, l) = cell, other
        return l > j or (l == j and k > i)

    def key(self, mono: Monomial):
        return mono.degree, mono.lex_key

    def compare(self, u: Monomial, v: Monomial) -> int:
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def sorted_desc(self, monomials: Iterable[Monomial]) -> List[Monomial]:
        return sorted(monomials, key=lambda m: m.desc_key)

    def leading_term(self, poly: Polynomial) -> Tuple[Monomial, Fraction]:
        if poly.is_zero():
            raise ZeroDivisorError("the zero polynomial has no leading term")
        mono = min(poly.terms, key=lambda m: m.desc_key)
        return mono, poly.terms[mono]

    def leading_monomial(self, poly: Polynomial) -> Monomial:
        return self.leading_term(poly)[0]

    def grid_is_diagonal(self, grid: VariableGrid) -> bool:
        """Variable numbering of the grid agrees with the diagonal variable order."""
        cells = [grid.cell(v) for v in grid.variables()]
        return all(self.variable_less(cells[a], cells[b]) for a in range(len(cells)) for b in range(a + 1, len(cells)))

    def __repr__(self) -> str:
        return f"TermOrder({self.kind.value})"


DIAGONAL_LEX = TermOrder()


def compare(order: TermOrder, u: Monomial, v: Monomial) -> int:
    """-1, 0 or 1 as u is smaller than, equal to or larger than v."""
    return order.compare(u, v)
