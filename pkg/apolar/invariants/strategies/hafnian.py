from typing import Tuple

from apolar.algebra.grid import VariableGrid
from apolar.invariants.strategies.base import MinorKind
from apolar.invariants.strategies.pfaffian import PfaffianStrategy
from apolar.store.models import InvariantKind


class HafnianStrategy(PfaffianStrategy):
    """Hf of a zero-diagonal symmetric grid: every matching counts with sign +1."""

    kind = InvariantKind.HAFNIAN
    minor_kind = MinorKind.HAFNIAN_MINORS
    signed = False
    binomial_signs: Tuple[int, int] = (-1, -1)

    def grid(self, n: int) -> VariableGrid:
        return VariableGrid.zero_diagonal_symmetric(2 * n)
