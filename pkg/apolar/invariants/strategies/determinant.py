from itertools import combinations
from typing import List, Optional

from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import UsageError
from apolar.invariants.expansion import expand_permutations, unacceptable_monomials
from apolar.invariants.strategies.base import InvariantStrategy, MinorFamily, MinorKind
from apolar.store.models import InvariantKind


class DeterminantStrategy(InvariantStrategy):
    """det(A) on a generic n x n grid; candidates are the 2x2 permanents of D plus U_D."""

    kind = InvariantKind.DETERMINANT
    minor_kind = MinorKind.DET_MINORS
    signed = True

    def grid(self, n: int) -> VariableGrid:
        return VariableGrid.generic(n)

    def build(self, n: int, ring: Ring = Ring.R) -> Polynomial:
        self.check_size(n)
        span = list(range(1, n + 1))
        return expand_permutations(self.grid(n), ring, span, span, self.signed)

    def minors(self, n: int, k: int, cols: Optional[int] = None) -> MinorFamily:
        self.check_size(n)
        width = n if cols is None else cols
        grid = VariableGrid.generic(n, width)
        if not 1 <= k <= min(n, width):
            raise UsageError(f"minor size {k} out of range for a {n}x{width} grid")
        family = MinorFamily(self.minor_kind, k, grid)
        for rows in combinations(range(1, n + 1), k):
            for columns in combinations(range(1, width + 1), k):
                family.add(rows, columns, expand_permutations(grid, Ring.R, rows, columns, self.signed))
        return family

    def candidates(self, n: int) -> List[Polynomial]:
        self.check_size(n, minimum=2)
        grid = self.grid(n)
        result: List[Polynomial] = []
        # the opposite parity: permanents annihilate det, minors annihilate perm
        for rows in combinations(range(1, n + 1), 2):
            for columns in combinations(range(1, n + 1), 2):
                result.append(expand_permutations(grid, Ring.S, rows, columns, not self.signed))
        result.extend(Polynomial.monomial(Ring.S, grid, mono) for mono in unacceptable_monomials(grid))
        return result
