from itertools import combinations
from typing import List, Optional, Tuple

from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import UsageError
from apolar.invariants.expansion import expand_matchings, unacceptable_monomials
from apolar.invariants.strategies.base import InvariantStrategy, MinorFamily, MinorKind
from apolar.store.models import InvariantKind


class PfaffianStrategy(InvariantStrategy):
    """Pf of a skew-symmetric 2n x 2n grid; ``n`` is always the half size.

    Candidates form the space W: squares, products of two variables sharing an
    index, and two binomials per 4-subset i1<i2<i3<i4. The third binomial of a
    4-subset is a combination of the other two and is not emitted.
    """

    kind = InvariantKind.PFAFFIAN
    minor_kind = MinorKind.PFAFFIAN_MINORS
    signed = True
    # coefficients of y_{i1i3}y_{i2i4} and y_{i1i4}y_{i2i3} next to y_{i1i2}y_{i3i4}
    binomial_signs: Tuple[int, int] = (1, -1)

    def grid(self, n: int) -> VariableGrid:
        return VariableGrid.skew(2 * n)

    def build(self, n: int, ring: Ring = Ring.R) -> Polynomial:
        self.check_size(n)
        return expand_matchings(self.grid(n), ring, list(range(1, 2 * n + 1)), self.signed)

    def minors(self, n: int, k: int, cols: Optional[int] = None) -> MinorFamily:
        self.check_size(n)
        if cols is not None and cols != 2 * n:
            raise UsageError(f"{self.minor_kind.value} live on square grids only")
        if k % 2 or not 2 <= k <= 2 * n:
            raise UsageError(f"minor size {k} must be even and between 2 and {2 * n}")
        grid = self.grid(n)
        family = MinorFamily(self.minor_kind, k, grid)
        for subset in combinations(range(1, 2 * n + 1), k):
            family.add(subset, subset, expand_matchings(grid, Ring.R, subset, self.signed))
        return family

    def candidates(self, n: int) -> List[Polynomial]:
        self.check_size(n, minimum=2)
        grid = self.grid(n)
        second, third = self.binomial_signs
        result: List[Polynomial] = []

        def y(i: int, j: int) -> Polynomial:
            return Polynomial.cell(Ring.S, grid, i, j)

        for i1, i2, i3, i4 in combinations(range(1, 2 * n + 1), 4):
            leading = y(i1, i2) * y(i3, i4)
            result.append(leading + (y(i1, i3) * y(i2, i4)).scale(second))
            result.append(leading + (y(i1, i4) * y(i2, i3)).scale(third))
        result.extend(Polynomial.monomial(Ring.S, grid, mono) for mono in unacceptable_monomials(grid))
        return result
