"""A known minimal reduced Groebner basis of the ideal of 2x2 permanents of a generic grid.

Items, for cells d_ij (row i, column j):
  1. d_ij d_kl + d_kj d_il, i < k, j < l
  2. d_{i1 j1} d_{i1 j2} d_{i2 j3}, i1 > i2, j1 < j2 < j3
  3. d_{i1 j1} d_{i2 j2} d_{i2 j3}, i1 > i2, j1 < j2 < j3
  4. d_{i1 j1} d_{i2 j1} d_{i3 j2}, i1 < i2 < i3, j1 > j2
  5. d_{i1 j1} d_{i2 j2} d_{i3 j2}, i1 < i2 < i3, j1 > j2
  6. d_{i1 j1}^e1 d_{i2 j2}^e2 d_{i3 j3}^e3, i1 < i2 < i3, j1 > j2 > j3, e1 e2 e3 = 2

Items 2 to 6 are monomials divisible by an unacceptable quadric.
"""

from itertools import combinations
from typing import Dict, List, Optional

from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.monomial import Monomial
from apolar.algebra.polynomial import Polynomial
from apolar.groebner.monomial_ideal import MonomialIdeal
from apolar.invariants.expansion import unacceptable_monomials


def _monomial(grid: VariableGrid, cells) -> Polynomial:
    return Polynomial.monomial(Ring.S, grid, Monomial.from_indices(grid.canonical(i, j)[1] for i, j in cells))


def permanental_basis_items(rows: int, cols: Optional[int] = None) -> Dict[int, List[Polynomial]]:
    cols = rows if cols is None else cols
    grid = VariableGrid.generic(rows, cols)
    row_range = range(1, rows + 1)
    col_range = range(1, cols + 1)
    items: Dict[int, List[Polynomial]] = {item: [] for item in range(1, 7)}

    for i, k in combinations(row_range, 2):
        for j, l in combinations(col_range, 2):
            items[1].append(_monomial(grid, [(i, j), (k, l)]) + _monomial(grid, [(k, j), (i, l)]))

    for upper, lower in combinations(row_range, 2):
        for j1, j2, j3 in combinations(col_range, 3):
            items[2].append(_monomial(grid, [(lower, j1), (lower, j2), (upper, j3)]))
            items[3].append(_monomial(grid, [(lower, j1), (upper, j2), (upper, j3)]))

    for i1, i2, i3 in combinations(row_range, 3):
        for j2, j1 in combinations(col_range, 2):
            items[4].append(_monomial(grid, [(i1, j1), (i2, j1), (i3, j2)]))
            items[5].append(_monomial(grid, [(i1, j1), (i2, j2), (i3, j2)]))
        for j3, j2, j1 in combinations(col_range, 3):
            cells = [(i1, j1), (i2, j2), (i3, j3)]
            for doubled in range(3):
                items[6].append(_monomial(grid, cells + [cells[doubled]]))
    return items


def permanental_basis(rows: int, cols: Optional[int] = None) -> List[Polynomial]:
    items = permanental_basis_items(rows, cols)
    return [poly for item in sorted(items) for poly in items[item]]


def items_in_unacceptable_ideal(rows: int, cols: Optional[int] = None) -> bool:
    """Every monomial item (2 to 6) is a multiple of a square or of two entries sharing a line."""
    cols = rows if cols is None else cols
    grid = VariableGrid.generic(rows, cols)
    ideal = MonomialIdeal(unacceptable_monomials(grid), grid.variable_count)
    items = permanental_basis_items(rows, cols)
    return all(
        ideal.contains(next(iter(poly.terms)))
        for item in range(2, 7)
        for poly in items[item]
    )
