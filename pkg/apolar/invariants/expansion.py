from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterator, List, Sequence, Tuple

from apolar.algebra.grid import Ring, Symmetry, VariableGrid
from apolar.algebra.monomial import Monomial
from apolar.algebra.polynomial import Polynomial


def permutation_sign(sequence: Sequence[int]) -> int:
    """Parity of the permutation that sorts ``sequence``."""
    seen = [False] * len(sequence)
    rank = {value: pos for pos, value in enumerate(sorted(sequence))}
    sign = 1
    for start in range(len(sequence)):
        if seen[start]:
            continue
        length = 0
        pos = start
        while not seen[pos]:
            seen[pos] = True
            pos = rank[sequence[pos]]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _product(grid: VariableGrid, cells: Sequence[Tuple[int, int]]):
    """Monomial and sign of a product of grid cells, or None if a cell is a structural zero."""
    sign = 1
    indices = []
    for i, j in cells:
        entry = grid.canonical(i, j)
        if entry is None:
            return None
        sign *= entry[0]
        indices.append(entry[1])
    return Monomial.from_indices(indices), sign


def expand_permutations(grid: VariableGrid, ring: Ring, rows: Sequence[int], cols: Sequence[int],
                        signed: bool) -> Polynomial:
    """Determinant (signed) or permanent of the submatrix on the given rows and columns."""
    terms: Dict[Monomial, Fraction] = {}
    for perm in permutations(range(len(cols))):
        found = _product(grid, [(rows[i], cols[perm[i]]) for i in range(len(rows))])
        if found is None:
            continue
        mono, sign = found
        if signed:
            sign *= permutation_sign(perm)
        terms[mono] = terms.get(mono, 0) + sign
    return Polynomial(ring, grid, terms)


def perfect_matchings(indices: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    """Matchings with each pair increasing and pairs sorted by their first entry."""
    if not indices:
        yield []
        return
    first, rest = indices[0], indices[1:]
    for pos, partner in enumerate(rest):
        remaining = rest[:pos] + rest[pos + 1:]
        for tail in perfect_matchings(remaining):
            yield [(first, partner)] + tail


def expand_matchings(grid: VariableGrid, ring: Ring, indices: Sequence[int], signed: bool) -> Polynomial:
    """Pfaffian (signed) or Hafnian of the principal submatrix on ``indices``."""
    terms: Dict[Monomial, Fraction] = {}
    for matching in perfect_matchings(list(indices)):
        found = _product(grid, matching)
        if found is None:
            continue
        mono, sign = found
        if signed:
            flattened = [index for pair in matching for index in pair]
            sign *= permutation_sign(flattened)
        terms[mono] = terms.get(mono, 0) + sign
    return Polynomial(ring, grid, terms)


def pfaffian_by_expansion(grid: VariableGrid, ring: Ring, indices: Sequence[int]) -> Polynomial:
    """Pf(X) = sum_{i>=2} (-1)^i x_{1i} Pf(X without rows/cols 1, i)."""
    if not indices:
        return Polynomial.constant(ring, grid)
    first = indices[0]
    total = Polynomial.zero(ring, grid)
    for pos in range(1, len(indices)):
        rest = list(indices[1:pos]) + list(indices[pos + 1:])
        entry = Polynomial.cell(ring, grid, first, indices[pos])
        # pos is 0-based, so the 1-based column index is pos + 1
        sign = 1 if (pos + 1) % 2 == 0 else -1
        total = total + (entry * pfaffian_by_expansion(grid, ring, rest)).scale(sign)
    return total


def grid_determinant(grid: VariableGrid, ring: Ring = Ring.R) -> Polynomial:
    """Determinant of the whole (square) grid, entries canonicalized."""
    span = list(range(1, grid.rows + 1))
    return expand_permutations(grid, ring, span, span, signed=True)


def unacceptable_monomials(grid: VariableGrid) -> List[Monomial]:
    """Degree-2 monomials that are squares or share a row or a column.

    On a generic grid: squares, then same-row pairs, then same-column pairs. On a
    symmetric-type grid a variable sits in rows i and j, so "sharing a line" is
    sharing an index.
    """
    result: List[Monomial] = [Monomial.variable(v, 2) for v in grid.variables()]
    if grid.symmetry == Symmetry.GENERIC:
        for i in range(1, grid.rows + 1):
            for j, l in combinations(range(1, grid.cols + 1), 2):
                result.append(Monomial.from_indices([grid.canonical(i, j)[1], grid.canonical(i, l)[1]]))
        for j in range(1, grid.cols + 1):
            for i, k in combinations(range(1, grid.rows + 1), 2):
                result.append(Monomial.from_indices([grid.canonical(i, j)[1], grid.canonical(k, j)[1]]))
        return result
    for index in range(1, grid.rows + 1):
        line = [grid.canonical(index, other)[1] for other in range(1, grid.rows + 1) if other != index]
        for u, v in combinations(line, 2):
            result.append(Monomial.from_indices([u, v]))
    return result


def is_acceptable(grid: VariableGrid, mono: Monomial) -> bool:
    """Square free with no two variables from the same row or column."""
    if not mono.is_squarefree():
        return False
    if grid.symmetry != Symmetry.GENERIC:
        used = set()
        for var in mono.variables():
            i, j = grid.cell(var)
            if i in used or j in used:
                return False
            used.update((i, j))
        return True
    rows, cols = set(), set()
    for var in mono.variables():
        i, j = grid.cell(var)
        if i in rows or j in cols:
            return False
        rows.add(i)
        cols.add(j)
    return True
