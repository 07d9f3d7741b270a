"""Exact elimination: incremental sparse echelon forms and fraction-free dense routines."""

from fractions import Fraction
from math import lcm
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from apolar.core.errors import CeilingExceededError

Vector = Dict[Hashable, object]


def to_field(value, prime: Optional[int]):
    if prime is None:
        return value if isinstance(value, Fraction) else Fraction(value)
    if isinstance(value, Fraction):
        return value.numerator * pow(value.denominator, -1, prime) % prime
    return value % prime


class SparseEchelon:
    """Incrementally maintained echelon basis of sparse row vectors.

    Columns are arbitrary hashable labels ordered by ``key``; the pivot of a row is
    its column with the smallest key and is normalized to 1. Arithmetic is over
    the rationals, or over F_p when ``prime`` is given.
    """

    def __init__(self, key: Callable[[Hashable], object], prime: Optional[int] = None,
                 max_pivots: Optional[int] = None):
        self.key = key
        self.prime = prime
        self.max_pivots = max_pivots
        self.pivots: Dict[Hashable, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vector: Vector) -> Vector:
        """Remainder of ``vector`` after eliminating every pivot column it meets."""
        p = self.prime
        v = {col: to_field(value, p) for col, value in vector.items() if value}
        if p is not None:
            v = {col: value for col, value in v.items() if value}
        key = self.key
        while v:
            col = min(v, key=key)
            row = self.pivots.get(col)
            if row is None:
                return v
            factor = v[col]
            for c, a in row.items():
                value = v.get(c, 0) - factor * a
                if p is not None:
                    value %= p
                if value:
                    v[c] = value
                else:
                    v.pop(c, None)
        return v

    def insert(self, vector: Vector) -> bool:
        """Add a row; True when it enlarges the span."""
        v = self.reduce(vector)
        if not v:
            return False
        if self.max_pivots is not None and len(self.pivots) >= self.max_pivots:
            raise CeilingExceededError("pivot count", len(self.pivots) + 1, self.max_pivots)
        col = min(v, key=self.key)
        lead = v[col]
        if self.prime is None:
            inverse = 1 / lead
            row = {c: value * inverse for c, value in v.items()}
        else:
            inverse = pow(lead, -1, self.prime)
            row = {c: value * inverse % self.prime for c, value in v.items()}
        self.pivots[col] = row
        return True

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)

    def rref(self) -> List[Tuple[Hashable, Vector]]:
        """Fully reduced rows, sorted by pivot key."""
        p = self.prime
        order = sorted(self.pivots, key=self.key)
        reduced: Dict[Hashable, Vector] = {}
        # Last pivot first: a fully reduced row holds no pivot column but its own,
        # so one pass over the original entries of each row is enough.
        for col in reversed(order):
            row = dict(self.pivots[col])
            for c in [c for c in row if c != col and c in reduced]:
                factor = row[c]
                for c2, a in reduced[c].items():
                    value = row.get(c2, 0) - factor * a
                    if p is not None:
                        value %= p
                    if value:
                        row[c2] = value
                    else:
                        row.pop(c2, None)
            reduced[col] = row
        return [(col, reduced[col]) for col in order]


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> List[List[int]]:
    scaled = []
    for row in rows:
        denominators = [Fraction(x).denominator for x in row]
        factor = lcm(*denominators) if denominators else 1
        scaled.append([int(Fraction(x) * factor) for x in row])
    return scaled


def bareiss_echelon(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free Gaussian elimination; returns the integer echelon rows and pivot columns."""
    matrix = _integer_rows(rows)
    if not matrix:
        return [], []
    n_rows, n_cols = len(matrix), len(matrix[0])
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        swap = next((i for i in range(r, n_rows) if matrix[i][c]), None)
        if swap is None:
            continue
        matrix[r], matrix[swap] = matrix[swap], matrix[r]
        pivot = matrix[r][c]
        for i in range(r + 1, n_rows):
            below = matrix[i][c]
            matrix[i] = [(pivot * matrix[i][k] - below * matrix[r][k]) // previous for k in range(n_cols)]
        previous = pivot
        pivots.append(c)
        r += 1
    return matrix[:r], pivots


def bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(bareiss_echelon(rows)[1])


def solve_fraction_free(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Optional[List[Fraction]]:
    """One exact solution of matrix * x = rhs (free unknowns set to 0), or None."""
    n_cols = len(matrix[0]) if matrix else 0
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    echelon, pivots = bareiss_echelon(augmented)
    if n_cols in pivots:
        return None
    solution = [Fraction(0)] * n_cols
    for row, col in reversed(list(zip(echelon, pivots))):
        acc = Fraction(row[n_cols])
        for k in range(col + 1, n_cols):
            if row[k]:
                acc -= row[k] * solution[k]
        solution[col] = acc / row[col]
    return solution
