import sys
from collections import Counter
from itertools import combinations_with_replacement
from math import comb
from typing import Dict, Iterable, Iterator, Tuple

_SENTINEL = (sys.maxsize, 0)


class Monomial:
    """Sparse exponent vector: sorted (variable, exponent) pairs, exponents > 0.

    Instances are immutable; hash and order keys are cached.
    """

    __slots__ = ("exps", "degree", "_hash", "_map", "_lex", "_desc")

    def __init__(self, exps: Iterable[Tuple[int, int]] = ()):
        self.exps: Tuple[Tuple[int, int], ...] = tuple(exps)
        self.degree: int = sum(e for _, e in self.exps)
        self._hash = hash(self.exps)
        self._map = None
        self._lex = None
        self._desc = None

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Monomial":
        counts = Counter(indices)
        return cls(sorted(counts.items()))

    @classmethod
    def from_dict(cls, exponents: Dict[int, int]) -> "Monomial":
        return cls(sorted((v, e) for v, e in exponents.items() if e > 0))

    @classmethod
    def variable(cls, var: int, exponent: int = 1) -> "Monomial":
        return cls(((var, exponent),)) if exponent > 0 else ONE

    def as_dict(self) -> Dict[int, int]:
        if self._map is None:
            self._map = dict(self.exps)
        return self._map

    def variables(self) -> Tuple[int, ...]:
        return tuple(v for v, _ in self.exps)

    def indices(self) -> Tuple[int, ...]:
        """Variables repeated by multiplicity, ascending."""
        return tuple(v for v, e in self.exps for _ in range(e))

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Monomial({self.exps})"

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not other.exps:
            return self
        if not self.exps:
            return other
        merged = dict(self.exps)
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        return Monomial(sorted(merged.items()))

    def times_variable(self, var: int) -> "Monomial":
        merged = dict(self.exps)
        merged[var] = merged.get(var, 0) + 1
        return Monomial(sorted(merged.items()))

    def divides(self, other: "Monomial") -> bool:
        if self.degree > other.degree:
            return False
        theirs = other.as_dict()
        return all(theirs.get(v, 0) >= e for v, e in self.exps)

    def quotient(self, divisor: "Monomial") -> "Monomial":
        """self / divisor; the caller guarantees divisor | self."""
        if not divisor.exps:
            return self
        mine = dict(self.exps)
        for v, e in divisor.exps:
            rest = mine[v] - e
            if rest:
                mine[v] = rest
            else:
                del mine[v]
        return Monomial(sorted(mine.items()))

    def lcm(self, other: "Monomial") -> "Monomial":
        merged = dict(self.exps)
        for v, e in other.exps:
            if e > merged.get(v, 0):
                merged[v] = e
        return Monomial(sorted(merged.items()))

    def is_coprime(self, other: "Monomial") -> bool:
        theirs = other.as_dict()
        return not any(v in theirs for v, _ in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def divisors_of_degree(self, k: int) -> Iterator["Monomial"]:
        """All monomials of degree k dividing self."""
        if k < 0 or k > self.degree:
            return
        exps = self.exps
        suffix = [0] * (len(exps) + 1)
        for pos in range(len(exps) - 1, -1, -1):
            suffix[pos] = suffix[pos + 1] + exps[pos][1]

        def walk(pos: int, left: int, chosen: Tuple[Tuple[int, int], ...]):
            if left == 0:
                yield Monomial(chosen)
                return
            if pos == len(exps) or suffix[pos] < left:
                return
            var, exp = exps[pos]
            for take in range(min(exp, left), -1, -1):
                step = chosen + ((var, take),) if take else chosen
                yield from walk(pos + 1, left - take, step)

        yield from walk(0, k, ())

    def divisors(self) -> Iterator["Monomial"]:
        for k in range(self.degree, -1, -1):
            yield from self.divisors_of_degree(k)

    @property
    def lex_key(self) -> Tuple[Tuple[int, int], ...]:
        """Larger key means larger monomial in lexicographic order; the largest variable is compared first."""
        if self._lex is None:
            self._lex = tuple(reversed(self.exps))
        return self._lex

    @property
    def desc_key(self):
        """Ascending sort on this key lists monomials from largest to smallest (degree first)."""
        if self._desc is None:
            self._desc = (-self.degree, tuple((-v, -e) for v, e in reversed(self.exps)) + (_SENTINEL,))
        return self._desc


ONE = Monomial()


def monomials_of_degree(variables: int, k: int) -> Iterator[Monomial]:
    """Every degree-k monomial in ``variables`` variables."""
    for indices in combinations_with_replacement(range(variables), k):
        yield Monomial.from_indices(indices)


def count_monomials(variables: int, k: int) -> int:
    return comb(variables + k - 1, k) if k >= 0 else 0
