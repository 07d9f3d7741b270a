from typing import Iterable, Iterator, List, Optional, Sequence

from apolar.algebra.monomial import Monomial
from apolar.algebra.order import DIAGONAL_LEX, TermOrder
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import CeilingExceededError, UsageError


class MonomialIdeal:
    """A monomial ideal kept as its minimal generators (no generator divides another)."""

    def __init__(self, generators: Iterable[Monomial], variables: int):
        self.variables = variables
        minimal: List[Monomial] = []
        for mono in sorted(set(generators), key=lambda m: (m.degree, m.desc_key)):
            if not any(kept.divides(mono) for kept in minimal):
                minimal.append(mono)
        self.generators: List[Monomial] = sorted(minimal, key=lambda m: m.desc_key)
        self._members = set(minimal)
        self._degrees = sorted({m.degree for m in minimal})

    def __len__(self) -> int:
        return len(self.generators)

    def contains(self, mono: Monomial) -> bool:
        if len(self.generators) <= 8:
            return any(g.divides(mono) for g in self.generators)
        for degree in self._degrees:
            if degree > mono.degree:
                return False
            if any(sub in self._members for sub in mono.divisors_of_degree(degree)):
                return True
        return False

    def standard_monomials(self, k: int, max_nodes: Optional[int] = None) -> Iterator[Monomial]:
        """Degree-k monomials outside the ideal, by depth-first search over nondecreasing variable indices.

        A node inside the ideal is never expanded, since all of its multiples are inside too.
        """
        if k < 0:
            return
        visited = 0

        def walk(mono: Monomial, start: int) -> Iterator[Monomial]:
            nonlocal visited
            if mono.degree == k:
                yield mono
                return
            for var in range(start, self.variables):
                visited += 1
                if max_nodes is not None and visited > max_nodes:
                    raise CeilingExceededError(f"standard-monomial search at degree {k}", visited, max_nodes)
                child = mono.times_variable(var)
                if self.contains(child):
                    continue
                yield from walk(child, var)

        root = Monomial()
        if self.contains(root):
            return
        yield from walk(root, 0)

    def standard_monomial_count(self, k: int, max_nodes: Optional[int] = None) -> int:
        return sum(1 for _ in self.standard_monomials(k, max_nodes))

    def __repr__(self) -> str:
        return f"MonomialIdeal({len(self.generators)} generators in {self.variables} variables)"


def initial_ideal(gens: Sequence[Polynomial], order: TermOrder = DIAGONAL_LEX) -> MonomialIdeal:
    """Minimal generators among the leading monomials of ``gens``."""
    if not gens:
        raise UsageError("initial ideal of an empty generator list")
    return MonomialIdeal((order.leading_monomial(g) for g in gens), gens[0].grid.variable_count)


def standard_monomial_count(ideal: MonomialIdeal, k: int, max_nodes: Optional[int] = None) -> int:
    return ideal.standard_monomial_count(k, max_nodes)
