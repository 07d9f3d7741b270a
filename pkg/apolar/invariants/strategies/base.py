from abc import ABC, abstractmethod
from enum import Enum
from typing import List, Optional, Tuple

from apolar.algebra.grid import Ring, VariableGrid
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import UsageError
from apolar.store.models import InvariantKind


class MinorKind(str, Enum):
    DET_MINORS = "det-minors"
    PERM_MINORS = "perm-minors"
    PFAFFIAN_MINORS = "pf-minors"
    HAFNIAN_MINORS = "hf-minors"


class MinorFamily:
    """Minors of one size, each labelled by the row and column indices it uses."""

    def __init__(self, kind: MinorKind, size: int, grid: VariableGrid):
        self.kind = kind
        self.size = size
        self.grid = grid
        self.members: List[Polynomial] = []
        self.labels: List[Tuple[Tuple[int, ...], Tuple[int, ...]]] = []

    def add(self, rows: Tuple[int, ...], cols: Tuple[int, ...], member: Polynomial):
        self.labels.append((rows, cols))
        self.members.append(member)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __repr__(self) -> str:
        return f"MinorFamily({self.kind.value}, size={self.size}, members={len(self.members)})"


class InvariantStrategy(ABC):
    kind: InvariantKind
    minor_kind: MinorKind

    @abstractmethod
    def grid(self, n: int) -> VariableGrid:
        pass

    @abstractmethod
    def build(self, n: int, ring: Ring = Ring.R) -> Polynomial:
        pass

    @abstractmethod
    def minors(self, n: int, k: int, cols: Optional[int] = None) -> MinorFamily:
        pass

    @abstractmethod
    def candidates(self, n: int) -> List[Polynomial]:
        """Degree-2 elements of S proposed to generate Ann of the invariant."""
        pass

    def check_size(self, n: int, minimum: int = 1):
        if n < minimum:
            raise UsageError(f"{self.kind.value} needs n >= {minimum}, got {n}")
