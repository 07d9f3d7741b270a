from enum import Enum
from typing import Dict, List, Optional, Tuple

from apolar.core.errors import UsageError


class Symmetry(str, Enum):
    GENERIC = "generic"
    SKEW_SYMMETRIC = "skew"
    ZERO_DIAGONAL_SYMMETRIC = "zero-diagonal-symmetric"


class Ring(str, Enum):
    """R = k[a_ij] carries the forms, S = k[d_ij] the operators acting on them."""

    R = "R"
    S = "S"


_LETTERS = {
    (Symmetry.GENERIC, Ring.R): "a",
    (Symmetry.GENERIC, Ring.S): "d",
    (Symmetry.SKEW_SYMMETRIC, Ring.R): "x",
    (Symmetry.SKEW_SYMMETRIC, Ring.S): "y",
    (Symmetry.ZERO_DIAGONAL_SYMMETRIC, Ring.R): "x",
    (Symmetry.ZERO_DIAGONAL_SYMMETRIC, Ring.S): "y",
}


class VariableGrid:
    """A matrix of formal variables with canonical cell indexing.

    Variables are numbered column by column (top to bottom inside a column), so
    a larger index always means a larger variable of the diagonal lexicographic
    order. Skew and zero-diagonal
    symmetric grids only own the cells strictly above the diagonal.
    """

    __slots__ = ("rows", "cols", "symmetry", "_cells", "_index")

    def __init__(self, rows: int, cols: int, symmetry: Symmetry = Symmetry.GENERIC):
        if rows < 1 or cols < 1:
            raise UsageError(f"grid dimensions must be positive, got {rows}x{cols}")
        if symmetry != Symmetry.GENERIC and rows != cols:
            raise UsageError(f"{symmetry.value} grids must be square, got {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.symmetry = Symmetry(symmetry)

        cells: List[Tuple[int, int]] = []
        for j in range(1, cols + 1):
            top = rows if self.symmetry == Symmetry.GENERIC else j - 1
            for i in range(1, top + 1):
                cells.append((i, j))
        self._cells = tuple(cells)
        self._index: Dict[Tuple[int, int], int] = {cell: var for var, cell in enumerate(cells)}

    @classmethod
    def generic(cls, rows: int, cols: Optional[int] = None) -> "VariableGrid":
        return cls(rows, rows if cols is None else cols, Symmetry.GENERIC)

    @classmethod
    def skew(cls, size: int) -> "VariableGrid":
        return cls(size, size, Symmetry.SKEW_SYMMETRIC)

    @classmethod
    def zero_diagonal_symmetric(cls, size: int) -> "VariableGrid":
        return cls(size, size, Symmetry.ZERO_DIAGONAL_SYMMETRIC)

    @property
    def variable_count(self) -> int:
        return len(self._cells)

    def canonical(self, i: int, j: int) -> Optional[Tuple[int, int]]:
        """Return (sign, variable) standing in cell (i, j), or None for a structural zero."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise UsageError(f"cell ({i},{j}) outside a {self.rows}x{self.cols} grid")
        if self.symmetry == Symmetry.GENERIC:
            return 1, self._index[(i, j)]
        if i == j:
            return None
        low, high = min(i, j), max(i, j)
        sign = -1 if self.symmetry == Symmetry.SKEW_SYMMETRIC and i > j else 1
        return sign, self._index[(low, high)]

    def cell(self, var: int) -> Tuple[int, int]:
        return self._cells[var]

    def letter(self, ring: Ring) -> str:
        return _LETTERS[(self.symmetry, ring)]

    def symbol(self, var: int, ring: Ring) -> str:
        i, j = self._cells[var]
        return f"{self.letter(ring)}_{{{i},{j}}}"

    def variables(self) -> range:
        return range(len(self._cells))

    def __eq__(self, other) -> bool:
        if not isinstance(other, VariableGrid):
            return NotImplemented
        return (self.rows, self.cols, self.symmetry) == (other.rows, other.cols, other.symmetry)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.symmetry))

    def __repr__(self) -> str:
        return f"VariableGrid({self.rows}x{self.cols}, {self.symmetry.value})"
