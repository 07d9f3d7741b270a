from math import comb
from typing import Dict, List, Optional, Union

from apolar.algebra.contraction import contract
from apolar.algebra.grid import Ring
from apolar.algebra.linalg import SparseEchelon
from apolar.algebra.polynomial import Polynomial
from apolar.core.errors import CandidateError, UsageError
from apolar.core.logger import logger
from apolar.invariants.strategies.base import InvariantStrategy, MinorFamily, MinorKind
from apolar.invariants.strategies.determinant import DeterminantStrategy
from apolar.invariants.strategies.hafnian import HafnianStrategy
from apolar.invariants.strategies.permanent import PermanentStrategy
from apolar.invariants.strategies.pfaffian import PfaffianStrategy
from apolar.store.models import InvariantKind

STRATEGIES: Dict[InvariantKind, InvariantStrategy] = {
    InvariantKind.DETERMINANT: DeterminantStrategy(),
    InvariantKind.PERMANENT: PermanentStrategy(),
    InvariantKind.PFAFFIAN: PfaffianStrategy(),
    InvariantKind.HAFNIAN: HafnianStrategy(),
}

_MINOR_OWNERS: Dict[MinorKind, InvariantKind] = {
    strategy.minor_kind: kind for kind, strategy in STRATEGIES.items()
}


def strategy_for(kind: Union[InvariantKind, str]) -> InvariantStrategy:
    try:
        return STRATEGIES[InvariantKind(kind)]
    except ValueError:
        raise UsageError(f"unknown invariant {kind!r}; choose from det, perm, pf, hf") from None


class InvariantBuilder:
    """Builds one invariant family at a time through an exchangeable strategy."""

    def __init__(self, kind: Union[InvariantKind, str, None] = None):
        self._strategy: Optional[InvariantStrategy] = strategy_for(kind) if kind is not None else None

    def set_strategy(self, strategy: InvariantStrategy):
        self._strategy = strategy
        logger.debug(f"Strategy set to: {type(strategy).__name__}")

    @property
    def strategy(self) -> InvariantStrategy:
        if self._strategy is None:
            raise UsageError("no invariant strategy selected")
        return self._strategy

    def invariant(self, n: int, ring: Ring = Ring.R) -> Polynomial:
        return self.strategy.build(n, ring)

    def minors(self, n: int, k: int, cols: Optional[int] = None) -> MinorFamily:
        return self.strategy.minors(n, k, cols)

    def candidates(self, n: int, verify: bool = True) -> List[Polynomial]:
        result = self.strategy.candidates(n)
        if verify:
            form = self.strategy.build(n)
            for index, candidate in enumerate(result):
                residue = contract(candidate, form)
                if not residue.is_zero():
                    raise CandidateError(index, residue.to_text())
            logger.debug(f"All {len(result)} {self.strategy.kind.value} candidates annihilate the form")
        return result


def build_invariant(kind: Union[InvariantKind, str], n: int, ring: Ring = Ring.R) -> Polynomial:
    """det/perm of an n x n generic grid, or Pf/Hf of a 2n x 2n grid."""
    return InvariantBuilder(kind).invariant(n, ring)


def build_minors(kind: Union[MinorKind, str], n: int, k: int, cols: Optional[int] = None) -> MinorFamily:
    """All k x k minors (k = 2t for Pfaffian and Hafnian minors, n the half size there)."""
    try:
        owner = _MINOR_OWNERS[MinorKind(kind)]
    except ValueError:
        raise UsageError(f"unknown minor family {kind!r}") from None
    return InvariantBuilder(owner).minors(n, k, cols)


def degree2_candidates(kind: Union[InvariantKind, str], n: int, verify: bool = True) -> List[Polynomial]:
    """Proposed degree-2 generators of Ann; each one is contracted against the form unless ``verify`` is off."""
    return InvariantBuilder(kind).candidates(n, verify)


def span_dimension(polys: List[Polynomial], prime: Optional[int] = None) -> int:
    echelon = SparseEchelon(key=lambda m: m.desc_key, prime=prime)
    for poly in polys:
        echelon.insert(poly.terms)
    return echelon.rank


def candidate_span_dimension(kind: Union[InvariantKind, str], n: int, prime: Optional[int] = None) -> int:
    return span_dimension(degree2_candidates(kind, n, verify=False), prime)


def expected_w_dimension(n: int) -> int:
    """dim W for a 2n x 2n grid: 2 C(2n,4) + (2n^2 - n)(2n - 2) + 2n^2 - n."""
    variables = 2 * n * n - n
    return 2 * comb(2 * n, 4) + variables * (2 * n - 2) + variables
