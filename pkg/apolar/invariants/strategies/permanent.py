from apolar.invariants.strategies.base import MinorKind
from apolar.invariants.strategies.determinant import DeterminantStrategy
from apolar.store.models import InvariantKind


class PermanentStrategy(DeterminantStrategy):
    """Per(A): the determinant construction with every sign dropped, candidates swapped to 2x2 minors."""

    kind = InvariantKind.PERMANENT
    minor_kind = MinorKind.PERM_MINORS
    signed = False
