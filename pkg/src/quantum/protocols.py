"""Protocol definitions for relation backends."""

from typing import Protocol, runtime_checkable

from ..cluster import ExMat, Move
from .models import Backend, RelationResult


@runtime_checkable
class RelationBackend(Protocol):
    """Protocol for certifying that a move sequence acts as the identity.

    Implement this protocol to add another way of checking quantum relations.
    """

    backend: Backend

    def verify(self, exmat: ExMat, moves: list[Move], relation: str = "relation") -> RelationResult:
        """
        Check the composite of the moves on the seed with exchange matrix exmat.

        Args:
            exmat: Exchange matrix of the initial seed
            moves: Moves in time order
            relation: Name used in the result

        Returns:
            The result, with a deviation of 0.0 for exact backends
        """
        ...
