"""Errors raised by the toolkit.

Input problems derive from ``ValueError`` so callers can treat them as bad
input; a construction that breaks its own invariants raises
``ConsistencyError``.
"""

from typing import Iterable, Optional


class GraphFormatError(ValueError):
    """Malformed edge-list, orientation or coloring document."""

    def __init__(self, message: str, line: Optional[int] = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotConnectedError(ValueError):
    """The graph is not connected."""

    def __init__(self, message: str = "not connected") -> None:
        super().__init__(message)


class BridgeError(ValueError):
    """The graph has bridges, so no strong orientation exists."""

    def __init__(self, bridges: Iterable[int]) -> None:
        self.bridges = sorted(bridges)
        super().__init__(f"graph has bridges: edge ids {self.bridges}")


class BridgeLegError(ValueError):
    """No ear exists through the requested leg."""

    def __init__(self, edge: int) -> None:
        self.edge = edge
        super().__init__(f"bridge leg: edge {edge} lies on no cycle")


class TooLargeError(ValueError):
    """An exact computation was asked for beyond its size cap."""


class ConsistencyError(RuntimeError):
    """A construction produced data contradicting an earlier commitment."""
