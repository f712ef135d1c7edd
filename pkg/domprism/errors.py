"""Exceptions raised by domprism.

Every exception also derives from a builtin so callers can catch ValueError,
RuntimeError, LookupError or KeyError without importing this module.
"""
from __future__ import annotations

import typing as t


class DomprismError(Exception):
    """Base class of every domprism exception."""


class GraphError(DomprismError, ValueError):
    """Invalid graph input or a graph that violates an operation precondition."""


class CapacityError(GraphError):
    """Instance too large for the fixed vertex capacity."""


class EmptyEdgeError(GraphError):
    """A hypergraph edge is empty, so no transversal exists."""

    def __init__(self, msg: str, vertex: t.Union[int, None] = None) -> None:
        """Create an EmptyEdgeError.

        Args:
            msg: Error message
            vertex: Graph vertex whose neighborhood produced the empty edge
        """
        super().__init__(msg)
        self.vertex = vertex


class NotBipartiteError(GraphError):
    """Operation requires a bipartite graph."""

    def __init__(self, msg: str, odd_cycle: t.Tuple[int, ...] = ()) -> None:
        """Create a NotBipartiteError.

        Args:
            msg: Error message
            odd_cycle: Vertices of an odd cycle, in order
        """
        super().__init__(msg)
        self.odd_cycle = odd_cycle


class CertificateError(DomprismError, RuntimeError):
    """A vertex set failed the certificate it was required to pass."""


class UndecidedError(DomprismError, RuntimeError):
    """A search exhausted its budget before proving optimality."""

    def __init__(
        self,
        msg: str,
        lower: int,
        upper: t.Union[int, None],
        witness: t.Any = None,
    ) -> None:
        """Create an UndecidedError.

        Args:
            msg: Error message
            lower: Best proven lower bound
            upper: Best known upper bound, None if no feasible set was found
            witness: Set achieving upper, if any
        """
        super().__init__(msg)
        self.lower = lower
        self.upper = upper
        self.witness = witness


class NotFoundError(DomprismError, LookupError):
    """No set of the requested kind exists up to the size cap."""


class Graph6Error(DomprismError, ValueError):
    """Malformed graph6 token."""

    def __init__(self, msg: str, line_number: t.Union[int, None] = None) -> None:
        """Create a Graph6Error.

        Args:
            msg: Error message
            line_number: 1-based input line, None when parsing a lone token
        """
        if line_number is not None:
            msg = f"line {line_number}: {msg}"
        super().__init__(msg)
        self.line_number = line_number


class UnknownSuiteError(DomprismError, KeyError):
    """Verification suite name is not registered."""

    def __str__(self) -> str:
        """Message without KeyError's quoting."""
        return str(self.args[0]) if self.args else ""


class ConfigError(DomprismError, ValueError):
    """Malformed configuration file or value."""
