"""Exception hierarchy shared by every diamkit module.

Each error carries a short machine code so the CLI can print a one-line
``error: <code>: <reason>`` diagnostic and pick an exit status.
"""
from typing import Optional, Tuple


class DiamkitError(Exception):
    """Base class for all diamkit errors."""

    code = "error"

    def __init__(self, reason: str):
        """Initialize error.

        Args:
            reason: One-line human readable reason
        """
        super().__init__(reason)
        self.reason = reason

    def one_line(self) -> str:
        """Render the machine-parsable diagnostic line."""
        reason = " ".join(self.reason.split())
        return f"error: {self.code}: {reason}"


class GraphFormatError(DiamkitError):
    """Malformed graph, colouring, vertex-set, CNF or collection text."""

    code = "format"


class InvalidInputError(DiamkitError):
    """Well-formed input with invalid content (range, parameters, partial labels)."""

    code = "invalid"


class DisconnectedGraphError(DiamkitError):
    """An operation that presumes connectivity received a disconnected graph."""

    code = "disconnected"


class PreconditionViolation(DiamkitError):
    """A structural hypothesis of an algorithm does not hold for the input.

    When the violation was detected through a forbidden induced subgraph,
    ``witness`` holds the host vertices of the embedding (pattern order).
    """

    code = "precondition"

    def __init__(self, reason: str, witness: Optional[Tuple[int, ...]] = None):
        super().__init__(reason)
        self.witness = witness


class CapExceededError(DiamkitError):
    """An enumeration or oracle cap was exceeded."""

    code = "overflow"

    def __init__(self, reason: str, cap: int):
        super().__init__(f"{reason} (cap {cap})")
        self.cap = cap
