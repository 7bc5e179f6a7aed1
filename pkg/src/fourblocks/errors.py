"""Exception hierarchy shared across the engine."""


class FourBlocksError(Exception):
    """Base class for all engine errors."""


class DigraphError(FourBlocksError, ValueError):
    """Invalid digraph construction input."""

    def __init__(self, kind: str, message: str, arc=None):
        super().__init__(message)
        self.kind = kind
        self.arc = arc


class HypothesisFailure(FourBlocksError):
    """The input has no spanning out-tree from the requested root."""

    def __init__(self, message: str, unreachable=frozenset()):
        super().__init__(message)
        self.unreachable = frozenset(unreachable)


class ContractViolation(FourBlocksError, AssertionError):
    """An internal contract was broken; signals a bug, never a normal outcome."""


class SizeCapExceeded(FourBlocksError):
    """An exhaustive routine refused an instance larger than its cap."""

    def __init__(self, routine: str, size: int, cap: int):
        super().__init__(f"{routine}: instance size {size} exceeds cap {cap}")
        self.routine = routine
        self.size = size
        self.cap = cap


class FormatError(FourBlocksError, ValueError):
    """Malformed instance or certificate text."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
