"""
Exception types raised by the tracecode library
"""


class TracecodeError(Exception):
    """Base class for all tracecode errors"""


class DomainError(TracecodeError, ValueError):
    """An argument lies outside the domain of an operation"""


class CapExceededError(TracecodeError):
    """A configured size cap would be exceeded"""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.what = what
        self.size = size
        self.cap = cap


class SelfOrthogonalityError(TracecodeError):
    """A code expected to be Hermitian self-orthogonal is not"""
