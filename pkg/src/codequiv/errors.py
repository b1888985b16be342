"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class CodeEquivError(Exception):
    """Base class for all structured failures raised by this package."""


class DimensionMismatch(CodeEquivError, ValueError):
    pass


class Singular(CodeEquivError, ValueError):
    pass


class InvalidParams(CodeEquivError, ValueError):
    pass


class LengthMismatch(CodeEquivError, ValueError):
    pass


class AllPunctured(CodeEquivError, ValueError):
    pass


class CostExceeded(CodeEquivError):
    """An exhaustive computation would exceed the configured cost cap."""

    def __init__(self, message: str, *, required: int | None = None, cap: int | None = None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class DecodeFailure(CodeEquivError):
    pass


class NotEquivalent(CodeEquivError):
    pass


class NotConsistent(CodeEquivError):
    """A candidate permutation does not carry one row space onto the other."""


class SignatureMismatch(NotEquivalent):
    """Signature multisets of two codes differ, so they cannot be equivalent."""


class Ambiguous(CodeEquivError):
    """Refinement stopped before every coordinate was individualized.

    ``partition`` and ``partition_other`` hold the final block structure
    (lists of coordinate lists, matched by position).
    """

    def __init__(self, message: str, partition=None, partition_other=None):
        super().__init__(message)
        self.partition = partition
        self.partition_other = partition_other
