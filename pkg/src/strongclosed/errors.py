"""Exception types raised by the group engine and the harness."""

from __future__ import annotations


class GroupError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(GroupError, ValueError):
    pass


class NotASubgroup(GroupError, ValueError):
    """An argument was expected to lie inside another group but does not."""


class NotNormal(GroupError, ValueError):
    pass


class NotAPGroup(GroupError, ValueError):
    pass


class EnumerationBoundExceeded(GroupError, RuntimeError):
    """An operation needing full enumeration was asked to work above its bound.

    Raised instead of truncating, so callers can record the work as skipped.
    """


class HypothesisViolation(GroupError, ValueError):
    """The precondition of a lemma-shaped operation does not hold."""


class InvalidParameter(GroupError, ValueError):
    pass


class GroupFileError(GroupError, ValueError):
    def __init__(self, message: str, line: int | None = None, path: str | None = None):
        self.line = line
        self.path = path
        where = ""
        if path is not None:
            where += f"{path}:"
        if line is not None:
            where += f"line {line}: "
        elif where:
            where += " "
        super().__init__(f"{where}{message}")
