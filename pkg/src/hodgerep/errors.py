"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class HodgeRepError(Exception):
    """Base class; ``exit_code`` is the CLI status used when it escapes."""

    exit_code = 1


class UsageError(HodgeRepError, ValueError):
    """Malformed input: unparsable specs, unbounded searches, bad patterns."""

    exit_code = 2


class DomainError(HodgeRepError, ValueError):
    """Well-formed input that does not describe an admissible object."""

    exit_code = 3


class InvalidTupleError(DomainError):
    """A tuple violating a Hodge-representation condition (e.g. m not in Z/2)."""


class ResourceCapError(HodgeRepError, RuntimeError):
    """A configured size cap would be exceeded."""

    exit_code = 4

    def __init__(self, cap_name: str, cap: int, requested: int):
        self.cap_name = cap_name
        self.cap = cap
        self.requested = requested
        super().__init__(f"{cap_name}={cap} exceeded (requested {requested})")
