"""Exception hierarchy shared by all galrep modules.

``InputError`` carries a machine-readable ``code`` so the CLI can emit a
stable error JSON; everything else distinguishes misuse of the API
(``UsageError``), configured limits (``BudgetExceeded``) and violated
internal guarantees (``InternalCheckError``, always a bug).
"""

from __future__ import annotations


class GalrepError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GalrepError):
    """Invalid user input (bad polynomial, bad prime, parse failure)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class UsageError(GalrepError):
    """API called outside its contract (e.g. mixed conductors)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
        self.message = message


class BudgetExceeded(GalrepError):
    """A configured enumeration or degree budget would be exceeded."""

    def __init__(self, message: str):
        super().__init__(message)
        self.code = "budget_exceeded"
        self.message = message


class InternalCheckError(GalrepError):
    """A runtime self-check failed; indicates an implementation bug."""
