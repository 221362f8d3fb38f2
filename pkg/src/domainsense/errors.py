"""Exception types shared across the package."""

from __future__ import annotations


class DomainsenseError(Exception):
    """Base class for all domain-disambiguation errors."""


class UnknownFieldError(DomainsenseError):
    """A field name or id does not resolve to an existing field."""


class EmptyWordError(DomainsenseError):
    """A word normalized to the empty string."""


class EmptySentenceError(DomainsenseError):
    """A sentence was empty or whitespace-only."""


class NoContentWordsError(DomainsenseError):
    """Separation left no content words to vote with."""


class NoWinnerError(DomainsenseError):
    """An update required a winning field but the tally produced none."""


class NotACorrectionError(DomainsenseError):
    """A confirmed result was passed where a correction is required."""


class TargetMismatchError(DomainsenseError):
    """Prediction words do not cover the gold target words."""


class MalformedFileError(DomainsenseError):
    """A persisted file failed to parse.

    Carries the path and 1-based line number of the offending row.
    """

    def __init__(self, path: str, line_no: int, reason: str) -> None:
        super().__init__(f"{path}:{line_no}: {reason}")
        self.path = path
        self.line_no = line_no
        self.reason = reason


class IntegrityError(DomainsenseError):
    """Loaded or constructed rows violate a lexicon invariant."""
