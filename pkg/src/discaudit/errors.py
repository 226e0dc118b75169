"""Exception types raised across the audit pipeline.

Record-level errors carry the offending field and line number so that batch
loaders can aggregate them into a single ValidationError.
"""

from __future__ import annotations


class AuditError(Exception):
    """Base class for every error raised by this package."""


class IoError(AuditError):
    """A corpus, lexicon, or report file could not be read or written."""


class RecordError(AuditError):
    """One input record is invalid. Knows which field and line it came from."""

    def __init__(self, message: str, field: str = "", line: int = 0):
        self.field = field
        self.line = line
        prefix = f"line {line}: " if line else ""
        suffix = f" (field: {field})" if field else ""
        super().__init__(f"{prefix}{message}{suffix}")


class MissingField(RecordError):
    """A required field is absent from the record."""


class NegativeCount(RecordError):
    """A count field (likes, comments, followers) is negative."""


class UnknownPlatform(RecordError):
    """The platform value is not Instagram, YouTube, or TikTok."""


class ToggleOnNonInstagram(RecordError):
    """A paid-partnership toggle appeared on a platform that has none."""


class UnknownAccount(RecordError):
    """A post references an account id that is not in the accounts file."""


class DuplicateId(RecordError):
    """A post id or (account id, platform) pair appeared twice."""


class ValidationError(AuditError):
    """A batch load failed. Lists the first few per-line failures."""

    MAX_LISTED = 20

    def __init__(self, errors: list[RecordError]):
        self.errors = errors
        listed = "\n".join(f"  - {e}" for e in errors[: self.MAX_LISTED])
        more = len(errors) - self.MAX_LISTED
        tail = f"\n  ... and {more} more" if more > 0 else ""
        super().__init__(f"{len(errors)} invalid record(s):\n{listed}{tail}")


class SchemaMismatch(AuditError):
    """A platform export record is missing a required key."""

    def __init__(self, key: str, platform: str = "", line: int = 0):
        self.key = key
        self.line = line
        prefix = f"line {line}: " if line else ""
        where = f" in {platform} export record" if platform else ""
        super().__init__(f"{prefix}missing required key '{key}'{where}")


class LanguageUnassigned(AuditError):
    """A post reached classification without an English/Dutch label."""


class ParseError(AuditError):
    """A config file (lexicon or synth spec) is malformed."""


class EmptyTermSet(ParseError):
    """A lexicon term list or co-occurrence rule set is empty or too short."""


class InfeasibleSpec(AuditError):
    """A synthetic-corpus spec cannot be realized under the given lexicon."""
