"""Exception types shared across the toolkit.

Every raised error derives from AdaptkitError so the CLI can map domain
failures to a single exit code while the error class name stays visible.
"""


class AdaptkitError(Exception):
    """Base class for all domain errors."""


class DecodeError(AdaptkitError):
    """Input bytes are not valid UTF-8."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class ManifestConflict(AdaptkitError):
    """A source name is already registered with different metadata."""


class IoError(AdaptkitError):
    """A referenced corpus file is missing or unreadable."""


class ConfigError(AdaptkitError):
    """Inconsistent or out-of-range configuration values."""


class EmptyCorpus(AdaptkitError):
    """An operation that needs text received none."""


class UnknownToken(AdaptkitError):
    """A token id falls outside the vocabulary."""


class FormatError(AdaptkitError):
    """A serialized artifact does not match its declared format."""


class MappingError(AdaptkitError):
    """A token cannot be mapped onto the old vocabulary."""


class ShapeError(AdaptkitError):
    """Matrix dimensions or ids disagree with a mapping."""


class RangeError(AdaptkitError):
    """A numeric argument is outside its documented interval."""


class OrderError(AdaptkitError):
    """Records that must be sorted are not."""


class SchemaError(AdaptkitError):
    """A record file violates its schema."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class TurnFailed(AdaptkitError):
    """A chat turn could not be completed after bounded retries."""


class IncompleteJudgements(AdaptkitError):
    """A turn lacks one of the two presentation orders."""


class TranscriptMismatch(AdaptkitError):
    """Two transcripts do not cover the same (prompt, turn) set."""
