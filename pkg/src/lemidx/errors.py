"""Exception hierarchy shared across the package."""


class LemIndexError(Exception):
    """Base class for all lemidx errors."""


class TextError(LemIndexError):
    """Invalid input text (empty, or sentinel not at the final position)."""


class PatternError(LemIndexError):
    """Invalid query pattern (e.g. empty)."""


class IntervalSequenceError(LemIndexError):
    """An interval sequence violates the disjointness conditions."""


class BuildValidationError(LemIndexError):
    """A build-time structural invariant failed; names the violated check."""


class InternalConsistencyError(LemIndexError):
    """A query reached a state that the algorithm's invariants forbid."""


class IndexFormatError(LemIndexError):
    """Base class for index (de)serialization failures."""


class MagicError(IndexFormatError):
    """Stream does not start with the index magic bytes."""


class VersionError(IndexFormatError):
    """Index format version is not supported."""


class TruncationError(IndexFormatError):
    """Stream ended before the index was fully read."""


class ChecksumError(IndexFormatError):
    """Trailing checksum does not match the stream contents."""
