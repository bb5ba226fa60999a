"""Exception hierarchy shared by every module in the package."""

from __future__ import annotations


class LemmatizerError(Exception):
    """Base class for all errors raised by hindi_lemmatizer."""


class DecodeError(LemmatizerError, ValueError):
    """Input bytes (or code units) are not valid UTF-8 / Unicode."""

    def __init__(self, offset: int, reason: str = "invalid UTF-8 sequence"):
        self.offset = offset
        self.reason = reason
        super().__init__(f"{reason} at byte offset {offset}")


class EmptyWordError(LemmatizerError, ValueError):
    """A word was empty where a non-empty word is required."""


class EmptyStemError(LemmatizerError, ValueError):
    """A strip operation consumed the whole word."""


class ContractError(LemmatizerError, ValueError):
    """A caller violated an operation's precondition."""


class EmptyInputError(LemmatizerError, ValueError):
    """Empty or whitespace-only input handed to the lemmatizer."""


class TokenizationError(LemmatizerError, ValueError):
    """More than one token handed to a single-word operation."""


class DataFileError(LemmatizerError):
    """Base class for problems with rule, lexicon, gold or pairs files."""


class ParseError(DataFileError, ValueError):
    """Malformed line in a data file."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.message = message
        self.line = line
        self.source = source
        super().__init__(message)

    def __str__(self) -> str:
        where = [str(p) for p in (self.source, self.line) if p is not None]
        return ":".join(where) + ": " + self.message if where else self.message


class ValidationError(ParseError):
    """A line parsed but its values break a data invariant."""


class ConflictError(DataFileError, ValueError):
    """Two entries claim the same key with different values."""

    def __init__(self, message: str, key: str, values: tuple[str, ...], lines: tuple[int, ...] = ()):
        self.key = key
        self.values = values
        self.lines = lines
        super().__init__(message)


class EmptyGoldError(LemmatizerError, ValueError):
    """Evaluation was requested on an empty gold set."""
