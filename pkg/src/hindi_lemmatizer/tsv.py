"""Line reader shared by the rule, lexicon, gold and pairs file formats."""

from __future__ import annotations

from typing import Iterator, Union

from .devanagari import normalize
from .errors import DecodeError, ParseError


def decode(content: Union[str, bytes]) -> str:
    if isinstance(content, (bytes, bytearray)):
        try:
            return bytes(content).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DecodeError(exc.start, exc.reason) from None
    return content


def iter_records(content: Union[str, bytes]) -> Iterator[tuple[int, list[str]]]:
    """Yield ``(line_number, fields)`` for every data line.

    Blank lines and lines whose first non-blank character is ``#`` are
    skipped.  A field that starts with ``#`` ends the record, so
    ``ी<TAB><TAB>1<TAB>100<TAB># support=3`` carries a trailing comment.
    Fields are not normalized here.
    """
    text = decode(content)
    if text.startswith("\ufeff"):
        text = text[1:]
    for lineno, line in enumerate(text.split("\n"), start=1):
        line = line.rstrip("\r")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.split("\t")
        for i, field in enumerate(fields):
            if field.strip().startswith("#"):
                fields = fields[:i]
                break
        yield lineno, fields


def word_field(value: str, name: str, lineno: int, *, allow_empty: bool = False) -> str:
    word = normalize(value)
    if not word and not allow_empty:
        raise ParseError(f"empty {name} field", lineno)
    if any(ch.isspace() for ch in word):
        raise ParseError(f"{name} field contains whitespace: {word!r}", lineno)
    return word
