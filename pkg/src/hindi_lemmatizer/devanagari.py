"""
Unicode primitives for Devanagari words.

All matching in the package happens on NFC codepoint sequences.  Grapheme
clusters are only used to count how much of a word is left after a suffix
has been stripped, because a bare matra suffix such as ``ी`` lives inside
the final cluster of ``कमजोरी`` and could never be matched cluster-wise.

NFC keeps the nukta letters U+0958..U+095F decomposed (they are composition
exclusions), so ``क़`` is always stored as ``क`` + ``़``.  Anusvara and
chandrabindu are distinct codepoints and stay distinct.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DecodeError, EmptyStemError, EmptyWordError

NUKTA = "़"
VIRAMA = "्"
ANUSVARA = "ं"
CHANDRABINDU = "ँ"
ZWJ = "\u200d"
ZWNJ = "\u200c"

DEVANAGARI_BLOCK = range(0x0900, 0x0980)

# Conjunct linkers (InCB=Linker) for the scripts that have them.
_LINKERS = frozenset("\u094d\u09cd\u0acd\u0b4d\u0c4d\u0d4d")


def _is_incb_consonant(ch: str) -> bool:
    cp = ord(ch)
    return 0x0915 <= cp <= 0x0939 or 0x0958 <= cp <= 0x095F or 0x0978 <= cp <= 0x097F


def normalize(text: Union[str, bytes]) -> str:
    """Return ``text`` in NFC with surrounding whitespace removed.

    ``bytes`` are decoded as strict UTF-8; a bad sequence raises
    :class:`DecodeError` carrying the byte offset.  Strings holding lone
    surrogates are rejected the same way, with the offset of the
    offending code unit in the UTF-8 encoding of the preceding text.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DecodeError(exc.start, exc.reason) from None
    else:
        for i, ch in enumerate(text):
            if 0xD800 <= ord(ch) <= 0xDFFF:
                offset = len(text[:i].encode("utf-8"))
                raise DecodeError(offset, "lone surrogate")
    return unicodedata.normalize("NFC", text).strip()


def is_normalized(text: str) -> bool:
    return unicodedata.is_normalized("NFC", text) and text == text.strip()


def _is_mark(ch: str) -> bool:
    return unicodedata.category(ch)[0] == "M"


def iter_clusters(word: str) -> Iterator[str]:
    """Yield extended grapheme clusters of ``word``.

    Covers what Indic words need: no break before combining marks, ZWJ or
    ZWNJ (GB9/GB9a), CR LF kept together (GB3), controls isolated, and the
    conjunct rule GB9c (consonant, virama, consonant stays one cluster).
    Hangul, regional indicators and emoji sequences are not handled.
    """
    if not word:
        return
    start = 0
    # GB9c state: inside "Consonant [Extend|Linker]*" and whether a linker was seen
    in_conjunct = _is_incb_consonant(word[0])
    seen_linker = False
    for i in range(1, len(word)):
        prev, ch = word[i - 1], word[i]
        if prev == "\r" and ch == "\n":
            join = True
        elif prev in "\r\n" or unicodedata.category(prev) == "Cc":
            join = False
        elif ch in "\r\n" or unicodedata.category(ch) == "Cc":
            join = False
        elif _is_mark(ch) or ch in (ZWJ, ZWNJ):
            join = True
        elif _is_incb_consonant(ch) and in_conjunct and seen_linker:
            join = True
        else:
            join = False

        if not join:
            yield word[start:i]
            start = i

        # update GB9c state for the next boundary
        if _is_incb_consonant(ch):
            in_conjunct, seen_linker = True, False
        elif in_conjunct and ch in _LINKERS:
            seen_linker = True
        elif in_conjunct and (ch == ZWJ or (unicodedata.category(ch) in ("Mn", "Me") and ch != ZWNJ)):
            pass
        else:
            in_conjunct, seen_linker = False, False
    yield word[start:]


@dataclass(frozen=True)
class GraphemeWord:
    """A normalized word held as its grapheme clusters."""

    clusters: tuple[str, ...]

    def __post_init__(self) -> None:
        if any(not c for c in self.clusters):
            raise ValueError("grapheme clusters must be non-empty")

    @property
    def text(self) -> str:
        return "".join(self.clusters)

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.clusters)


def segment(word: str) -> GraphemeWord:
    """Split a normalized, whitespace-free word into grapheme clusters.

    >>> segment("लडकोँ").clusters
    ('ल', 'ड', 'कोँ')
    """
    if not word:
        raise EmptyWordError("cannot segment an empty word")
    if any(ch.isspace() for ch in word):
        raise ValueError(f"word contains whitespace: {word!r}")
    return GraphemeWord(tuple(iter_clusters(word)))


def cluster_count(text: str) -> int:
    return sum(1 for _ in iter_clusters(text))


def _as_text(word: Union[GraphemeWord, str]) -> str:
    return word.text if isinstance(word, GraphemeWord) else word


def ends_with_suffix(word: Union[GraphemeWord, str], suffix: str) -> bool:
    """True iff the codepoints of ``word`` end with those of ``suffix``.

    Matra-initial suffixes match inside the final cluster.
    """
    return _as_text(word).endswith(suffix)


def strip_and_append(word: Union[GraphemeWord, str], suffix: str, replacement: str) -> str:
    """Remove the trailing ``suffix`` and append ``replacement``.

    >>> strip_and_append(segment("लडकोँ"), "ोँ", "ा")
    'लडका'
    """
    text = _as_text(word)
    if not suffix or not text.endswith(suffix):
        raise ValueError(f"{text!r} does not end with suffix {suffix!r}")
    stem = text[: len(text) - len(suffix)]
    if not stem:
        raise EmptyStemError(f"stripping {suffix!r} consumes the whole word {text!r}")
    return unicodedata.normalize("NFC", stem + replacement)


def has_devanagari_letter(text: str) -> bool:
    return any(ord(ch) in DEVANAGARI_BLOCK and unicodedata.category(ch)[0] == "L" for ch in text)
