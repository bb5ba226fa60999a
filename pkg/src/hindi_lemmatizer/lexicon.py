"""
Exact-match knowledgebase consulted before any suffix rule.

Protected words map to themselves (``पिता -> पिता``); exceptions map to a
different lemma (``कवियोँ -> कवि``).  Both live in one table.

File format: UTF-8, one ``surface<TAB>lemma`` entry per line, ``#`` comment
lines and blank lines ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Union

from .errors import ConflictError, ParseError
from .tsv import iter_records, word_field


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    lemma: str

    @property
    def protected(self) -> bool:
        return self.surface == self.lemma


class Lexicon:
    """Immutable surface -> lemma table."""

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        table: dict[str, str] = {}
        for entry in entries:
            known = table.get(entry.surface)
            if known is not None and known != entry.lemma:
                raise ConflictError(
                    f"conflicting lemmas for {entry.surface!r}: {known!r} and {entry.lemma!r}",
                    entry.surface,
                    (known, entry.lemma),
                )
            table[entry.surface] = entry.lemma
        self._table: Mapping[str, str] = MappingProxyType(table)

    def lookup(self, word: str) -> Optional[str]:
        return self._table.get(word)

    def __contains__(self, word: object) -> bool:
        return word in self._table

    def __len__(self) -> int:
        return len(self._table)

    def __iter__(self) -> Iterator[LexiconEntry]:
        for surface in sorted(self._table):
            yield LexiconEntry(surface, self._table[surface])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lexicon):
            return NotImplemented
        return dict(self._table) == dict(other._table)

    def __repr__(self) -> str:
        return f"Lexicon({len(self)} entries)"


def load_lexicon(source: Union[str, bytes]) -> Lexicon:
    """Parse lexicon file content.

    Raises :class:`ParseError` (with line number) for lines that do not
    have exactly two fields and :class:`ConflictError` when one surface
    form is given two different lemmas.  Repeating an identical entry is
    allowed.
    """
    table: dict[str, tuple[str, int]] = {}
    for lineno, fields in iter_records(source):
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab-separated fields, got {len(fields)}", lineno)
        surface = word_field(fields[0], "surface", lineno)
        lemma = word_field(fields[1], "lemma", lineno)
        if surface in table and table[surface][0] != lemma:
            first, first_line = table[surface]
            raise ConflictError(
                f"line {lineno}: {surface!r} maps to {first!r} (line {first_line}) and {lemma!r}",
                surface,
                (first, lemma),
                (first_line, lineno),
            )
        table.setdefault(surface, (lemma, lineno))
    return Lexicon(LexiconEntry(s, lemma) for s, (lemma, _) in table.items())


def read_lexicon(path: Union[str, Path]) -> Lexicon:
    try:
        return load_lexicon(Path(path).read_bytes())
    except ParseError as exc:
        exc.source = str(path)
        raise


def lookup(lex: Lexicon, word: str) -> Optional[str]:
    return lex.lookup(word)
