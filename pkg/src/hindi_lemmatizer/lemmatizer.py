"""
Lexicon-first, single-rule lemmatization.

1. An exact lexicon hit wins outright.
2. Otherwise the first rule in match order is applied, once.
3. Otherwise the word passes through unchanged.
"""

from __future__ import annotations

import enum
import os
import string
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Optional, Union

from .devanagari import has_devanagari_letter, normalize, segment, strip_and_append
from .errors import EmptyInputError, TokenizationError
from .lexicon import Lexicon, read_lexicon
from .rules import RuleSet, read_rules

DATA_ENV_VAR = "HINDI_LEMMATIZER_DATA"
RULES_FILE = "rules.tsv"
LEXICON_FILE = "lexicon.tsv"
GOLD_FILE = "gold.tsv"
PAIRS_FILE = "pairs.tsv"

PUNCTUATION = frozenset(string.punctuation + "।॥“”‘’«»…–\u2014")


class Provenance(str, enum.Enum):
    LEXICON = "lexicon"
    RULE = "rule"
    PASSTHROUGH = "passthrough"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class LemmaResult:
    input: str
    lemma: str
    provenance: Provenance
    removed_suffix: Optional[str] = None
    appended: Optional[str] = None

    def __post_init__(self) -> None:
        if self.provenance is Provenance.RULE:
            if not self.removed_suffix:
                raise ValueError("rule results need a removed suffix")
        elif self.removed_suffix is not None or self.appended is not None:
            raise ValueError(f"{self.provenance} results carry no suffix or appended text")
        if self.provenance is Provenance.PASSTHROUGH and self.lemma != self.input:
            raise ValueError("passthrough must leave the word unchanged")


@dataclass(frozen=True)
class TokenResult:
    """One whitespace-delimited token of running text.

    ``token`` is the token with edge punctuation removed; ``leading`` and
    ``trailing`` hold what was removed.  ``result`` is None for skipped
    tokens (no Devanagari letter left).
    """

    raw: str
    token: str
    leading: str
    trailing: str
    result: Optional[LemmaResult]

    @property
    def skipped(self) -> bool:
        return self.result is None


def _single_token(word: Union[str, bytes]) -> str:
    text = normalize(word)
    if not text:
        raise EmptyInputError("empty input word")
    if any(ch.isspace() for ch in text):
        raise TokenizationError(f"expected a single token, got {text!r}")
    return text


def _lemmatize_normalized(word: str, lex: Lexicon, rs: RuleSet) -> LemmaResult:
    lemma = lex.lookup(word)
    if lemma is not None:
        return LemmaResult(word, lemma, Provenance.LEXICON)
    matches = rs.match(segment(word))
    if matches:
        rule = matches[0]
        return LemmaResult(
            word,
            strip_and_append(word, rule.suffix, rule.replacement),
            Provenance.RULE,
            removed_suffix=rule.suffix,
            appended=rule.replacement or None,
        )
    return LemmaResult(word, word, Provenance.PASSTHROUGH)


def lemmatize(word: Union[str, bytes], lex: Lexicon, rs: RuleSet) -> LemmaResult:
    """Lemmatize one raw word.

    Raises :class:`EmptyInputError` for empty or blank input and
    :class:`TokenizationError` when the input holds more than one token.
    """
    return _lemmatize_normalized(_single_token(word), lex, rs)


def split_punctuation(token: str) -> tuple[str, str, str]:
    start, end = 0, len(token)
    while start < end and token[start] in PUNCTUATION:
        start += 1
    while end > start and token[end - 1] in PUNCTUATION:
        end -= 1
    return token[:start], token[start:end], token[end:]


def lemmatize_text(text: Union[str, bytes], lex: Lexicon, rs: RuleSet) -> list[TokenResult]:
    return Lemmatizer(lex, rs).lemmatize_text(text)


class Lemmatizer:
    """A lexicon and rule set bundled together, with a lookup cache."""

    def __init__(self, lexicon: Lexicon, rules: RuleSet, cache_size: int = 65536):
        self.lexicon = lexicon
        self.rules = rules
        self._cached = lru_cache(maxsize=cache_size)(self._lemmatize)

    def _lemmatize(self, word: str) -> LemmaResult:
        return _lemmatize_normalized(word, self.lexicon, self.rules)

    def lemmatize(self, word: Union[str, bytes]) -> LemmaResult:
        return self._cached(_single_token(word))

    def __call__(self, word: Union[str, bytes]) -> str:
        return self.lemmatize(word).lemma

    def lemmatize_text(self, text: Union[str, bytes]) -> list[TokenResult]:
        """Split on whitespace and lemmatize every token that has Devanagari letters."""
        out = []
        for raw in normalize(text).split():
            leading, token, trailing = split_punctuation(raw)
            if not has_devanagari_letter(token):
                out.append(TokenResult(raw, raw, "", "", None))
                continue
            out.append(TokenResult(raw, token, leading, trailing, self._cached(token)))
        return out

    @classmethod
    def from_files(cls, rules_path: Union[str, Path], lexicon_path: Union[str, Path]) -> "Lemmatizer":
        return cls(read_lexicon(lexicon_path), read_rules(rules_path))

    @classmethod
    def default(cls) -> "Lemmatizer":
        d = data_dir()
        return cls.from_files(d / RULES_FILE, d / LEXICON_FILE)


def data_dir() -> Path:
    """Directory holding the shipped data files.

    ``$HINDI_LEMMATIZER_DATA`` overrides the copy bundled with the package.
    """
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return Path(override)
    return Path(str(resources.files(__package__) / "data"))
