"""
Suffix stripping rules with deterministic conflict resolution.

A rule strips ``suffix`` from the end of a word and appends
``replacement``.  When several rules match, the longest suffix (in
codepoints) wins, then the lower ``priority`` value, then the
lexicographically smaller suffix.

File format (UTF-8 TSV)::

    suffix<TAB>replacement<TAB>min_stem_clusters<TAB>priority

The last two fields are optional and default to 1 and 100.  ``#`` comment
lines and blank lines are ignored; a field starting with ``#`` ends the
line.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Union

from .devanagari import GraphemeWord, cluster_count, is_normalized, strip_and_append
from .errors import ConflictError, ContractError, ParseError, ValidationError
from .tsv import iter_records, word_field

DEFAULT_MIN_STEM = 1
DEFAULT_PRIORITY = 100


@dataclass(frozen=True)
class SuffixRule:
    suffix: str
    replacement: str = ""
    min_stem_clusters: int = DEFAULT_MIN_STEM
    priority: int = DEFAULT_PRIORITY

    def __post_init__(self) -> None:
        if not self.suffix:
            raise ValueError("rule suffix must be non-empty")
        if not is_normalized(self.suffix) or not is_normalized(self.replacement):
            raise ValueError(f"rule {self.suffix!r} -> {self.replacement!r} is not NFC-normalized")
        if self.min_stem_clusters < 1:
            raise ValueError("min_stem_clusters must be at least 1")

    @property
    def sort_key(self) -> tuple[int, int, str]:
        return (-len(self.suffix), self.priority, self.suffix)

    def stem_of(self, word: str) -> str | None:
        """The part of ``word`` left after stripping, or None if the rule does not fire."""
        if not word.endswith(self.suffix):
            return None
        stem = word[: len(word) - len(self.suffix)]
        if not stem or cluster_count(stem) < self.min_stem_clusters:
            return None
        return stem

    def to_line(self) -> str:
        return f"{self.suffix}\t{self.replacement}\t{self.min_stem_clusters}\t{self.priority}"

    def __str__(self) -> str:
        return f"-{self.suffix}+{self.replacement}" if self.replacement else f"-{self.suffix}"


class RuleSet:
    """Immutable collection of rules kept in match order."""

    def __init__(self, rules: Iterable[SuffixRule] = ()):
        by_suffix: dict[str, SuffixRule] = {}
        for rule in rules:
            if rule.suffix in by_suffix:
                raise ConflictError(
                    f"duplicate rule suffix {rule.suffix!r}",
                    rule.suffix,
                    (by_suffix[rule.suffix].replacement, rule.replacement),
                )
            by_suffix[rule.suffix] = rule
        self._by_suffix = by_suffix
        self._rules = tuple(sorted(by_suffix.values(), key=lambda r: r.sort_key))
        self._lengths = sorted({len(s) for s in by_suffix}, reverse=True)

    @property
    def rules(self) -> tuple[SuffixRule, ...]:
        return self._rules

    def get(self, suffix: str) -> SuffixRule | None:
        return self._by_suffix.get(suffix)

    def match(self, word: Union[GraphemeWord, str]) -> list[SuffixRule]:
        text = word.text if isinstance(word, GraphemeWord) else word
        found = []
        for n in self._lengths:
            if n >= len(text):
                continue
            rule = self._by_suffix.get(text[-n:])
            if rule is not None and rule.stem_of(text) is not None:
                found.append(rule)
        found.sort(key=lambda r: r.sort_key)
        return found

    def __iter__(self) -> Iterator[SuffixRule]:
        return iter(self._rules)

    def __len__(self) -> int:
        return len(self._rules)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RuleSet):
            return NotImplemented
        return self._rules == other._rules

    def __repr__(self) -> str:
        return f"RuleSet({len(self)} rules)"


def _int_field(value: str, name: str, lineno: int, default: int) -> int:
    value = value.strip()
    if not value:
        return default
    try:
        return int(value)
    except ValueError:
        raise ValidationError(f"{name} must be an integer, got {value!r}", lineno) from None


def load_rules(source: Union[str, bytes]) -> RuleSet:
    """Parse rule file content into a :class:`RuleSet`.

    >>> [str(r) for r in load_rules("ोँ\\tा\\t2\\t10")]
    ['-ोँ+ा']
    """
    rules: list[SuffixRule] = []
    seen: dict[str, tuple[int, str]] = {}
    for lineno, fields in iter_records(source):
        if not 2 <= len(fields) <= 4:
            raise ParseError(f"expected 2 to 4 tab-separated fields, got {len(fields)}", lineno)
        if not fields[0].strip():
            raise ValidationError("empty suffix field", lineno)
        suffix = word_field(fields[0], "suffix", lineno)
        replacement = word_field(fields[1], "replacement", lineno, allow_empty=True)
        min_stem = _int_field(fields[2] if len(fields) > 2 else "", "min_stem_clusters", lineno, DEFAULT_MIN_STEM)
        priority = _int_field(fields[3] if len(fields) > 3 else "", "priority", lineno, DEFAULT_PRIORITY)
        if min_stem < 1:
            raise ValidationError(f"min_stem_clusters must be >= 1, got {min_stem}", lineno)
        if suffix in seen:
            first_line, first_replacement = seen[suffix]
            raise ConflictError(
                f"line {lineno}: duplicate suffix {suffix!r} (first defined on line {first_line})",
                suffix,
                (first_replacement, replacement),
                (first_line, lineno),
            )
        seen[suffix] = (lineno, replacement)
        rules.append(SuffixRule(suffix, replacement, min_stem, priority))
    return RuleSet(rules)


def read_rules(path: Union[str, Path]) -> RuleSet:
    try:
        return load_rules(Path(path).read_bytes())
    except ParseError as exc:
        exc.source = str(path)
        raise


def match_rules(rs: RuleSet, word: Union[GraphemeWord, str]) -> list[SuffixRule]:
    """Every rule that fires on ``word``, in match order."""
    return rs.match(word)


def apply_rule(rule: SuffixRule, word: Union[GraphemeWord, str]) -> str:
    text = word.text if isinstance(word, GraphemeWord) else word
    if rule.stem_of(text) is None:
        raise ContractError(f"rule {rule} does not apply to {text!r}")
    return strip_and_append(text, rule.suffix, rule.replacement)
