"""
Gold-set evaluation.

accuracy = correct / total * 100, kept as an exact :class:`Fraction` and
only rounded when rendered.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import ConflictError, EmptyGoldError, ParseError
from .lemmatizer import Lemmatizer
from .lexicon import Lexicon
from .rules import RuleSet
from .tsv import iter_records, word_field


@dataclass(frozen=True)
class GoldPair:
    word: str
    expected_lemma: str
    line: int | None = field(default=None, compare=False)


@dataclass(frozen=True)
class EvalError:
    word: str
    expected: str
    actual: str
    provenance: str
    line: int | None = None


@dataclass(frozen=True)
class EvalReport:
    total: int
    correct: int
    errors: tuple[EvalError, ...] = ()

    def __post_init__(self) -> None:
        if not 0 <= self.correct <= self.total:
            raise ValueError(f"correct={self.correct} outside 0..{self.total}")

    @property
    def incorrect(self) -> int:
        return self.total - self.correct

    @property
    def accuracy_percent(self) -> Fraction:
        if self.total == 0:
            return Fraction(0)
        return Fraction(self.correct * 100, self.total)

    def rendered_accuracy(self, places: int = 1) -> str:
        q = Decimal(1).scaleb(-places)
        acc = self.accuracy_percent
        value = (Decimal(acc.numerator) / Decimal(acc.denominator)).quantize(q, rounding=ROUND_HALF_UP)
        return f"{value}%"

    def __add__(self, other: "EvalReport") -> "EvalReport":
        return EvalReport(self.total + other.total, self.correct + other.correct, self.errors + other.errors)

    def to_text(self) -> str:
        lines = [
            f"total:    {self.total}",
            f"correct:  {self.correct}",
            f"wrong:    {self.incorrect}",
            f"accuracy: {self.rendered_accuracy()}",
        ]
        if self.errors:
            lines.append("")
            lines.append("errors (word, expected, actual, provenance):")
            for e in self.errors:
                lines.append(f"  {e.word}\t{e.expected}\t{e.actual}\t{e.provenance}")
        return "\n".join(lines) + "\n"

    def to_json_lines(self) -> str:
        records = [dict(type="error", **asdict(e)) for e in self.errors]
        records.append(
            dict(
                type="summary",
                total=self.total,
                correct=self.correct,
                accuracy=self.rendered_accuracy(),
                accuracy_exact=str(self.accuracy_percent),
            )
        )
        return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)

    def to_tsv(self) -> str:
        out = [f"# total={self.total}\tcorrect={self.correct}\taccuracy={self.rendered_accuracy()}"]
        out += [f"{e.word}\t{e.expected}\t{e.actual}\t{e.provenance}" for e in self.errors]
        return "\n".join(out) + "\n"


def load_gold(source: Union[str, bytes]) -> list[GoldPair]:
    pairs = []
    for lineno, fields in iter_records(source):
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab-separated fields, got {len(fields)}", lineno)
        pairs.append(
            GoldPair(word_field(fields[0], "word", lineno), word_field(fields[1], "lemma", lineno), lineno)
        )
    return pairs


def read_gold(path: Union[str, Path]) -> list[GoldPair]:
    try:
        return load_gold(Path(path).read_bytes())
    except ParseError as exc:
        exc.source = str(path)
        raise


def _check_consistent(gold: Sequence[GoldPair]) -> None:
    seen: dict[str, GoldPair] = {}
    for pair in gold:
        first = seen.setdefault(pair.word, pair)
        if first.expected_lemma != pair.expected_lemma:
            raise ConflictError(
                f"gold word {pair.word!r} expects both {first.expected_lemma!r} and {pair.expected_lemma!r}",
                pair.word,
                (first.expected_lemma, pair.expected_lemma),
                tuple(p.line for p in (first, pair) if p.line is not None),
            )


def evaluate(gold: Iterable[GoldPair], lex: Lexicon, rs: RuleSet) -> EvalReport:
    """Lemmatize every gold word and compare by exact string equality."""
    gold = list(gold)
    if not gold:
        raise EmptyGoldError("gold set is empty")
    _check_consistent(gold)
    lemmatizer = Lemmatizer(lex, rs)
    correct = 0
    errors = []
    for pair in gold:
        result = lemmatizer.lemmatize(pair.word)
        if result.lemma == pair.expected_lemma:
            correct += 1
        else:
            errors.append(EvalError(pair.word, pair.expected_lemma, result.lemma, str(result.provenance), pair.line))
    return EvalReport(len(gold), correct, tuple(errors))
