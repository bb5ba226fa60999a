"""
Propose suffix rules from (inflected, root) pairs.

Each pair is differenced against its longest common codepoint prefix: what
is left of the inflected form is the suffix, what is left of the root is
the replacement.  Identical candidates are pooled and counted.  The output
is a starting point for a curator, not a finished rule file.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Union

from .errors import ParseError
from .rules import DEFAULT_MIN_STEM, DEFAULT_PRIORITY
from .tsv import iter_records, word_field

MAX_EXAMPLES = 5


@dataclass(frozen=True)
class SuffixCandidate:
    suffix: str
    replacement: str
    support: int
    example_pairs: tuple[tuple[str, str], ...] = ()
    # the pair shared no prefix at all, so the "suffix" is the whole word
    whole_word: bool = False


def difference(inflected: str, root: str) -> tuple[str, str]:
    """Split a pair at its longest common prefix.

    >>> difference("लडकोँ", "लडका")
    ('ोँ', 'ा')
    """
    n = len(os.path.commonprefix([inflected, root]))
    return inflected[n:], root[n:]


def mine_candidates(pairs: Iterable[tuple[str, str]]) -> list[SuffixCandidate]:
    support: dict[tuple[str, str], int] = defaultdict(int)
    examples: dict[tuple[str, str], list[tuple[str, str]]] = defaultdict(list)
    whole: set[tuple[str, str]] = set()
    for inflected, root in pairs:
        if inflected == root:
            continue
        key = difference(inflected, root)
        support[key] += 1
        if len(examples[key]) < MAX_EXAMPLES:
            examples[key].append((inflected, root))
        if key[0] == inflected:
            whole.add(key)
    candidates = [
        SuffixCandidate(s, r, n, tuple(examples[(s, r)]), (s, r) in whole) for (s, r), n in support.items()
    ]
    candidates.sort(key=lambda c: (-c.support, -len(c.suffix), c.suffix, c.replacement))
    return candidates


def emit_rule_file(
    candidates: Iterable[SuffixCandidate],
    min_support: int = 1,
    *,
    on_conflict: str = "keep",
) -> str:
    """Render candidates as rule-file text.

    Candidates sharing a suffix are conflicts.  With ``on_conflict="keep"``
    every one is written and a warning comment flags the clash (the result
    will not load until a curator resolves it).  With ``"comment"`` the
    best-supported candidate stays active and the rest are commented out.
    """
    if min_support < 1:
        raise ValueError("min_support must be >= 1")
    if on_conflict not in ("keep", "comment"):
        raise ValueError(f"on_conflict must be 'keep' or 'comment', not {on_conflict!r}")

    kept = [c for c in candidates if c.support >= min_support]
    groups: dict[str, list[SuffixCandidate]] = defaultdict(list)
    for c in kept:
        if c.suffix:
            groups[c.suffix].append(c)

    lines = [f"# mined rule candidates, min_support={min_support}"]
    for c in kept:
        if not c.suffix:
            lines.append(f"# skipped: pure addition of {c.replacement!r} (support={c.support})")
    for suffix in sorted(groups, key=lambda s: (-len(s), s)):
        group = sorted(groups[suffix], key=lambda c: (-c.support, c.replacement))
        if len(group) > 1:
            options = ", ".join(f"{c.replacement or '(none)'} x{c.support}" for c in group)
            lines.append(f"# WARNING: conflicting replacements for suffix {suffix}: {options}")
        for i, c in enumerate(group):
            note = f"# support={c.support}"
            if c.whole_word:
                note += " whole-word"
            if c.example_pairs:
                note += " e.g. " + ", ".join(f"{a}>{b}" for a, b in c.example_pairs)
            line = f"{c.suffix}\t{c.replacement}\t{DEFAULT_MIN_STEM}\t{DEFAULT_PRIORITY}\t{note}"
            if i > 0 and on_conflict == "comment":
                line = "# " + line
            lines.append(line)
    return "\n".join(lines) + "\n"


def load_pairs(source: Union[str, bytes]) -> list[tuple[str, str]]:
    pairs = []
    for lineno, fields in iter_records(source):
        if len(fields) != 2:
            raise ParseError(f"expected 2 tab-separated fields, got {len(fields)}", lineno)
        pairs.append((word_field(fields[0], "inflected", lineno), word_field(fields[1], "root", lineno)))
    return pairs


def read_pairs(path: Union[str, Path]) -> list[tuple[str, str]]:
    try:
        return load_pairs(Path(path).read_bytes())
    except ParseError as exc:
        exc.source = str(path)
        raise
