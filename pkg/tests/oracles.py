"""Reference implementations used only by the tests.

None of these share code with the package: normalization is rebuilt from
the raw decomposition table, segmentation comes from the third-party
``regex`` module, and suffix surgery is plain index slicing.
"""

from __future__ import annotations

import unicodedata

import regex

# CompositionExclusions.txt entries for the Indic blocks (script-specific
# exclusions: nukta forms and Gurmukhi/Bengali/Oriya counterparts)
COMPOSITION_EXCLUSIONS = frozenset(
    [chr(c) for c in range(0x0958, 0x0960)]
    + [chr(c) for c in (0x09DC, 0x09DD, 0x09DF, 0x0A33, 0x0A36, 0x0A59, 0x0A5A, 0x0A5B, 0x0A5E, 0x0B5C, 0x0B5D)]
)


def _canonical_mapping(ch: str) -> str | None:
    d = unicodedata.decomposition(ch)
    if not d or d.startswith("<"):
        return None
    return "".join(chr(int(h, 16)) for h in d.split())


def _full_decompose(ch: str) -> str:
    m = _canonical_mapping(ch)
    if m is None:
        return ch
    return "".join(_full_decompose(c) for c in m)


def _compositions(block=range(0x0900, 0x0B80)) -> dict[tuple[str, str], str]:
    table = {}
    for cp in block:
        ch = chr(cp)
        m = _canonical_mapping(ch)
        if m and len(m) == 2 and ch not in COMPOSITION_EXCLUSIONS:
            table[(m[0], m[1])] = ch
    return table


_COMPOSE = _compositions()


def nfd_oracle(text: str) -> str:
    chars = list("".join(_full_decompose(c) for c in text))
    # canonical ordering: stable bubble sort of non-starter runs
    changed = True
    while changed:
        changed = False
        for i in range(len(chars) - 1):
            a, b = unicodedata.combining(chars[i]), unicodedata.combining(chars[i + 1])
            if a > b > 0:
                chars[i], chars[i + 1] = chars[i + 1], chars[i]
                changed = True
    return "".join(chars)


def nfc_oracle(text: str) -> str:
    """Canonical composition for Indic-block text (UAX #15, D117)."""
    chars = list(nfd_oracle(text))
    if not chars:
        return ""
    out = [chars[0]]
    starter = 0 if unicodedata.combining(chars[0]) == 0 else None
    last_ccc = None if starter == 0 else unicodedata.combining(chars[0])
    for ch in chars[1:]:
        ccc = unicodedata.combining(ch)
        if starter is not None:
            blocked = last_ccc is not None and (last_ccc == 0 or last_ccc >= ccc)
            composed = _COMPOSE.get((out[starter], ch))
            if composed is not None and not blocked:
                out[starter] = composed
                continue
        if ccc == 0:
            starter = len(out)
            last_ccc = None
        else:
            last_ccc = ccc
        out.append(ch)
    return "".join(out)


def graphemes_oracle(text: str) -> list[str]:
    return regex.findall(r"\X", text)


def ends_with_oracle(word: str, suffix: str) -> bool:
    if len(suffix) > len(word):
        return False
    for i in range(1, len(suffix) + 1):
        if word[-i] != suffix[-i]:
            return False
    return True


def strip_and_append_oracle(word: str, suffix: str, replacement: str) -> str:
    return word[: len(word) - len(suffix)] + replacement


def lcp_difference_oracle(inflected: str, root: str) -> tuple[str, str]:
    i = 0
    while i < len(inflected) and i < len(root) and inflected[i] == root[i]:
        i += 1
    return inflected[i:], root[i:]
