import sys
import unicodedata
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from hindi_lemmatizer.evaluation import read_gold
from hindi_lemmatizer.lemmatizer import GOLD_FILE, LEXICON_FILE, RULES_FILE, Lemmatizer, data_dir

DATA = data_dir()

# assigned Devanagari codepoints (per the running Python's UCD) plus a few
# outsiders that must not break anything
DEVANAGARI = [chr(c) for c in range(0x0900, 0x0980) if unicodedata.category(chr(c)) != "Cn"]
CONSONANTS = [chr(c) for c in range(0x0915, 0x093A)]
MATRAS = [chr(c) for c in range(0x093E, 0x094D)]
INDIC_ALPHABET = DEVANAGARI + ["\u200c", "\u200d", "a", "b", "1"]

devanagari_text = st.text(alphabet=st.sampled_from(INDIC_ALPHABET), min_size=1, max_size=12)


@pytest.fixture(scope="session")
def shipped():
    return Lemmatizer.from_files(DATA / RULES_FILE, DATA / LEXICON_FILE)


@pytest.fixture(scope="session")
def shipped_gold():
    return read_gold(DATA / GOLD_FILE)


ACCEPTANCE = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(ACCEPTANCE, [])


def pytest_terminal_summary(terminalreporter):
    lines = terminalreporter.config.stash.get(ACCEPTANCE, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
