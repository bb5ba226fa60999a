"""Rule-based Hindi lemmatizer: lexicon lookup first, then longest-suffix stripping."""

from .devanagari import GraphemeWord, ends_with_suffix, normalize, segment, strip_and_append
from .errors import (
    ConflictError,
    ContractError,
    DecodeError,
    EmptyGoldError,
    EmptyInputError,
    EmptyStemError,
    EmptyWordError,
    LemmatizerError,
    ParseError,
    TokenizationError,
    ValidationError,
)
from .evaluation import EvalReport, GoldPair, evaluate, load_gold
from .lemmatizer import LemmaResult, Lemmatizer, Provenance, TokenResult, lemmatize, lemmatize_text
from .lexicon import Lexicon, LexiconEntry, load_lexicon, lookup
from .miner import SuffixCandidate, emit_rule_file, mine_candidates
from .rules import RuleSet, SuffixRule, apply_rule, load_rules, match_rules

__version__ = "0.1.0"

__all__ = [
    "ConflictError",
    "ContractError",
    "DecodeError",
    "EmptyGoldError",
    "EmptyInputError",
    "EmptyStemError",
    "EmptyWordError",
    "EvalReport",
    "GoldPair",
    "GraphemeWord",
    "LemmaResult",
    "Lemmatizer",
    "LemmatizerError",
    "Lexicon",
    "LexiconEntry",
    "ParseError",
    "Provenance",
    "RuleSet",
    "SuffixCandidate",
    "SuffixRule",
    "TokenResult",
    "TokenizationError",
    "ValidationError",
    "apply_rule",
    "emit_rule_file",
    "ends_with_suffix",
    "evaluate",
    "lemmatize",
    "lemmatize_text",
    "load_gold",
    "load_lexicon",
    "load_rules",
    "lookup",
    "match_rules",
    "mine_candidates",
    "normalize",
    "segment",
    "strip_and_append",
]
