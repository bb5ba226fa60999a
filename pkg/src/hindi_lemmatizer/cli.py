"""
Command-line interface.

    hindi-lemmatizer lemmatize [FILE ...]   one record per token
    hindi-lemmatizer eval                   accuracy on a gold file
    hindi-lemmatizer validate               sanity-check rules + lexicon
    hindi-lemmatizer mine                   propose rules from word pairs

Exit status: 0 success, 1 accuracy below --min-accuracy, 2 I/O error
(missing/unreadable file, undecodable input), 3 data-file error (malformed
or conflicting rules, lexicon, gold or pairs file).
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Iterator, Optional, Sequence

from . import __version__
from .errors import ConflictError, DataFileError, DecodeError, LemmatizerError
from .evaluation import read_gold, evaluate
from .lemmatizer import GOLD_FILE, LEXICON_FILE, RULES_FILE, Lemmatizer, TokenResult, data_dir
from .lexicon import Lexicon, read_lexicon
from .miner import emit_rule_file, mine_candidates, read_pairs
from .rules import RuleSet, read_rules

EXIT_OK = 0
EXIT_THRESHOLD = 1
EXIT_IO = 2
EXIT_DATA = 3

FORMATS = ("tsv", "jsonl", "pretty")
PROG = "hindi-lemmatizer"


class CliError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


@dataclass(frozen=True)
class CliConfig:
    rules_path: Path
    lexicon_path: Path
    output_format: str
    inputs: tuple[str, ...]


def _load_data(path: Path, reader, what: str):
    try:
        return reader(path)
    except OSError as exc:
        raise CliError(f"cannot read {what} file {path}: {exc.strerror or exc}", EXIT_IO) from None
    except DecodeError as exc:
        raise CliError(f"{path}: {exc}", EXIT_DATA) from None
    except ConflictError as exc:
        raise CliError(f"{path}: {exc}", EXIT_DATA) from None
    except DataFileError as exc:
        raise CliError(str(exc), EXIT_DATA) from None


def _load_tables(config: CliConfig) -> tuple[Lexicon, RuleSet]:
    rules = _load_data(config.rules_path, read_rules, "rules")
    lexicon = _load_data(config.lexicon_path, read_lexicon, "lexicon")
    return lexicon, rules


def _open_inputs(inputs: Sequence[str]) -> Iterator[tuple[str, IO[bytes]]]:
    for name in inputs or ("-",):
        if name == "-":
            yield "<stdin>", sys.stdin.buffer
            continue
        try:
            fh = open(name, "rb")
        except OSError as exc:
            raise CliError(f"cannot read input {name}: {exc.strerror or exc}", EXIT_IO) from None
        with fh:
            yield name, fh


def _decoded_lines(name: str, fh: IO[bytes]) -> Iterator[str]:
    offset = 0
    for raw in fh:
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CliError(f"{name}: invalid UTF-8 at byte offset {offset + exc.start}", EXIT_IO) from None
        offset += len(raw)
        yield line


# --- lemmatize -------------------------------------------------------------

def token_record(tok: TokenResult) -> dict:
    if tok.result is None:
        return dict(token=tok.raw, lemma=None, suffix=None, appended=None, provenance="skipped")
    r = tok.result
    return dict(
        token=r.input,
        lemma=r.lemma,
        suffix=r.removed_suffix,
        appended=r.appended,
        provenance=str(r.provenance),
    )


def render_record(record: dict, fmt: str) -> Optional[str]:
    if fmt == "jsonl":
        return json.dumps(record, ensure_ascii=False)
    if fmt == "tsv":
        keys = ("token", "lemma", "suffix", "appended", "provenance")
        return "\t".join(record[k] if record[k] is not None else "-" for k in keys)
    if record["provenance"] == "skipped":
        return None
    change = ""
    if record["suffix"]:
        change = f"-{record['suffix']}"
        if record["appended"]:
            change += f" +{record['appended']}"
        change += ", "
    return f"{record['token']} → {record['lemma']}  ({change}{record['provenance']})"


_worker: Optional[Lemmatizer] = None


def _init_worker(rules_path: str, lexicon_path: str) -> None:
    global _worker
    _worker = Lemmatizer.from_files(rules_path, lexicon_path)


def _worker_line(line: str) -> list[dict]:
    assert _worker is not None
    return [token_record(t) for t in _worker.lemmatize_text(line)]


def _record_batches(config: CliConfig, lemmatizer: Lemmatizer, jobs: int) -> Iterator[list[dict]]:
    lines = (line for name, fh in _open_inputs(config.inputs) for line in _decoded_lines(name, fh))
    if jobs <= 1:
        for line in lines:
            yield [token_record(t) for t in lemmatizer.lemmatize_text(line)]
        return
    with ProcessPoolExecutor(
        jobs, initializer=_init_worker, initargs=(str(config.rules_path), str(config.lexicon_path))
    ) as pool:
        # map() preserves input order
        yield from pool.map(_worker_line, lines, chunksize=256)


def cmd_lemmatize(config: CliConfig, jobs: int = 1, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    lexicon, rules = _load_tables(config)
    lemmatizer = Lemmatizer(lexicon, rules)
    for batch in _record_batches(config, lemmatizer, jobs):
        for record in batch:
            line = render_record(record, config.output_format)
            if line is not None:
                out.write(line + "\n")
    return EXIT_OK


# --- eval ------------------------------------------------------------------

def cmd_eval(
    config: CliConfig,
    gold_path: Path,
    min_accuracy: Optional[Fraction] = None,
    out: Optional[IO[str]] = None,
) -> int:
    out = out or sys.stdout
    lexicon, rules = _load_tables(config)
    gold = _load_data(gold_path, read_gold, "gold")
    try:
        report = evaluate(gold, lexicon, rules)
    except (ConflictError, LemmatizerError) as exc:
        raise CliError(f"{gold_path}: {exc}", EXIT_DATA) from None
    if config.output_format == "jsonl":
        out.write(report.to_json_lines())
    elif config.output_format == "tsv":
        out.write(report.to_tsv())
    else:
        out.write(report.to_text())
    if min_accuracy is not None and report.accuracy_percent < min_accuracy:
        print(
            f"{PROG}: accuracy {report.rendered_accuracy()} is below --min-accuracy {float(min_accuracy):g}",
            file=sys.stderr,
        )
        return EXIT_THRESHOLD
    return EXIT_OK


# --- validate --------------------------------------------------------------

def shadowed_rules(rules: RuleSet) -> list[tuple]:
    """Longer rules that do exactly what a shorter rule would do anyway.

    Rule ``-कों`` +``क`` is redundant next to ``-ों``: wherever it fires,
    the shorter rule yields the same word.
    """
    found = []
    for longer in rules:
        for shorter in rules:
            if len(shorter.suffix) >= len(longer.suffix) or not longer.suffix.endswith(shorter.suffix):
                continue
            head = longer.suffix[: len(longer.suffix) - len(shorter.suffix)]
            if longer.replacement == head + shorter.replacement:
                found.append((longer, shorter))
    return found


def redundant_entries(lexicon: Lexicon, rules: RuleSet) -> list:
    bare = Lemmatizer(Lexicon(), rules)
    return [e for e in lexicon if bare(e.surface) == e.lemma]


def unstable_lemmas(lexicon: Lexicon, rules: RuleSet) -> list:
    full = Lemmatizer(lexicon, rules)
    return [e for e in lexicon if full(e.lemma) != e.lemma]


def cmd_validate(config: CliConfig, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    lexicon, rules = _load_tables(config)
    protected = sum(1 for e in lexicon if e.protected)
    out.write(f"rules:    {len(rules)} ({config.rules_path})\n")
    out.write(f"lexicon:  {len(lexicon)} entries, {protected} protected ({config.lexicon_path})\n")
    warnings = []
    for longer, shorter in shadowed_rules(rules):
        warnings.append(f"rule {longer} behaves exactly like shorter rule {shorter}")
    for e in redundant_entries(lexicon, rules):
        warnings.append(f"lexicon entry {e.surface} -> {e.lemma} is what the rules produce anyway")
    for e in unstable_lemmas(lexicon, rules):
        warnings.append(f"lemma {e.lemma} of {e.surface} is itself changed by lemmatization")
    for w in warnings:
        out.write(f"warning: {w}\n")
    out.write(f"{len(warnings)} warning(s), 0 errors\n")
    return EXIT_OK


# --- mine ------------------------------------------------------------------

def cmd_mine(pairs_path: Path, min_support: int, on_conflict: str, out: Optional[IO[str]] = None) -> int:
    out = out or sys.stdout
    pairs = _load_data(pairs_path, read_pairs, "pairs")
    out.write(emit_rule_file(mine_candidates(pairs), min_support, on_conflict=on_conflict))
    return EXIT_OK


# --- entry point -----------------------------------------------------------

def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Rule-based Hindi lemmatizer.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--rules", type=Path, metavar="PATH", help="rule file (default: shipped rules.tsv)")
    data.add_argument("--lexicon", type=Path, metavar="PATH", help="lexicon file (default: shipped lexicon.tsv)")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lemmatize", parents=[data], help="lemmatize text from files or stdin")
    p.add_argument("inputs", nargs="*", metavar="FILE", help="input files; '-' or nothing reads stdin")
    p.add_argument("--format", choices=FORMATS, default="tsv")
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes (output order is kept)")

    p = sub.add_parser("eval", parents=[data], help="evaluate against a gold file")
    p.add_argument("--gold", type=Path, metavar="PATH", help="gold file (default: shipped gold.tsv)")
    p.add_argument("--min-accuracy", type=Fraction, metavar="N", help="exit 1 if accuracy %% is below N")
    p.add_argument("--format", choices=FORMATS, default="pretty")

    sub.add_parser("validate", parents=[data], help="check rules and lexicon")

    p = sub.add_parser("mine", help="propose rules from inflected/root pairs")
    p.add_argument("--pairs", type=Path, metavar="PATH", help="pairs file (default: shipped gold.tsv)")
    p.add_argument("--min-support", type=_positive_int, default=1, metavar="N")
    p.add_argument("--on-conflict", choices=("keep", "comment"), default="keep")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    base = data_dir()
    try:
        if args.command == "mine":
            return cmd_mine(args.pairs or base / GOLD_FILE, args.min_support, args.on_conflict)
        config = CliConfig(
            rules_path=args.rules or base / RULES_FILE,
            lexicon_path=args.lexicon or base / LEXICON_FILE,
            output_format=getattr(args, "format", "pretty"),
            inputs=tuple(getattr(args, "inputs", ())),
        )
        if args.command == "lemmatize":
            return cmd_lemmatize(config, args.jobs)
        if args.command == "eval":
            return cmd_eval(config, args.gold or base / GOLD_FILE, args.min_accuracy)
        return cmd_validate(config)
    except CliError as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return exc.status
    except BrokenPipeError:
        return EXIT_OK


def run() -> None:
    sys.exit(main())
