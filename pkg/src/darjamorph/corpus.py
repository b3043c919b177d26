"""Corpus ingestion, term-frequency model and POS-grouped labeling tables."""

from __future__ import annotations

import csv
import os
from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .lexicon import VariantIndex
from .morphology import Analysis, MorphAutomaton, analyze_token
from .normalizer import RawMessage, Token, normalize_message

LABEL_HEADER = [
    "message_id", "token_index", "surface", "normalized", "exaggerated", "pos", "stem",
    "canonical_stem", "gloss_fr", "subject_prefix", "plural_suffix", "cod", "coi",
    "possessive", "feminine", "negation", "mood", "candidate_count",
]
FREQUENCY_HEADER = ["term", "count"]

UNRECOGNIZED = "unrecognized"
GROUPS = ("verb", "noun", "adjective", "particle", UNRECOGNIZED)
GROUP_FILES = {
    "verb": "verbs.csv",
    "noun": "nouns.csv",
    "adjective": "adjectives.csv",
    "particle": "particles.csv",
    UNRECOGNIZED: "unrecognized.csv",
}


class CorpusError(OSError):
    pass


def read_messages(data: bytes, source: str = "<bytes>") -> list[RawMessage]:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{source}: invalid UTF-8 at byte offset {exc.start}") from None
    if text.startswith("\ufeff"):
        text = text[1:]
    if not text:
        return []
    if text.endswith("\n"):
        text = text[:-1]
    return [RawMessage(i, line.rstrip("\r")) for i, line in enumerate(text.split("\n"))]


def ingest_corpus(path) -> list[RawMessage]:
    """One message per line; the zero-based line number is the message id."""
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise CorpusError(f"{path}: cannot read corpus ({exc.strerror or exc})") from None
    return read_messages(data, str(path))


def tokenize_corpus(messages: Sequence[RawMessage]) -> list[Token]:
    return [tok for msg in messages for tok in normalize_message(msg)]


@dataclass(frozen=True)
class TermFrequencyModel:
    counts: Counter
    total_tokens: int

    def most_common(self) -> list[tuple[str, int]]:
        """Terms by count descending, ties broken alphabetically."""
        return sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))


def build_term_frequency_model(messages: Sequence[RawMessage]) -> TermFrequencyModel:
    counts = Counter(tok.normalized for tok in tokenize_corpus(messages))
    return TermFrequencyModel(counts, sum(counts.values()))


@dataclass(frozen=True)
class LabelRow:
    token: Token
    analysis: Optional[Analysis]
    candidate_count: int

    @property
    def group(self) -> str:
        return self.analysis.pos if self.analysis else UNRECOGNIZED


@dataclass(frozen=True)
class LabelTable:
    rows: tuple[LabelRow, ...]
    # every analysis per row, only kept when asked for
    all_analyses: Optional[tuple[tuple[Analysis, ...], ...]] = None

    def group(self, name: str) -> list[LabelRow]:
        return [r for r in self.rows if r.group == name]

    @property
    def grouping(self) -> dict[str, list[LabelRow]]:
        return {g: self.group(g) for g in GROUPS}


def analyze_corpus(messages: Sequence[RawMessage], index: VariantIndex,
                   automaton: MorphAutomaton, keep_all: bool = False) -> LabelTable:
    rows = []
    everything = []
    ordered = sorted(messages, key=lambda m: m.message_id)
    for token in tokenize_corpus(ordered):
        analyses = analyze_token(token, index, automaton)
        rows.append(LabelRow(token, analyses[0] if analyses else None, len(analyses)))
        everything.append(tuple(analyses))
    return LabelTable(tuple(rows), tuple(everything) if keep_all else None)


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def label_record(token: Token, a: Optional[Analysis], candidate_count: int) -> list[str]:
    base = [token.message_id, token.token_index, token.surface]
    if a is None:
        rest = [token.normalized, token.exaggerated] + [None] * 12 + [candidate_count]
    else:
        rest = [a.normalized, token.exaggerated, a.pos, a.stem, a.canonical_stem, a.gloss_fr,
                a.subject_prefix, a.plural_suffix, a.cod, a.coi, a.possessive,
                a.feminine, a.negation, a.mood, candidate_count]
    return [_fmt(v) for v in base + rest]


def _write_csv(path: Path, header, records):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(header)
            writer.writerows(records)
    except OSError as exc:
        raise CorpusError(f"{path}: cannot write ({exc.strerror or exc})") from None


def emit_label_tables(table: LabelTable, out_dir) -> list[Path]:
    """Write one CSV per group; returns the written paths in group order."""
    out = Path(out_dir)
    try:
        os.makedirs(out, exist_ok=True)
    except OSError as exc:
        raise CorpusError(f"{out}: cannot create directory ({exc.strerror or exc})") from None
    written = []
    for name in GROUPS:
        path = out / GROUP_FILES[name]
        records = [label_record(r.token, r.analysis, r.candidate_count) for r in table.group(name)]
        _write_csv(path, LABEL_HEADER, records)
        written.append(path)
    return written


def emit_all_analyses(table: LabelTable, path) -> Path:
    """Every ranked analysis of every token, with its rank, in one CSV."""
    if table.all_analyses is None:
        raise ValueError("table was built without keep_all=True")
    records = []
    for row, analyses in zip(table.rows, table.all_analyses):
        for rank, a in enumerate(analyses):
            records.append([str(rank)] + label_record(row.token, a, row.candidate_count))
    _write_csv(Path(path), ["rank"] + LABEL_HEADER, records)
    return Path(path)


def write_frequency_csv(model: TermFrequencyModel, path) -> Path:
    _write_csv(Path(path), FREQUENCY_HEADER, [[t, str(c)] for t, c in model.most_common()])
    return Path(path)
