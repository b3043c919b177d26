"""Batch commands: ``expand``, ``freq`` and ``analyze``.

Data goes to files only; standard output carries a short summary and
standard error one line per problem.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .corpus import (
    GROUP_FILES,
    GROUPS,
    CorpusError,
    analyze_corpus,
    build_term_frequency_model,
    emit_all_analyses,
    emit_label_tables,
    ingest_corpus,
    write_frequency_csv,
)
from .lexicon import (
    DEFAULT_CAP,
    DEFAULT_RULES,
    DEFAULT_STABLE_UNITS,
    LexiconError,
    RuleConfigError,
    build_variant_index,
    load_seed_lexicon,
    parse_lexicon_file,
    read_rules,
    write_expanded_lexicon,
)
from .morphology import AffixInventory, build_automaton


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    lexicon_path: Optional[Path] = None
    rules_path: Optional[Path] = None
    corpus_path: Optional[Path] = None
    out: Optional[Path] = None
    variant_cap: int = DEFAULT_CAP
    short_stem_vowel_expansion: bool = False
    noun_plural_flag: bool = False
    verbosity: int = 0

    def validate(self, need_lexicon: bool, need_corpus: bool):
        if self.variant_cap < 1:
            raise UsageError(f"--cap must be at least 1, got {self.variant_cap}")
        if self.out is None:
            raise UsageError("--out is required")
        for label, path, needed in (("lexicon", self.lexicon_path, False),
                                    ("rules", self.rules_path, False),
                                    ("corpus", self.corpus_path, need_corpus)):
            if path is None:
                if needed:
                    raise UsageError(f"--{label} is required")
                continue
            if not path.is_file():
                raise UsageError(f"{label} file not found: {path}")


def _load_index(cfg: RunConfig):
    entries = parse_lexicon_file(cfg.lexicon_path) if cfg.lexicon_path else load_seed_lexicon()
    rules, stable = DEFAULT_RULES, DEFAULT_STABLE_UNITS
    if cfg.rules_path:
        rules, stable = read_rules(cfg.rules_path)
        if not rules:
            raise RuleConfigError(f"{cfg.rules_path}: no substitution rules defined")
    index = build_variant_index(entries, rules, cfg.variant_cap, stable_units=stable,
                                short_stem_vowels=cfg.short_stem_vowel_expansion)
    return entries, index


def cmd_expand(cfg: RunConfig) -> int:
    cfg.validate(need_lexicon=True, need_corpus=False)
    entries, index = _load_index(cfg)
    rows = write_expanded_lexicon(index, cfg.out)
    print(f"entries: {len(entries)}")
    print(f"variants: {rows}")
    print(f"truncated: {len(index.truncated)}")
    return 0


def cmd_freq(cfg: RunConfig) -> int:
    cfg.validate(need_lexicon=False, need_corpus=True)
    model = build_term_frequency_model(ingest_corpus(cfg.corpus_path))
    write_frequency_csv(model, cfg.out)
    print(f"terms: {len(model.counts)}")
    print(f"tokens: {model.total_tokens}")
    return 0


def cmd_analyze(cfg: RunConfig) -> int:
    cfg.validate(need_lexicon=True, need_corpus=True)
    _, index = _load_index(cfg)
    automaton = build_automaton(AffixInventory.default(noun_plural=cfg.noun_plural_flag))
    messages = ingest_corpus(cfg.corpus_path)
    table = analyze_corpus(messages, index, automaton, keep_all=cfg.verbosity > 0)
    emit_label_tables(table, cfg.out)
    if cfg.verbosity > 0:
        emit_all_analyses(table, Path(cfg.out) / "all_analyses.csv")
    for name in GROUPS:
        print(f"{GROUP_FILES[name]}: {len(table.group(name))}")
    return 0


COMMANDS = {"expand": cmd_expand, "freq": cmd_freq, "analyze": cmd_analyze}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="darjamorph",
                                     description="Algerian dialect lexicon expansion and morphological labeling.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (("expand", "write every spelling variant of the lexicon"),
                            ("freq", "term frequencies of a corpus"),
                            ("analyze", "label every corpus token, grouped by part of speech")):
        p = sub.add_parser(name, help=help_text)
        if name != "freq":
            p.add_argument("--lexicon", type=Path, help="lexicon CSV (default: bundled seed lexicon)")
            p.add_argument("--rules", type=Path, help="phonological rule file (default: built-in rules)")
            p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="max variants per entry")
            p.add_argument("--short-stem-vowels", action="store_true",
                           help="also expand a/e and o/ou in stems of 3 letters or fewer")
        if name != "expand":
            p.add_argument("--corpus", type=Path, required=True, help="one message per line")
        if name == "analyze":
            p.add_argument("--noun-plural", action="store_true", help="accept noun plural suffixes in/yn")
        out_help = "output directory" if name == "analyze" else "output CSV file"
        p.add_argument("--out", type=Path, required=True, help=out_help)
        p.add_argument("-v", "--verbose", action="count", default=0)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        lexicon_path=getattr(args, "lexicon", None),
        rules_path=getattr(args, "rules", None),
        corpus_path=getattr(args, "corpus", None),
        out=args.out,
        variant_cap=getattr(args, "cap", DEFAULT_CAP),
        short_stem_vowel_expansion=getattr(args, "short_stem_vowels", False),
        noun_plural_flag=getattr(args, "noun_plural", False),
        verbosity=args.verbose,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        return COMMANDS[args.command](cfg)
    except LexiconError as exc:
        source = cfg.lexicon_path or "seed lexicon"
        for err in exc.errors:
            print(f"error: {source}: {err}", file=sys.stderr)
    except (UsageError, RuleConfigError, CorpusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"error: {exc.filename or ''}: {exc.strerror or exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
