"""Stem lexicon: loading, phonological variant expansion and variant lookup.

Algerian dialect written in Latin script has no fixed spelling. The same
stem shows up as ``oq3od``, ``ok3oud`` or ``ouq3od`` depending on the
writer, so every lexicon stem is expanded into its plausible spellings and
each spelling is indexed back to the canonical entry.
"""

from __future__ import annotations

import csv
import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from importlib import resources
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple, Sequence

POS_VALUES = ("verb", "noun", "adjective", "particle")
POLARITY_VALUES = ("positive", "negative", "neutral", "unspecified")

LEXICON_HEADER = ["stem", "pos", "gloss_fr", "polarity", "irregular"]
EXPANDED_HEADER = ["variant", "stem", "pos", "gloss_fr", "polarity"]

DEFAULT_CAP = 64
SHORT_STEM_LENGTH = 3

_STEM_RE = re.compile(r"[a-z0-9']+")
_VOWEL_RE = re.compile(r"[aeiou]+")


class LexiconError(ValueError):
    """Raised when a lexicon file is malformed.

    ``errors`` holds one message per offending row so callers can report
    every problem at once instead of stopping at the first.
    """

    def __init__(self, errors: Sequence[str]):
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class RuleConfigError(ValueError):
    pass


@dataclass(frozen=True)
class LexiconEntry:
    stem: str
    pos: str
    gloss_fr: str = ""
    polarity: str = "unspecified"
    irregular: bool = False

    def __post_init__(self):
        if not self.stem or not _STEM_RE.fullmatch(self.stem):
            raise ValueError(f"invalid stem {self.stem!r}: expected [a-z0-9']+")
        if self.pos not in POS_VALUES:
            raise ValueError(f"unknown pos {self.pos!r}")
        if self.polarity not in POLARITY_VALUES:
            raise ValueError(f"unknown polarity {self.polarity!r}")

    def __str__(self):
        return f"{self.stem}/{self.pos}"


@dataclass(frozen=True)
class PhonoRule:
    """A class of mutually substitutable spellings, e.g. ``q|k|9``."""

    class_id: str
    variants: tuple[str, ...]
    enabled: bool = True

    def __post_init__(self):
        object.__setattr__(self, "variants", tuple(self.variants))
        if len(self.variants) < 2:
            raise RuleConfigError(f"rule {self.class_id!r} needs at least two variants")
        if len(set(self.variants)) != len(self.variants) or not all(self.variants):
            raise RuleConfigError(f"rule {self.class_id!r} has empty or repeated variants")

    @property
    def is_vowel_class(self) -> bool:
        return all(_VOWEL_RE.fullmatch(v) for v in self.variants)


DEFAULT_RULES: tuple[PhonoRule, ...] = (
    PhonoRule("qaf", ("q", "k", "9")),
    PhonoRule("ha", ("h", "7")),
    PhonoRule("chin", ("ch", "sh")),
    PhonoRule("damma", ("o", "ou")),
    PhonoRule("fatha", ("a", "e")),
    PhonoRule("ain", ("3", "aa")),
    PhonoRule("jim", ("j", "dj")),
    PhonoRule("waw", ("w", "oua")),
)

# Multigraphs that are segmented as one unit but never substituted.
DEFAULT_STABLE_UNITS: tuple[str, ...] = ("gh", "kh", "y")


def parse_rules(text: str) -> tuple[list[PhonoRule], tuple[str, ...]]:
    """Parse a rule config (``class_id: v1|v2|v3`` per line, ``#`` comments).

    A line with a single spelling declares a stable unit instead of a rule.
    Returns ``(rules, stable_units)``.
    """
    rules: list[PhonoRule] = []
    stable: list[str] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        class_id, sep, rest = line.partition(":")
        class_id = class_id.strip()
        if not sep or not class_id:
            raise RuleConfigError(f"line {lineno}: expected 'class_id: v1|v2'")
        variants = [v.strip().lower() for v in rest.split("|")]
        if any(not v for v in variants):
            raise RuleConfigError(f"line {lineno}: empty variant in rule {class_id!r}")
        if len(variants) == 1:
            stable.append(variants[0])
            continue
        try:
            rules.append(PhonoRule(class_id, tuple(variants)))
        except RuleConfigError as exc:
            raise RuleConfigError(f"line {lineno}: {exc}") from None
    return rules, tuple(stable)


def read_rules(path) -> tuple[list[PhonoRule], tuple[str, ...]]:
    return parse_rules(Path(path).read_text(encoding="utf-8"))


def _parse_bool(value: str) -> bool | None:
    if value in ("", "false"):
        return False
    if value == "true":
        return True
    return None


def parse_lexicon(lines: Iterable[str]) -> list[LexiconEntry]:
    """Parse lexicon CSV text (header included) into entries, in file order."""
    reader = csv.reader(lines)
    try:
        header = next(reader)
    except StopIteration:
        raise LexiconError(["line 1: missing header"]) from None
    if [h.strip() for h in header] != LEXICON_HEADER:
        raise LexiconError([f"line 1: expected header {','.join(LEXICON_HEADER)!r}"])

    entries: list[LexiconEntry] = []
    errors: list[str] = []
    seen: dict[tuple[str, str], int] = {}
    for row in reader:
        lineno = reader.line_num
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != len(LEXICON_HEADER):
            errors.append(f"line {lineno}: expected {len(LEXICON_HEADER)} columns, got {len(row)}")
            continue
        stem, pos, gloss, polarity, irregular = (c.strip() for c in row)
        stem = stem.lower()
        pos = pos.lower()
        if pos not in POS_VALUES:
            errors.append(f"line {lineno}: unknown pos {pos!r}")
            continue
        if not _STEM_RE.fullmatch(stem):
            errors.append(f"line {lineno}: invalid stem {stem!r}")
            continue
        polarity = polarity.lower() or "unspecified"
        if polarity not in POLARITY_VALUES:
            errors.append(f"line {lineno}: unknown polarity {polarity!r}")
            continue
        flag = _parse_bool(irregular.lower())
        if flag is None:
            errors.append(f"line {lineno}: irregular must be true, false or empty, got {irregular!r}")
            continue
        key = (stem, pos)
        if key in seen:
            errors.append(f"line {lineno}: duplicate entry {stem}/{pos} (first on line {seen[key]})")
            continue
        seen[key] = lineno
        entries.append(LexiconEntry(stem, pos, gloss, polarity, flag))
    if errors:
        raise LexiconError(errors)
    return entries


def parse_lexicon_file(path) -> list[LexiconEntry]:
    with open(path, encoding="utf-8-sig", newline="") as fh:
        return parse_lexicon(fh)


def load_seed_lexicon() -> list[LexiconEntry]:
    """The lexicon bundled with the package."""
    text = resources.files("darjamorph.data").joinpath("seed_lexicon.csv").read_text(encoding="utf-8")
    return parse_lexicon(text.splitlines())


def segment_units(stem: str, units: Iterable[str]) -> list[str]:
    """Split ``stem`` left to right, taking the longest known unit at each point."""
    by_length = sorted({u for u in units if u}, key=len, reverse=True)
    out = []
    i = 0
    while i < len(stem):
        for unit in by_length:
            if stem.startswith(unit, i):
                break
        else:
            unit = stem[i]
        out.append(unit)
        i += len(unit)
    return out


def active_rules(stem: str, rules: Sequence[PhonoRule], short_stem_vowels: bool = False) -> list[PhonoRule]:
    """Rules that apply to ``stem``; vowel classes are dropped for short stems."""
    short = len(stem) <= SHORT_STEM_LENGTH and not short_stem_vowels
    return [r for r in rules if r.enabled and not (short and r.is_vowel_class)]


class VariantSet(NamedTuple):
    variants: tuple[str, ...]
    truncated: bool


def expand_stem(stem: str, rules: Sequence[PhonoRule], cap: int = DEFAULT_CAP,
                stable_units: Sequence[str] = DEFAULT_STABLE_UNITS) -> VariantSet:
    """Cross product of the substitutable units of ``stem``.

    Each unit offers its own spelling first, then the other members of its
    class in class order, so the all-zero choice vector (the stem itself)
    is always enumerated first and survives truncation.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    if not rules:
        raise ValueError("at least one rule is required")
    classes: dict[str, tuple[str, ...]] = {}
    for rule in rules:
        for v in rule.variants:
            # first rule wins if a spelling is listed twice
            classes.setdefault(v, rule.variants)
    units = segment_units(stem, itertools.chain(classes, stable_units))
    choices = []
    for unit in units:
        cls = classes.get(unit)
        if cls is None:
            choices.append((unit,))
        else:
            choices.append((unit,) + tuple(v for v in cls if v != unit))

    seen: dict[str, None] = {}
    for vector in itertools.product(*choices):
        form = "".join(vector)
        if form in seen:
            continue
        if len(seen) == cap:
            return VariantSet(tuple(seen), True)
        seen[form] = None
    return VariantSet(tuple(seen), False)


def expand_entry_variants(entry: LexiconEntry, rules: Sequence[PhonoRule] = DEFAULT_RULES,
                          cap: int = DEFAULT_CAP, *,
                          stable_units: Sequence[str] = DEFAULT_STABLE_UNITS,
                          short_stem_vowels: bool = False) -> VariantSet:
    if not rules:
        raise ValueError("at least one rule is required")
    applied = active_rules(entry.stem, rules, short_stem_vowels)
    if not applied:
        return VariantSet((entry.stem,), False)
    return expand_stem(entry.stem, applied, cap, stable_units)


@dataclass(frozen=True)
class VariantIndex:
    """Read-only map from spelling variant to the lexicon entries it spells.

    Lookup is exact. Homographs are kept: one variant may point to several
    entries.
    """

    mapping: Mapping[str, frozenset[LexiconEntry]]
    variant_counts: Mapping[LexiconEntry, int] = field(default_factory=dict)
    truncated: frozenset[LexiconEntry] = frozenset()

    def lookup(self, candidate: str) -> frozenset[LexiconEntry]:
        return self.mapping.get(candidate, frozenset())

    def __contains__(self, candidate):
        return candidate in self.mapping

    @cached_property
    def prefixes(self) -> frozenset[str]:
        """Every non-empty prefix of every variant, for pruning stem searches."""
        return frozenset(v[:i] for v in self.mapping for i in range(1, len(v) + 1))

    def __len__(self):
        return len(self.mapping)

    @property
    def entries(self) -> list[LexiconEntry]:
        return list(self.variant_counts)

    def rows(self) -> list[tuple[str, LexiconEntry]]:
        """(variant, entry) pairs sorted by variant, then stem, then pos."""
        pairs = [(v, e) for v, es in self.mapping.items() for e in es]
        pairs.sort(key=lambda p: (p[0], p[1].stem, p[1].pos))
        return pairs


def build_variant_index(entries: Iterable[LexiconEntry], rules: Sequence[PhonoRule] = DEFAULT_RULES,
                        cap: int = DEFAULT_CAP, *,
                        stable_units: Sequence[str] = DEFAULT_STABLE_UNITS,
                        short_stem_vowels: bool = False) -> VariantIndex:
    mapping: dict[str, set[LexiconEntry]] = {}
    counts: dict[LexiconEntry, int] = {}
    truncated = set()
    for entry in entries:
        result = expand_entry_variants(entry, rules, cap, stable_units=stable_units,
                                       short_stem_vowels=short_stem_vowels)
        counts[entry] = len(result.variants)
        if result.truncated:
            truncated.add(entry)
        for variant in result.variants:
            mapping.setdefault(variant, set()).add(entry)
    frozen = {k: frozenset(v) for k, v in mapping.items()}
    return VariantIndex(MappingProxyType(frozen), MappingProxyType(counts), frozenset(truncated))


def lookup_stem(index: VariantIndex, candidate: str) -> frozenset[LexiconEntry]:
    return index.lookup(candidate)


def write_expanded_lexicon(index: VariantIndex, path) -> int:
    """Write the expanded-lexicon CSV; returns the number of data rows."""
    rows = index.rows()
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(EXPANDED_HEADER)
        for variant, e in rows:
            polarity = "" if e.polarity == "unspecified" else e.polarity
            writer.writerow([variant, e.stem, e.pos, e.gloss_fr, polarity])
    return len(rows)
