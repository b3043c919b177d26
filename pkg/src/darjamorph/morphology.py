"""Finite-state morphotactics for dialect verbs, nouns, adjectives and particles.

A word is read as a sequence of slots. The verb path is::

    [ma] [subject prefix] STEM [plural/imperative suffix] [COD | COI] [ch]

where ``ma ... ch`` is the negation circumfix. Nouns take an optional plural
and possessive suffix, adjectives an optional feminine ``a``, and particles
nothing. The automaton below is a transition table over slot labels; the
analyzer walks it over the characters of a token, consulting the variant
index whenever it crosses a stem transition.

Stems ending in a vowel lose that vowel before a vowel-initial suffix in
the present (``n + ebki + ou -> nebkou``) and before a suffix starting with
the same vowel in the imperative (``ebki + iw -> ebkiw``). ``Analysis.stem``
holds the stem as it appears in the word, ``canonical_stem`` the lexicon
form.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from functools import cached_property
from types import MappingProxyType
from typing import Iterator, Mapping, Optional, Sequence

from .lexicon import LexiconEntry, VariantIndex
from .normalizer import Token

VOWELS = "aeiou"

MOOD_PRESENT = "indicative_present"
MOOD_IMPERATIVE = "imperative"
MOOD_NONE = "n/a"
MOODS = (MOOD_PRESENT, MOOD_IMPERATIVE, MOOD_NONE)

POS_PRIORITY = {"verb": 0, "noun": 1, "adjective": 2, "particle": 3}


class InventoryError(ValueError):
    pass


class IllegalSlotsError(ValueError):
    pass


@dataclass(frozen=True)
class AffixInventory:
    subject_prefixes: frozenset = frozenset()
    plural_suffixes: frozenset = frozenset()
    imperative_suffixes: frozenset = frozenset()
    neg_open: frozenset = frozenset()
    neg_close: frozenset = frozenset()
    cod_pronouns: frozenset = frozenset()
    coi_pronouns: frozenset = frozenset()
    possessive_suffixes: frozenset = frozenset()
    feminine_suffix: frozenset = frozenset()
    noun_plural_suffixes: frozenset = frozenset()

    def __post_init__(self):
        for f in fields(self):
            members = frozenset(getattr(self, f.name))
            object.__setattr__(self, f.name, members)
            for m in members:
                if not isinstance(m, str) or not m or m != m.lower():
                    raise InventoryError(f"{f.name}: invalid member {m!r}")
        clash = self.cod_pronouns & self.coi_pronouns
        if clash:
            raise InventoryError(f"COD and COI pronouns overlap: {sorted(clash)}")

    @classmethod
    def default(cls, noun_plural: bool = False) -> "AffixInventory":
        return cls(
            subject_prefixes={"n", "t", "y", "i", "ne", "te", "ye", "na", "ta", "ya"},
            plural_suffixes={"ou", "iw"},
            imperative_suffixes={"i", "ou", "iw"},
            neg_open={"ma"},
            neg_close={"ch", "che", "sh"},
            cod_pronouns={"ni", "ek", "k", "ou", "h", "ha", "na", "kom", "hom"},
            coi_pronouns={"li", "lek", "lou", "lha", "ena", "elna", "lna",
                          "elkom", "lkom", "elhom", "lhom"},
            possessive_suffixes={"i", "ek", "k", "ou", "h", "ha", "na", "kom", "hom"},
            feminine_suffix={"a"},
            noun_plural_suffixes={"in", "yn"} if noun_plural else frozenset(),
        )


DEFAULT_INVENTORY = AffixInventory.default()

# Transition labels. Stem labels carry the part of speech so that the table
# stays deterministic at the slot level.
NEG_OPEN = "neg_open"
SUBJECT = "subject_prefix"
IMP_SUFFIX = "imperative_suffix"
PLURAL = "plural_suffix"
COD = "cod"
COI = "coi"
NEG_CLOSE = "neg_close"
NOUN_PLURAL = "noun_plural"
POSSESSIVE = "possessive"
FEMININE = "feminine"
STEM_VERB = "stem:verb"
STEM_NOUN = "stem:noun"
STEM_ADJ = "stem:adjective"
STEM_PARTICLE = "stem:particle"
STEM_IRREGULAR = "stem:irregular"

STEM_LABELS = (STEM_VERB, STEM_NOUN, STEM_ADJ, STEM_PARTICLE, STEM_IRREGULAR)

_AFFIX_SETS = {
    NEG_OPEN: "neg_open",
    SUBJECT: "subject_prefixes",
    IMP_SUFFIX: "imperative_suffixes",
    PLURAL: "plural_suffixes",
    COD: "cod_pronouns",
    COI: "coi_pronouns",
    NEG_CLOSE: "neg_close",
    NOUN_PLURAL: "noun_plural_suffixes",
    POSSESSIVE: "possessive_suffixes",
    FEMININE: "feminine_suffix",
}

# (state, label, next_state) before pruning labels whose affix set is empty.
_GRAMMAR = (
    (0, NEG_OPEN, 1),
    (0, SUBJECT, 2),
    (0, STEM_VERB, 4),
    (0, STEM_NOUN, 13),
    (0, STEM_ADJ, 16),
    (0, STEM_PARTICLE, 18),
    (0, STEM_IRREGULAR, 19),
    # negated verbs never reach a final state before the closer
    (1, SUBJECT, 3),
    (1, STEM_VERB, 6),
    (3, STEM_VERB, 6),
    (2, STEM_VERB, 5),
    # imperative
    (4, IMP_SUFFIX, 7),
    (4, COD, 10), (4, COI, 10),
    (7, COD, 10), (7, COI, 10),
    # present
    (5, PLURAL, 8),
    (5, COD, 10), (5, COI, 10),
    (8, COD, 10), (8, COI, 10),
    # negated present
    (6, PLURAL, 9),
    (6, COD, 11), (6, COI, 11),
    (9, COD, 11), (9, COI, 11),
    (6, NEG_CLOSE, 12), (9, NEG_CLOSE, 12), (11, NEG_CLOSE, 12),
    # nouns and adjectives
    (13, NOUN_PLURAL, 14),
    (13, POSSESSIVE, 15), (14, POSSESSIVE, 15),
    (16, FEMININE, 17),
)
_FINAL = frozenset({4, 5, 7, 8, 10, 12, 13, 14, 15, 16, 17, 18, 19})


@dataclass(frozen=True)
class MorphAutomaton:
    inventory: AffixInventory
    transitions: Mapping[tuple[int, str], int]
    final_states: frozenset
    start: int = 0

    @property
    def states(self) -> frozenset:
        out = {self.start}
        for (src, _), dst in self.transitions.items():
            out.update((src, dst))
        return frozenset(out)

    @cached_property
    def _outgoing(self) -> dict:
        out: dict = {}
        for (src, label), dst in sorted(self.transitions.items()):
            out.setdefault(src, []).append((label, dst))
        return out

    def outgoing(self, state: int) -> list[tuple[str, int]]:
        return self._outgoing.get(state, [])

    def affixes(self, label: str) -> frozenset:
        return getattr(self.inventory, _AFFIX_SETS[label])

    def trace(self, labels: Sequence[str]) -> Optional[list[int]]:
        """States visited along ``labels``, or None if a transition is missing."""
        state = self.start
        path = [state]
        for label in labels:
            state = self.transitions.get((state, label))
            if state is None:
                return None
            path.append(state)
        return path

    def accepts(self, labels: Sequence[str]) -> bool:
        path = self.trace(labels)
        return path is not None and path[-1] in self.final_states

    def dump(self) -> str:
        """Transition table as ``state,label,next_state`` lines plus ``final:``."""
        lines = [f"{s},{label},{d}" for (s, label), d in sorted(self.transitions.items())]
        lines.append("final:" + ",".join(str(s) for s in sorted(self.final_states)))
        return "\n".join(lines) + "\n"


def build_automaton(inventory: AffixInventory = DEFAULT_INVENTORY) -> MorphAutomaton:
    if not isinstance(inventory, AffixInventory):
        raise InventoryError("expected an AffixInventory")
    table = {}
    for src, label, dst in _GRAMMAR:
        if label in _AFFIX_SETS and not getattr(inventory, _AFFIX_SETS[label]):
            continue
        table[(src, label)] = dst
    reachable = {0}
    changed = True
    while changed:
        changed = False
        for (src, _), dst in table.items():
            if src in reachable and dst not in reachable:
                reachable.add(dst)
                changed = True
    table = {k: v for k, v in table.items() if k[0] in reachable}
    return MorphAutomaton(inventory, MappingProxyType(table), _FINAL & frozenset(reachable))


@dataclass(frozen=True)
class Slots:
    """Affix slots of one word form, used both to generate and to compare."""

    mood: str = MOOD_NONE
    subject_prefix: Optional[str] = None
    plural_suffix: Optional[str] = None
    cod: Optional[str] = None
    coi: Optional[str] = None
    negation: bool = False
    neg_open: Optional[str] = None
    neg_close: Optional[str] = None
    possessive: Optional[str] = None
    feminine: bool = False
    noun_plural: Optional[str] = None

    def __post_init__(self):
        if self.negation:
            if self.neg_open is None:
                object.__setattr__(self, "neg_open", "ma")
            if self.neg_close is None:
                object.__setattr__(self, "neg_close", "ch")


@dataclass(frozen=True)
class Analysis:
    surface: str
    normalized: str
    exaggerated: bool
    pos: str
    stem: str
    canonical_stem: str
    gloss_fr: str
    subject_prefix: Optional[str] = None
    plural_suffix: Optional[str] = None
    cod: Optional[str] = None
    coi: Optional[str] = None
    possessive: Optional[str] = None
    feminine: bool = False
    negation: bool = False
    mood: str = MOOD_NONE
    neg_open: Optional[str] = None
    neg_close: Optional[str] = None
    noun_plural: Optional[str] = None
    irregular: bool = field(default=False, compare=False)

    @property
    def slots(self) -> Slots:
        return Slots(self.mood, self.subject_prefix, self.plural_suffix, self.cod, self.coi,
                     self.negation, self.neg_open, self.neg_close, self.possessive,
                     self.feminine, self.noun_plural)

    @property
    def affix_count(self) -> int:
        n = sum(x is not None for x in (self.subject_prefix, self.plural_suffix, self.cod,
                                        self.coi, self.possessive, self.noun_plural))
        return n + self.feminine + self.negation

    def reconstruct(self) -> str:
        """Concatenate the slots back into the word they were read from."""
        parts = [self.neg_open, self.subject_prefix, self.stem, self.plural_suffix,
                 self.cod, self.coi, self.neg_close, self.noun_plural, self.possessive,
                 "a" if self.feminine else None]
        return "".join(p for p in parts if p)

    def segmentation(self) -> tuple:
        """Everything except the token-level fields (surface, exaggeration)."""
        return (self.normalized, self.pos, self.stem, self.canonical_stem, self.gloss_fr,
                self.slots)


def _elision_allowed(vowel: str, suffix: str, present: bool) -> bool:
    return bool(suffix) and suffix[0] in VOWELS and (vowel == suffix[0] or present)


def _make_analysis(candidate: str, entry: LexiconEntry, stem: str, slots: Slots) -> Analysis:
    return Analysis(
        surface=candidate, normalized=candidate, exaggerated=False,
        pos=entry.pos, stem=stem, canonical_stem=entry.stem, gloss_fr=entry.gloss_fr,
        subject_prefix=slots.subject_prefix, plural_suffix=slots.plural_suffix,
        cod=slots.cod, coi=slots.coi, possessive=slots.possessive,
        feminine=slots.feminine, negation=slots.negation, mood=slots.mood,
        neg_open=slots.neg_open, neg_close=slots.neg_close, noun_plural=slots.noun_plural,
        irregular=entry.irregular,
    )


def _stem_entries(hits, label: str) -> list[LexiconEntry]:
    if label == STEM_IRREGULAR:
        return [e for e in hits if e.irregular]
    pos = label.split(":", 1)[1]
    return [e for e in hits if e.pos == pos and not e.irregular]


def _path_to_analysis(candidate: str, path: list) -> Analysis:
    values: dict = {}
    entry = stem = None
    for label, text, hit in path:
        if label in STEM_LABELS:
            entry, stem = hit, text
        else:
            values[label] = text
    negation = NEG_OPEN in values
    if entry.irregular or entry.pos != "verb":
        mood = MOOD_NONE
    elif SUBJECT in values or negation:
        mood = MOOD_PRESENT
    else:
        mood = MOOD_IMPERATIVE
    slots = Slots(
        mood=mood,
        subject_prefix=values.get(SUBJECT),
        plural_suffix=values.get(PLURAL, values.get(IMP_SUFFIX)),
        cod=values.get(COD),
        coi=values.get(COI),
        negation=negation,
        neg_open=values.get(NEG_OPEN),
        neg_close=values.get(NEG_CLOSE),
        possessive=values.get(POSSESSIVE),
        feminine=FEMININE in values,
        noun_plural=values.get(NOUN_PLURAL),
    )
    return _make_analysis(candidate, entry, stem, slots)


def segment_candidate(candidate: str, index: VariantIndex, automaton: MorphAutomaton) -> set[Analysis]:
    """Every accepted path of ``candidate`` through the automaton, unranked."""
    n = len(candidate)
    found: set[Analysis] = set()
    memo: dict = {}
    prefixes = index.prefixes

    def hits(text):
        if text not in memo:
            memo[text] = index.lookup(text)
        return memo[text]

    def walk(state: int, pos: int, path: list, pending: Optional[str]):
        # pending: vowel elided from the stem, to be licensed by the next suffix
        if pos == n and pending is None and state in automaton.final_states:
            found.add(_path_to_analysis(candidate, path))
        for label, nxt in automaton.outgoing(state):
            if label in STEM_LABELS:
                if pending is not None:
                    continue
                for end in range(pos + 1, n + 1):
                    text = candidate[pos:end]
                    if text not in prefixes:
                        break
                    for entry in _stem_entries(hits(text), label):
                        walk(nxt, end, path + [(label, text, entry)], None)
                    # an elided vowel needs a vowel-initial suffix right after
                    if label != STEM_VERB or end == n or candidate[end] not in VOWELS:
                        continue
                    for vowel in VOWELS:
                        for entry in _stem_entries(hits(text + vowel), label):
                            walk(nxt, end, path + [(label, text, entry)], vowel)
                continue
            if pending is not None and label not in (PLURAL, IMP_SUFFIX):
                continue
            for affix in automaton.affixes(label):
                if not candidate.startswith(affix, pos):
                    continue
                if pending is not None and not _elision_allowed(pending, affix, label == PLURAL):
                    continue
                walk(nxt, pos + len(affix), path + [(label, affix, None)], None)

    walk(automaton.start, 0, [], None)
    return found


def _rank_key(a: Analysis):
    whole = a.affix_count == 0 and a.stem == a.normalized
    slot_values = tuple("" if v is None else str(v) for v in
                        (a.subject_prefix, a.plural_suffix, a.cod, a.coi, a.possessive,
                         a.noun_plural, a.neg_open, a.neg_close))
    return (not whole, -len(a.stem), a.affix_count, POS_PRIORITY.get(a.pos, 9),
            a.canonical_stem, a.mood, a.feminine, a.negation, slot_values, a.stem, a.gloss_fr)


def rank_analyses(analyses) -> list[Analysis]:
    """Order competing analyses, most plausible first.

    Whole-token lexicon matches come first, then longer stems, then fewer
    affixes, then verb > noun > adjective > particle, then the canonical
    stem. Remaining ties are broken on slot contents so the order is total.
    """
    return sorted(analyses, key=_rank_key)


def analyze_token(token: Token, index: VariantIndex, automaton: MorphAutomaton) -> list[Analysis]:
    """Ranked analyses for the first candidate of ``token`` that has any."""
    for candidate in token.candidates:
        found = segment_candidate(candidate, index, automaton)
        if found:
            return rank_analyses(replace(a, surface=token.surface, exaggerated=token.exaggerated)
                                 for a in found)
    return []


def analyze_word(word: str, index: VariantIndex, automaton: MorphAutomaton) -> list[Analysis]:
    """Convenience wrapper: normalize a single word and analyze it."""
    from .normalizer import collapse_exaggeration

    token = collapse_exaggeration(Token(0, 0, word, (word.lower(),)))
    return analyze_token(token, index, automaton)


def _check(cond: bool, message: str):
    if not cond:
        raise IllegalSlotsError(message)


def _check_member(value, members, what: str):
    if value is not None:
        _check(value in members, f"{what} {value!r} is not in the inventory")


def generate_form(entry: LexiconEntry, slots: Slots = Slots(),
                  inventory: AffixInventory = DEFAULT_INVENTORY) -> str:
    """Build the surface form of ``entry`` with the given affixes."""
    verb_only = (slots.subject_prefix, slots.plural_suffix, slots.cod, slots.coi)
    if entry.irregular or entry.pos == "particle":
        _check(slots == Slots(), f"{entry} takes no affixes")
        return entry.stem

    if entry.pos in ("noun", "adjective"):
        _check(not slots.negation, "negation requires a verb")
        _check(all(v is None for v in verb_only), f"verb affixes on a {entry.pos}")
        _check(slots.mood == MOOD_NONE, f"mood {slots.mood!r} on a {entry.pos}")
        if entry.pos == "adjective":
            _check(slots.possessive is None and slots.noun_plural is None,
                   "possessive or plural suffix on an adjective")
            if slots.feminine:
                _check(bool(inventory.feminine_suffix), "feminine suffix not in the inventory")
                return entry.stem + min(inventory.feminine_suffix)
            return entry.stem
        _check(not slots.feminine, "feminine suffix on a noun")
        _check_member(slots.noun_plural, inventory.noun_plural_suffixes, "noun plural")
        _check_member(slots.possessive, inventory.possessive_suffixes, "possessive")
        return entry.stem + (slots.noun_plural or "") + (slots.possessive or "")

    # verbs
    _check(slots.possessive is None and slots.noun_plural is None and not slots.feminine,
           "noun or adjective affixes on a verb")
    _check(slots.cod is None or slots.coi is None, "COD and COI are mutually exclusive")
    _check_member(slots.cod, inventory.cod_pronouns, "COD pronoun")
    _check_member(slots.coi, inventory.coi_pronouns, "COI pronoun")
    if slots.mood == MOOD_IMPERATIVE:
        _check(slots.subject_prefix is None, "imperative takes no subject prefix")
        _check(not slots.negation, "imperative cannot be negated")
        _check_member(slots.plural_suffix, inventory.imperative_suffixes, "imperative suffix")
    elif slots.mood == MOOD_PRESENT:
        _check(slots.subject_prefix is not None or slots.negation,
               "present without subject prefix or negation reads as imperative")
        _check_member(slots.subject_prefix, inventory.subject_prefixes, "subject prefix")
        _check_member(slots.plural_suffix, inventory.plural_suffixes, "plural suffix")
    else:
        raise IllegalSlotsError(f"verb mood must be imperative or present, got {slots.mood!r}")
    if slots.negation:
        _check_member(slots.neg_open, inventory.neg_open, "negation opener")
        _check_member(slots.neg_close, inventory.neg_close, "negation closer")

    stem = entry.stem
    suffix = slots.plural_suffix or ""
    if stem[-1] in VOWELS and _elision_allowed(stem[-1], suffix, slots.mood == MOOD_PRESENT):
        stem = stem[:-1]
    parts = [slots.neg_open, slots.subject_prefix, stem, suffix, slots.cod, slots.coi,
             slots.neg_close]
    return "".join(p for p in parts if p)


def brute_force_segment(candidate: str, index: VariantIndex,
                        inventory: AffixInventory = DEFAULT_INVENTORY) -> set[Analysis]:
    """Exhaustive generate-and-test segmentation, used to check the automaton.

    Tries every combination of slot fillers, takes whatever is left in the
    middle as the stem and keeps the combination if the stem is in the
    index with a compatible part of speech.
    """
    out: set[Analysis] = set()
    opt = lambda members: [None] + sorted(members)  # noqa: E731

    def entries_for(stem: str, pos: str):
        return [e for e in index.lookup(stem) if e.pos == pos and not e.irregular]

    for e in index.lookup(candidate):
        if e.irregular or e.pos == "particle":
            out.add(_make_analysis(candidate, e, candidate, Slots()))

    for plural in opt(inventory.noun_plural_suffixes):
        for poss in opt(inventory.possessive_suffixes):
            tail = (plural or "") + (poss or "")
            stem = candidate[:len(candidate) - len(tail)]
            if not stem or not candidate.endswith(tail):
                continue
            for e in entries_for(stem, "noun"):
                out.add(_make_analysis(candidate, e, stem, Slots(possessive=poss, noun_plural=plural)))

    for fem in [None] + sorted(inventory.feminine_suffix):
        tail = fem or ""
        stem = candidate[:len(candidate) - len(tail)]
        if not stem or not candidate.endswith(tail):
            continue
        for e in entries_for(stem, "adjective"):
            out.add(_make_analysis(candidate, e, stem, Slots(feminine=fem is not None)))

    objects = [(None, None)] + [(c, None) for c in sorted(inventory.cod_pronouns)] \
        + [(None, c) for c in sorted(inventory.coi_pronouns)]
    for negation in (False, True):
        openers = sorted(inventory.neg_open) if negation else [""]
        closers = sorted(inventory.neg_close) if negation else [""]
        for op in openers:
            for cl in closers:
                if len(op) + len(cl) >= len(candidate):
                    continue
                if not (candidate.startswith(op) and candidate.endswith(cl)):
                    continue
                middle = candidate[len(op):len(candidate) - len(cl)]
                for prefix in opt(inventory.subject_prefixes):
                    if prefix and not middle.startswith(prefix):
                        continue
                    rest = middle[len(prefix or ""):]
                    imperative = prefix is None and not negation
                    mood = MOOD_IMPERATIVE if imperative else MOOD_PRESENT
                    suffixes = opt(inventory.imperative_suffixes if imperative
                                   else inventory.plural_suffixes)
                    for cod, coi in objects:
                        obj = (cod or "") + (coi or "")
                        if not rest.endswith(obj):
                            continue
                        for suffix in suffixes:
                            tail = (suffix or "") + obj
                            if len(tail) >= len(rest) or not rest.endswith(tail):
                                continue
                            stem = rest[:len(rest) - len(tail)]
                            slots = Slots(mood, prefix, suffix, cod, coi, negation,
                                          op or None, cl or None)
                            hits = [(e, stem) for e in entries_for(stem, "verb")]
                            for vowel in VOWELS:
                                if suffix and suffix[0] in VOWELS and (vowel == suffix[0] or not imperative):
                                    hits += [(e, stem) for e in entries_for(stem + vowel, "verb")]
                            for e, s in hits:
                                out.add(_make_analysis(candidate, e, s, slots))
    return out


def iter_legal_slots(entry: LexiconEntry, inventory: AffixInventory = DEFAULT_INVENTORY) -> Iterator[Slots]:
    """Every slot combination generate_form accepts for ``entry``."""
    if entry.irregular or entry.pos == "particle":
        yield Slots()
        return
    if entry.pos == "adjective":
        yield Slots()
        if inventory.feminine_suffix:
            yield Slots(feminine=True)
        return
    if entry.pos == "noun":
        for plural in [None] + sorted(inventory.noun_plural_suffixes):
            for poss in [None] + sorted(inventory.possessive_suffixes):
                yield Slots(possessive=poss, noun_plural=plural)
        return
    objects = [(None, None)] + [(c, None) for c in sorted(inventory.cod_pronouns)] \
        + [(None, c) for c in sorted(inventory.coi_pronouns)]
    for suffix in [None] + sorted(inventory.imperative_suffixes):
        for cod, coi in objects:
            yield Slots(MOOD_IMPERATIVE, None, suffix, cod, coi)
    negations = [(False, None, None)] + [(True, o, c) for o in sorted(inventory.neg_open)
                                         for c in sorted(inventory.neg_close)]
    for negation, op, cl in negations:
        for prefix in [None] + sorted(inventory.subject_prefixes):
            if prefix is None and not negation:
                continue
            for suffix in [None] + sorted(inventory.plural_suffixes):
                for cod, coi in objects:
                    yield Slots(MOOD_PRESENT, prefix, suffix, cod, coi, negation, op, cl)
