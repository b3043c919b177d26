"""Exit criteria for the analyzer, one test per criterion.

Every check is exact: no tolerance applies to any of them.
"""

import hashlib
from pathlib import Path

import pytest

from darjamorph.cli import main
from darjamorph.corpus import ingest_corpus, tokenize_corpus
from darjamorph.lexicon import LexiconEntry, PhonoRule, expand_entry_variants
from darjamorph.morphology import (
    Slots,
    analyze_token,
    analyze_word,
    brute_force_segment,
    generate_form,
    iter_legal_slots,
)
from darjamorph.normalizer import Token, collapse_exaggeration

GOLDEN = Path(__file__).parent / "golden"
DESK = GOLDEN / "desk_corpus.txt"
PRESENT, IMPERATIVE = "indicative_present", "imperative"

HAB = LexiconEntry("hab", "verb", "aimer", "positive")
EBKI = LexiconEntry("ebki", "verb", "pleurer", "negative")


def pres(prefix=None, suffix=None, **kw):
    return Slots(PRESENT, prefix, suffix, **kw)


def imp(suffix=None, **kw):
    return Slots(IMPERATIVE, None, suffix, **kw)


# Verb conjugation table cells that read unambiguously.
TABLE_CELLS = [
    (HAB, imp(), "hab"), (HAB, imp("i"), "habi"), (HAB, imp("ou"), "habou"),
    (HAB, pres("n"), "nhab"), (HAB, pres("y"), "yhab"),
    (HAB, pres("n", "ou"), "nhabou"), (HAB, pres("y", "ou"), "yhabou"),
    (HAB, pres("n", negation=True), "manhabch"), (HAB, pres("y", negation=True), "mayhabch"),
    (HAB, pres("n", "ou", negation=True), "manhabouch"),
    (HAB, pres("y", "ou", negation=True), "mayhabouch"),
    (HAB, pres("y", cod="ni"), "yhabni"), (HAB, pres("y", cod="ek"), "yhabek"),
    (HAB, pres("y", cod="ou"), "yhabou"), (HAB, pres("y", cod="ha"), "yhabha"),
    (HAB, pres("y", cod="na"), "yhabna"), (HAB, pres("y", cod="kom"), "yhabkom"),
    (HAB, pres("y", cod="hom"), "yhabhom"),
    (HAB, pres("y", coi="li"), "yhabli"), (HAB, pres("y", coi="lek"), "yhablek"),
    (HAB, pres("y", coi="lou"), "yhablou"), (HAB, pres("y", coi="ena"), "yhabena"),
    (HAB, pres("y", coi="elna"), "yhabelna"), (HAB, pres("y", coi="elkom"), "yhabelkom"),
    (HAB, pres("y", coi="elhom"), "yhabelhom"),
    (EBKI, imp(), "ebki"), (EBKI, imp("ou"), "ebkiou"), (EBKI, imp("iw"), "ebkiw"),
    (EBKI, pres("n"), "nebki"), (EBKI, pres("y"), "yebki"),
    (EBKI, pres("n", "ou"), "nebkou"), (EBKI, pres("n", "iw"), "nebkiw"),
    (EBKI, pres("y", "ou"), "yebkou"), (EBKI, pres("y", "iw"), "yebkiw"),
    (EBKI, pres("n", negation=True), "manebkich"), (EBKI, pres("y", negation=True), "mayebkich"),
    (EBKI, pres("n", "ou", negation=True), "manebkouch"),
    (EBKI, pres("n", "iw", negation=True), "manebkiwch"),
    (EBKI, pres("y", "ou", negation=True), "mayebkouch"),
    (EBKI, pres("y", "iw", negation=True), "mayebkiwch"),
    (EBKI, pres("y", cod="ni"), "yebkini"), (EBKI, pres("y", cod="ha"), "yebkiha"),
    (EBKI, pres("y", cod="na"), "yebkina"),
    (EBKI, pres("y", coi="li"), "yebkili"), (EBKI, pres("y", coi="lek"), "yebkilek"),
    (EBKI, pres("y", coi="lou"), "yebkilou"), (EBKI, pres("y", coi="lha"), "yebkilha"),
]

# Cells left out, with the reason:
#   second-person forms printed with a dotted h/t ("ḥhab", "ṭebki")  - unreadable prefix letter
#   "ḥhabī"                 - present suffix "i" is outside the plural suffix set
#   "yhabelha"              - "elha" is not among the listed COI pronouns
#   "yebkiḥ"                - unreadable object pronoun
#   "yebki kom", "yebki hom" - split by a space in the table
#   "n eb kouch" cells without "ma" - negation opener missing from the cell
#   COI column "yebkina"    - duplicates the COD cell


@pytest.fixture(scope="module")
def roundtrip(seed_entries, seed_index, automaton, inventory):
    forms = {}
    for entry in seed_entries:
        for slots in iter_legal_slots(entry, inventory):
            forms.setdefault(generate_form(entry, slots, inventory), []).append((entry, slots))
    analyses = {}
    for form in forms:
        tok = Token(0, 0, form, (form,))
        analyses[form] = analyze_token(tok, seed_index, automaton)
    return forms, analyses


def test_criterion_1_worked_examples(seed_index, automaton):
    a = analyze_word("mandirhach", seed_index, automaton)[0]
    assert (a.pos, a.stem, a.subject_prefix, a.cod, a.coi, a.negation) == \
        ("verb", "dir", "n", "ha", None, True)
    b = analyze_word("tro7", seed_index, automaton)[0]
    assert (b.canonical_stem, b.subject_prefix) == ("roh", "t")


def test_criterion_2_conjugation_table(seed_index, automaton):
    required = {"nhab", "yhab", "nhabou", "manhabch", "manebkich", "yhabni", "yhabli",
                "yhablek", "nebki", "nebkou", "nebkiw", "manebkouch"}
    assert required <= {form for _, _, form in TABLE_CELLS}
    for entry, slots, form in TABLE_CELLS:
        assert generate_form(entry, slots) == form
        found = analyze_word(form, seed_index, automaton)
        assert any(a.canonical_stem == entry.stem and a.pos == "verb" and a.slots == slots
                   for a in found), form


def test_criterion_3_roundtrip(seed_entries, roundtrip):
    counts = {p: sum(e.pos == p for e in seed_entries) for p in ("verb", "noun", "adjective", "particle")}
    assert counts["verb"] >= 30 and counts["noun"] >= 10
    assert counts["adjective"] >= 10 and counts["particle"] >= 10
    forms, analyses = roundtrip
    total = sum(len(gens) for gens in forms.values())
    assert total >= 1000
    misses = []
    for form, gens in forms.items():
        got = {(a.canonical_stem, a.pos, a.slots) for a in analyses[form]}
        misses += [(form, e, s) for e, s in gens if (e.stem, e.pos, s) not in got]
    print(f"roundtrip: {total - len(misses)}/{total} generated forms recovered")
    assert misses == []


def _oracle_first_hit(token, index, inventory):
    for cand in token.candidates:
        found = brute_force_segment(cand, index, inventory)
        if found:
            return found
    return set()


def test_criterion_4_oracle_equivalence(seed_index, automaton, inventory, roundtrip):
    forms, analyses = roundtrip
    tokens = tokenize_corpus(ingest_corpus(DESK))
    checked = disagreements = 0
    for tok in tokens:
        ours = {a.segmentation() for a in analyze_token(tok, seed_index, automaton)}
        theirs = {a.segmentation() for a in _oracle_first_hit(tok, seed_index, inventory)}
        checked += 1
        disagreements += ours != theirs
    for form, found in analyses.items():
        ours = {a.segmentation() for a in found}
        theirs = {a.segmentation() for a in brute_force_segment(form, seed_index, inventory)}
        checked += 1
        disagreements += ours != theirs
    print(f"oracle equivalence: {checked - disagreements}/{checked} agree")
    assert disagreements == 0


def test_criterion_5_variant_expansion():
    rules = [PhonoRule("damma", ("o", "ou")), PhonoRule("qaf", ("q", "k", "9"))]
    got = set(expand_entry_variants(LexiconEntry("oq3od", "verb"), rules, 64).variants)
    product = {a + b + "3" + c + "d" for a in ("o", "ou") for b in ("q", "k", "9") for c in ("o", "ou")}
    listed = {"oq3oud", "ok3od", "ok3oud", "ouq3od", "ouq3oud", "ouk3od", "ouk3oud",
              "o93od", "o93oud"}
    assert got == product
    assert len(got) == 12
    assert listed <= got


def test_criterion_6_exaggeration():
    def norm(word):
        return collapse_exaggeration(Token(0, 0, word, (word,)))

    assert (norm("bezzzzzaf").candidates, norm("bezzzzzaf").exaggerated) == (("bezzaf", "bezaf"), True)
    assert (norm("sahbiii").candidates, norm("sahbiii").exaggerated) == (("sahbii", "sahbi"), True)
    assert (norm("khoya").candidates, norm("khoya").exaggerated) == (("khoya",), False)


def _digest(directory):
    h = hashlib.sha256()
    for path in sorted(Path(directory).glob("*.csv")):
        h.update(path.name.encode() + b"\0" + path.read_bytes())
    return h.hexdigest()


def test_criterion_7_determinism(tmp_path, capsys):
    assert main(["analyze", "--corpus", str(DESK), "--out", str(tmp_path / "one")]) == 0
    assert main(["analyze", "--corpus", str(DESK), "--out", str(tmp_path / "two")]) == 0
    capsys.readouterr()
    assert len(list((tmp_path / "one").glob("*.csv"))) == 5
    assert _digest(tmp_path / "one") == _digest(tmp_path / "two")
    assert _digest(tmp_path / "one") == _digest(GOLDEN / "desk")


FIVE_MESSAGES = "rabi rabi khoya\nSahiiiiit sahit bezzzzzaf\n\nwach ch7al ?? wach\nKHOYA bezzaf !!\n"
# tallied by hand from the five lines above
HAND_TALLY = "term,count\nbezzaf,2\nkhoya,2\nrabi,2\nwach,2\nch7al,1\nsahiit,1\nsahit,1\n"


def test_criterion_8_frequency_model(tmp_path, capsys):
    corpus = tmp_path / "five.txt"
    corpus.write_text(FIVE_MESSAGES, encoding="utf-8")
    out = tmp_path / "freq.csv"
    assert main(["freq", "--corpus", str(corpus), "--out", str(out)]) == 0
    assert "tokens: 11" in capsys.readouterr().out
    assert out.read_text(encoding="utf-8") == HAND_TALLY
