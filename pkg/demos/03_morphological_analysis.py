"""
Reading a word through the automaton
====================================

The analyzer walks a transition table over slot labels: negation opener,
subject prefix, stem, suffix, object pronoun, negation closer. Stems are
found through the spelling-variant index.
"""

from darjamorph.lexicon import LexiconEntry, build_variant_index, load_seed_lexicon
from darjamorph.morphology import (
    Slots,
    analyze_word,
    brute_force_segment,
    build_automaton,
    generate_form,
)

index = build_variant_index(load_seed_lexicon())
automaton = build_automaton()

# The transition table itself, as state,label,next_state lines.
print(automaton.dump())

labels = ["neg_open", "subject_prefix", "stem:verb", "cod", "neg_close"]
print("states visited:", automaton.trace(labels))

for word in ("mandirhach", "tro7", "ktabkom", "sghira", "nebkou", "yhabou"):
    found = analyze_word(word, index, automaton)
    best = found[0]
    print(f"{word:12s} {best.pos:9s} stem={best.stem} ({best.canonical_stem}) "
          f"prefix={best.subject_prefix} suffix={best.plural_suffix} cod={best.cod} "
          f"coi={best.coi} neg={best.negation} mood={best.mood}  [{len(found)} readings]")

# Generation runs the other way.
ebki = LexiconEntry("ebki", "verb", "pleurer")
print(generate_form(ebki, Slots("indicative_present", "n", "ou", negation=True)))

# The exhaustive oracle finds the same readings as the automaton.
same = {a.segmentation() for a in brute_force_segment("yhabou", index, automaton.inventory)} == \
    {a.segmentation() for a in analyze_word("yhabou", index, automaton)}
print("oracle agrees:", same)
