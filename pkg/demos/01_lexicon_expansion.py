"""
Expanding a stem into its social-media spellings
================================================

Writers swap ``q`` for ``k`` or ``9``, ``o`` for ``ou``, ``h`` for ``7``.
Each lexicon stem is expanded into every such spelling and indexed back
to its canonical entry.
"""

from darjamorph.lexicon import (
    DEFAULT_RULES,
    LexiconEntry,
    PhonoRule,
    build_variant_index,
    expand_entry_variants,
    load_seed_lexicon,
    lookup_stem,
    segment_units,
)

# The stem is cut into units by longest match first, so "ch" stays whole.
print(segment_units("machi", ["ch", "sh", "h", "7"]))

# Only the o/ou and q/k/9 classes: twelve spellings of "s'asseoir".
sit = LexiconEntry("oq3od", "verb", "s'asseoir")
rules = [PhonoRule("damma", ("o", "ou")), PhonoRule("qaf", ("q", "k", "9"))]
print(expand_entry_variants(sit, rules, cap=64).variants)

# With the full default rule set "3" may also be written "aa".
full = expand_entry_variants(sit, DEFAULT_RULES, cap=64)
print(len(full.variants), "variants, truncated:", full.truncated)

# Short stems keep their vowels unless asked otherwise.
hab = LexiconEntry("hab", "verb", "aimer")
print(expand_entry_variants(hab).variants)
print(expand_entry_variants(hab, short_stem_vowels=True).variants)

index = build_variant_index(load_seed_lexicon())
print(len(index), "indexed spellings")
for spelling in ("ro7", "ouk3oud", "xyzzy"):
    print(spelling, "->", sorted(str(e) for e in lookup_stem(index, spelling)))
