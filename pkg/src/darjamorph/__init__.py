"""Rule-based morphological analysis of Algerian dialect Arabic in Latin script."""

from .lexicon import (
    DEFAULT_RULES,
    LexiconEntry,
    LexiconError,
    PhonoRule,
    VariantIndex,
    build_variant_index,
    expand_entry_variants,
    load_seed_lexicon,
    lookup_stem,
    parse_lexicon_file,
)
from .morphology import (
    AffixInventory,
    Analysis,
    IllegalSlotsError,
    MorphAutomaton,
    Slots,
    analyze_token,
    analyze_word,
    brute_force_segment,
    build_automaton,
    generate_form,
    rank_analyses,
)
from .normalizer import RawMessage, Token, collapse_exaggeration, tokenize_message

__version__ = "0.1.0"
