"""
Labeling a corpus
=================

Term frequencies and POS-grouped label tables for a small corpus, written
to a temporary directory.
"""

import tempfile
from pathlib import Path

from darjamorph.corpus import (
    analyze_corpus,
    build_term_frequency_model,
    emit_label_tables,
    read_messages,
    write_frequency_csv,
)
from darjamorph.lexicon import build_variant_index, load_seed_lexicon
from darjamorph.morphology import build_automaton

text = "inchlah nafozo ma3kom\nMandirhach tro7 bezzzzzaf !!\nktabi sghira rabi khoya sahbiii Sahiiiiit\n"
messages = read_messages(text.encode("utf-8"))

model = build_term_frequency_model(messages)
print(model.most_common()[:5], "of", model.total_tokens, "tokens")

table = analyze_corpus(messages, build_variant_index(load_seed_lexicon()), build_automaton())
for group, rows in table.grouping.items():
    print(group, [r.token.surface for r in rows])

out = Path(tempfile.mkdtemp())
for path in emit_label_tables(table, out):
    print(path.name, path.read_text().count("\n") - 1, "rows")
write_frequency_csv(model, out / "freq.csv")
print((out / "verbs.csv").read_text())
