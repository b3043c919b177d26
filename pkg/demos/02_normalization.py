"""
Tokens and exaggeration
=======================

Messages are split into position-tracked tokens. Letters stretched for
emphasis (``bezzzzzaf``) are shrunk into lookup candidates while the token
keeps a flag saying it was stretched.
"""

from darjamorph.normalizer import RawMessage, normalize_message

msg = RawMessage(0, "Sahiiiiit khoya, bezzzzzaf ch7al !!")
for tok in normalize_message(msg):
    print(tok.token_index, repr(tok.surface), tok.candidates, tok.exaggerated)

# Doubled letters are legitimate in the dialect and are left alone.
print(normalize_message(RawMessage(1, "bezzaf"))[0].candidates)
