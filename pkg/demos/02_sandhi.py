"""Euphonic junctions: what happens where words meet, and why the metre cares.

Run:  python demos/02_sandhi.py
"""

from padyakara import apply_sequence, tokenize

PAIRS = [
    ("tat", "ṭīkā"),         # final-t assimilation: the first syllable turns heavy
    ("tatra", "ambaraḥ"),    # a + a merge into ā: one syllable fewer
    ("itaḥ", "ambaraḥ"),     # -aḥ + a-: o plus elision mark
    ("ambaraḥ", "itaḥ"),     # -aḥ + i-: the visarga drops, words stay apart
    ("kau", "ūrudvayam"),    # au before a vowel: āv, counts unchanged
    ("ahaḥ", "ahaḥ"),        # the one word that doubles with an -r- seam
]

for left, right in PAIRS:
    words = [tokenize(left).words[0], tokenize(right).words[0]]
    res = apply_sequence(words)
    t = res.trace[0]
    rule = t.applied_rule or "no rule"
    print(f"{left} + {right:12} -> {res.text:18} [{rule}, {t.weight_effect}]")

# The dual-number exception: 'phale' may mean a locative or a dual.
print()
words = [tokenize("phale").words[0], tokenize("atra").words[0]]
for dual in (False, True):
    res = apply_sequence(words, {("phale", "atra"): dual})
    reading = "dual (two fruits)" if dual else "not dual (in the fruit)"
    print(f"phale + atra, {reading:24} -> {res.text}")

res = apply_sequence(words)
print(f"\nunanswered, the engine applies the junction and records a question:")
print(f"  {res.pending[0].question}")
