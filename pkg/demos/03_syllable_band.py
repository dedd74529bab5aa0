"""The Max-Min syllable band: bounding a verse's size before searching.

Junction rules can only remove syllables, never add them, so the vowel count
of the prose is a hard ceiling. Counting words by their junction behaviour
gives a floor. Metres outside [Min, Max] need never be looked at.

Run:  python demos/03_syllable_band.py
"""

from padyakara import compute_band, tokenize
from padyakara.catalog import band_filter, parse_catalog
from padyakara.composer import pada_band

SENTENCE = "idānīm atra ālasyam tyaktvā aham paṭhāmi ca likhāmi ca"

words = tokenize(SENTENCE).words
report = compute_band(words)

print(f"prose: {SENTENCE}")
print(f"vowels (Max): {report.max_syllables}")
print(f"word classes: n1={report.n1} n2={report.n2} n3={report.n3} "
      f"n5={report.n5} n7={report.n7}")
print(f"partial reductions: r1={report.r1} r2={report.r2} r3={report.r3}")
print(f"composed maximum reduction r = {report.r}  (one-shot formula: {report.r_combined})")
print(f"band: [{report.min_syllables}, {report.max_syllables}] syllables")

# How much of a big catalog the band removes. 100 metres spread uniformly
# over 5..24 syllables per quarter; a 48-vowel prose with r = 4 keeps only
# the 11- and 12-syllable rows.
catalog = parse_catalog("\n".join(
    f"M{n:02d}{chr(97 + k)}|sama|{n}|{'g' * n}|"
    for n in range(5, 25) for k in range(5)
))
padded = words + [tokenize("marut").words[0]] * 14   # pad to 48 vowels, r unchanged
band = compute_band(padded)
lo, hi = pada_band(band)
view = band_filter(catalog, lo, hi)
print(f"\n48-vowel prose, r={band.r}: quarters must have {lo}..{hi} syllables")
print(f"catalog: {len(catalog)} entries -> {len(view)} after the band filter "
      f"({1 - len(view) / len(catalog):.0%} pruned)")
