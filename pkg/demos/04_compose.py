"""Compose: from a bag of words to a metrical verse, reordering only as far
as necessary.

Run:  python demos/04_compose.py
"""

from padyakara import compose, tokenize
from padyakara.cli import default_catalog
from padyakara.composer import CompositionRequest
from padyakara.phonology import grouped

catalog = default_catalog()

# The given order already forms a verse: no reordering happens.
TABLE_VERSE = ("vande gurūṇāṃ caraṇāravinde sandarśitasvātmasukhāvabodhe "
               "janasya ye jāṅgalikāyamāne saṁsārahālāhalamohaśāntyai")
result = compose(CompositionRequest(tokenize(TABLE_VERSE)), catalog)
print(f"status: {result.status}; metre: {result.metre.record.name}; "
      f"permutation: {result.permutation}")
for pada in result.verse_padas:
    print(f"  {pada.text}")

# Words given out of order: the search walks outward from the given order
# (fewest transpositions first) until the quarters line up.
SCRAMBLED = ("gāgāgāgāgagāgāga gāgāgāgāgagāgagā gagāgāgāgagāgāga "
             "gagāgagā gāgāgāgā")
result = compose(CompositionRequest(tokenize(SCRAMBLED)), catalog)
print(f"\nstatus: {result.status}; metre: {result.metre.record.name}; "
      f"permutation: {result.permutation} "
      f"({result.permutations_tried} orders tried)")
for pada in result.verse_padas:
    print(f"  {pada.text}   {grouped(pada.pattern)}")

# When nothing fits (here: the given order only, one heavy syllable off),
# the engine names the closest metre and what to change.
NEAR_MISS = "gāgāgāgāgagāgāga gāgāgāgāgagāgāgā gagāgāgāgagāgāga gagāgāgāgagāgagā"
request = CompositionRequest(tokenize(NEAR_MISS), max_permutations=1,
                             families_enabled=frozenset({"ardhasama"}))
result = compose(request, catalog)
print(f"\nstatus: {result.status}; closest: {result.metre.record.name} "
      f"at distance {result.metre.distance}")
for s in result.suggestions[:4]:
    print(f"  [{s.kind}] {s.detail}")
print(f"band report: Max={result.band.max_syllables} Min={result.band.min_syllables}; "
      f"catalog scanned {result.entries_in_band}/{result.entries_total} entries")
