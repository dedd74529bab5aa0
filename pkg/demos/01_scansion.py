"""Scan a classical verse: syllables, weights, feet, and the metre verdict.

Run:  python demos/01_scansion.py
"""

from padyakara import scan_verse, to_ganas
from padyakara.cli import default_catalog
from padyakara.phonology import grouped

VERSE = [
    "vande gurūṇāṃ caraṇāravinde",
    "sandarśitasvātmasukhāvabodhe",
    "janasya ye jāṅgalikāyamāne",
    "saṁsārahālāhalamohaśāntyai",
]

catalog = default_catalog()
scan = scan_verse(VERSE, catalog)

print("quarter                                  weights           feet")
print("-" * 72)
for pada in scan.padas:
    feet = to_ganas(pada.pattern) if "*" not in pada.pattern else "?"
    print(f"{pada.text:40} {grouped(pada.pattern):17} {feet}")

if scan.verdict:
    kind = "exact" if scan.verdict.exact else f"closest (distance {scan.verdict.distance})"
    print(f"\nmetre: {scan.verdict.record.name} [{kind}]")

# Zoom into one quarter: per-syllable weights
print("\nsyllables of the first quarter:")
for syl in scan.padas[0].syllables:
    mark = "guru" if syl.weight == "g" else "laghu"
    opt = " (optional)" if syl.optional_guru else ""
    print(f"  {syl.text:6} {mark}{opt}")
