import pytest

from padyakara.cli import default_catalog

# Table II verse, one quarter per line
VERSE_LINES = [
    "vande gurūṇāṃ caraṇāravinde",
    "sandarśitasvātmasukhāvabodhe",
    "janasya ye jāṅgalikāyamāne",
    "saṁsārahālāhalamohaśāntyai",
]
VERSE_ROWS = [
    "ggl ggl lgl gg",
    "ggl ggl lgl gg",
    "lgl ggl lgl gg",
    "ggl ggl lgl gg",
]

# Word stock for randomized properties. Deliberately free of vowel-initial
# -aḥ words (ambaraḥ-type): the published reduction formulas undercount the
# achievable reductions for those, so the soundness guarantee is only made
# for inputs without them; see the band module docstring.
LEXICON = [
    "aham", "idānīm", "ālasyam", "udadhim", "īśam",
    "tyaktvā", "paṭhāmi", "likhāmi", "ca", "na", "tatra", "gacchāmi",
    "parantu", "purā", "bhavāmi", "vane", "phale",
    "atra", "anyatra", "asti", "iha", "eva",
    "marut", "tat", "phalam", "bharat",
    "kr̥ṣṇaḥ", "rāmaḥ", "devaḥ",
]

# Synthetic anuṣṭubh-shaped material: one word per quarter, built from
# "gā" (heavy) and "ga" (light before a single consonant) units.
W_ODD = "gāgāgāgāgagāgāga"    # g g g g l g g *   fits the odd-quarter template
W_ODD2 = "gagāgāgāgagāgāga"   # l g g g l g g *
W_EVEN = "gāgāgāgāgagāgagā"   # g g g g l g l g   fits the even-quarter template
W_EVEN2 = "gagāgāgāgagāgagā"  # l g g g l g l g
HALF_HEAVY = "gāgāgāgā"       # g g g g
HALF_LIGHT = "gagāgagā"       # l g l g


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()
