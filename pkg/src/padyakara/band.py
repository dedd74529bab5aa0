"""Syllable-band estimation: how many syllables can a verse built from the
given words have?

The ceiling is exact: junction rules never add a vowel, so Max is the vowel
count of the input. The floor comes from counting words by junction behaviour:

  S1  vowel-initial, consonantal-final        (aham)      n1 counts S1 minus S5
  S2  consonantal-initial, vowel-final        (bhavāmi)   excluding ai/au finals
  S3  vowel-initial, vowel-final              (atra)
  S4  consonantal at both ends                (marut)     uncounted, inert
  S5  vowel-initial, ending -aḥ               (ambaraḥ)   subset of S1
  S6  the word ahaḥ                                       counted inside n5
  S7  consonantal-initial, ending -aḥ         (kr̥ṣṇaḥ)

Partial reduction maxima:

  r1 = n3 - 1                if n1 = n2 = 0 and n3 > 0, else min(n1, n2) + n3
  r2 = n5 - 1                if n1 = n2 and n5 > 0, else n5
  r3 = min(n7, n1 - n2)      if n1 > n2 and n7 > 0, else 0

The combined shortcut formula (see compute_r_combined) mishandles S7 words
whenever n1 = n2: it either adds n7 although no S1 partner remains, or ignores
that S5 words can pair with S7 finals. compute_r therefore composes the
partial formulas directly — pairing S1 with S2, spending S7 on the S1 surplus,
and letting S5 chain (minus one) only when neither an S1/S2 leftover nor an
unspent S7 word remains. Both values are reported; they differ exactly on the
n1 = n2, n7 > 0 family, and the composed value is the one the search trusts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .text_codec import (
    ASPIRATE,
    CONSONANT,
    EmptyInput,
    SIBILANT,
    VOWEL_CATEGORIES,
    Word,
)

_CONSONANTAL_INITIALS = {CONSONANT, SIBILANT, ASPIRATE}


@dataclass(frozen=True)
class WordClass:
    word: Word
    sets: frozenset[str]

    def __contains__(self, name: str) -> bool:
        return name in self.sets


def classify_word(word: Word) -> WordClass:
    """Assign a word to the junction-behaviour sets S1..S7."""
    sets: set[str] = set()
    vowel_initial = word.initial_class in VOWEL_CATEGORIES
    consonantal_initial = word.initial_class in _CONSONANTAL_INITIALS
    vowel_final = word.final_class in VOWEL_CATEGORIES
    ends_ah = word.ends_with("a", "ḥ")
    final_glyph = word.lexeme[-1].glyph

    if vowel_initial and not vowel_final:
        sets.add("S1")
        if ends_ah:
            sets.add("S5")
            if tuple(l.glyph for l in word.lexeme) == ("a", "h", "a", "ḥ"):
                sets.add("S6")
    if vowel_initial and vowel_final:
        sets.add("S3")
    if consonantal_initial and vowel_final:
        # ai/au finals can never shorten under any junction rule; such words
        # behave like S4 and are left uncounted
        sets.add("S2" if final_glyph not in ("ai", "au") else "S4")
    if consonantal_initial and not vowel_final:
        sets.add("S7" if ends_ah else "S4")
    return WordClass(word, frozenset(sets))


def count_sets(words: list[Word]) -> tuple[int, int, int, int, int]:
    """(n1, n2, n3, n5, n7); n1 excludes the S5 subset so the partial
    formulas compose without double counting."""
    n1 = n2 = n3 = n5 = n7 = 0
    for word in words:
        wc = classify_word(word)
        if "S5" in wc:
            n5 += 1
        elif "S1" in wc:
            n1 += 1
        if "S2" in wc:
            n2 += 1
        if "S3" in wc:
            n3 += 1
        if "S7" in wc:
            n7 += 1
    return n1, n2, n3, n5, n7


def compute_r1(n1: int, n2: int, n3: int) -> int:
    """Reductions from S1/S2 pairing plus S3 words; S3 words chaining only
    with themselves manage one fewer."""
    if n1 == 0 and n2 == 0 and n3 > 0:
        return n3 - 1
    return min(n1, n2) + n3


def compute_r2(n1: int, n2: int, n5: int) -> int:
    if n1 == n2 and n5 > 0:
        return n5 - 1
    return n5


def compute_r3(n1: int, n2: int, n7: int) -> int:
    if n1 > n2 and n7 > 0:
        return min(n7, n1 - n2)
    return 0


def compute_r_combined(n1: int, n2: int, n3: int, n5: int, n7: int) -> int:
    """The one-shot case formula. Kept verbatim for the report; see module
    docstring for the family of tuples it gets wrong."""
    if ((n1 == n2) or (n1 > n2 and n7 == n1 - n2)) and n5 > 0:
        return n1 + n3 + n5 - 1
    if (n1 < n2) or (n1 > n2 and (n7 > n1 - n2 or (n7 == n1 - n2 and n5 == 0))):
        return n1 + n3 + n5
    return n2 + n3 + n5 + n7


def compute_r(n1: int, n2: int, n3: int, n5: int, n7: int) -> int:
    """Maximum junction reductions, composed from the partial formulas.

    min(n1, n2) S1/S2 pairs and every S3 word reduce; S7 words absorb the S1
    surplus; S5 words all reduce while any S1/S2 leftover or unspent S7 word
    offers a partner, and chain among themselves (one fewer) otherwise.
    """
    base = min(n1, n2) + n3
    r3 = compute_r3(n1, n2, n7)
    s12_leftover = (n2 - n1) if n2 > n1 else (n1 - n2 - r3)
    s7_leftover = n7 - r3
    if n5 == 0:
        r5 = 0
    elif s12_leftover > 0 or s7_leftover > 0:
        r5 = n5
    else:
        r5 = n5 - 1
    return base + r5 + r3


FORMULA_GAP_NOTE = (
    "combined shortcut disagrees with the composed value: with n1 = n2 the "
    "shortcut mishandles S7 words (adds n7 with no S1 partner available when "
    "n5 = 0; ignores S5-S7 pairing when n5 > 0); the composed value is used"
)


@dataclass
class BandReport:
    max_syllables: int
    min_syllables: int
    n1: int
    n2: int
    n3: int
    n5: int
    n7: int
    r1: int
    r2: int
    r3: int
    r: int
    r_combined: int
    formula_note: str | None = None

    def to_dict(self) -> dict:
        return {
            "max_syllables": self.max_syllables,
            "min_syllables": self.min_syllables,
            "n1": self.n1,
            "n2": self.n2,
            "n3": self.n3,
            "n5": self.n5,
            "n7": self.n7,
            "r1": self.r1,
            "r2": self.r2,
            "r3": self.r3,
            "r": self.r,
            "r_combined": self.r_combined,
            "formula_note": self.formula_note,
        }


def compute_band(words: list[Word]) -> BandReport:
    """Max = total vowels; Min = Max - r, floored at one syllable."""
    if not words:
        raise EmptyInput("cannot band an empty word list")
    max_syll = sum(w.vowel_count for w in words)
    n1, n2, n3, n5, n7 = count_sets(words)
    r1 = compute_r1(n1, n2, n3)
    r2 = compute_r2(n1, n2, n5)
    r3 = compute_r3(n1, n2, n7)
    r = compute_r(n1, n2, n3, n5, n7)
    r_combined = compute_r_combined(n1, n2, n3, n5, n7)
    # a verse keeps at least one syllable, and r cannot exceed Max - 1
    r = min(r, max_syll - 1) if max_syll > 1 else 0
    r_combined = min(r_combined, max_syll - 1) if max_syll > 1 else 0
    note = FORMULA_GAP_NOTE if r != r_combined else None
    return BandReport(
        max_syllables=max_syll,
        min_syllables=max(1, max_syll - r),
        n1=n1,
        n2=n2,
        n3=n3,
        n5=n5,
        n7=n7,
        r1=r1,
        r2=r2,
        r3=r3,
        r=r,
        r_combined=r_combined,
        formula_note=note,
    )
