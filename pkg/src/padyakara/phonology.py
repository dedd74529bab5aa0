"""Syllabification and light/heavy (laghu/guru) scansion.

A syllable is built around exactly one vowel: onset consonants attach forward,
an anusvara or visarga attaches back to the vowel it follows, and consonants
left over at the end of a stream attach to the last syllable.

Weight rules, applied over the flat letter stream of one verse quarter so that
consonant clusters are seen across word boundaries:

  long vowel                      -> g
  short vowel + anusvara          -> g
  short vowel + visarga           -> g
  short vowel + 2+ consonants     -> g   (except the clusters pr, br, kr and
                                          clusters starting with h, where the
                                          reading is optional)
  short vowel at the quarter end  -> optional
  otherwise                       -> l

Optional positions are carried as '*' in the pattern rather than forked into
two patterns; the metre matcher resolves them against a template.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .text_codec import Letter, ANUSVARA, AVAGRAHA, VISARGA

LAGHU = "l"
GURU = "g"
OPTIONAL = "*"

# clusters that license an optionally-short reading of the preceding vowel
_OPTIONAL_PAIRS = {("p", "r"), ("b", "r"), ("k", "r")}


class PhonologyError(Exception):
    pass


class NoVowel(PhonologyError):
    def __init__(self):
        super().__init__("fragment has no vowel and cannot be syllabified")


class UnresolvedOptional(PhonologyError):
    def __init__(self, pattern: str):
        self.pattern = pattern
        super().__init__(f"pattern {pattern!r} still contains optional positions")


class IncompleteResolution(PhonologyError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"no resolution given for optional position {index}")


@dataclass
class Syllable:
    letters: tuple[Letter, ...]
    weight: str = LAGHU
    optional_guru: bool = False
    final_in_pada: bool = False

    @property
    def text(self) -> str:
        return "".join(l.surface for l in self.letters)

    @property
    def vowel(self) -> Letter:
        for l in self.letters:
            if l.is_vowel:
                return l
        raise NoVowel()

    @property
    def symbol(self) -> str:
        return OPTIONAL if self.optional_guru else self.weight


def syllabify(letters: list[Letter] | tuple[Letter, ...]) -> list[Syllable]:
    """Group a letter stream into syllables, one per vowel."""
    groups: list[list[Letter]] = []
    pending: list[Letter] = []
    for letter in letters:
        if letter.is_vowel:
            groups.append(pending + [letter])
            pending = []
        elif letter.category in (ANUSVARA, VISARGA, AVAGRAHA) and groups and not pending:
            # attaches to the vowel it follows
            groups[-1].append(letter)
        else:
            pending.append(letter)
    if not groups:
        raise NoVowel()
    if pending:
        groups[-1].extend(pending)
    return [Syllable(tuple(g)) for g in groups]


def _vowel_index(stream: tuple[Letter, ...], start: int) -> int:
    for i in range(start, len(stream)):
        if stream[i].is_vowel:
            return i
    return -1


def weigh(syllables: list[Syllable], pada_final_index: int | None = None) -> str:
    """Assign weights and return the l/g/* pattern string.

    The syllables are treated as one contiguous stream (clusters are computed
    across syllable and word boundaries). `pada_final_index` marks the syllable
    that ends a verse quarter; a short syllable there becomes optional.
    """
    stream: list[Letter] = []
    vowel_positions: list[int] = []
    for syl in syllables:
        for letter in syl.letters:
            if letter.is_vowel:
                vowel_positions.append(len(stream))
            stream.append(letter)
    flat = tuple(stream)

    symbols: list[str] = []
    for i, syl in enumerate(syllables):
        vowel_pos = vowel_positions[i]
        vowel = flat[vowel_pos]
        weight, optional = LAGHU, False

        if vowel.category == "vowel-long":
            weight = GURU
        else:
            # letters after the vowel up to the next vowel (avagraha is inert)
            cluster: list[Letter] = []
            saw_mark = False
            for j in range(vowel_pos + 1, len(flat)):
                nxt = flat[j]
                if nxt.is_vowel:
                    break
                if nxt.category in (ANUSVARA, VISARGA):
                    saw_mark = True
                    break
                if nxt.category != AVAGRAHA:
                    cluster.append(nxt)
            if saw_mark:
                weight = GURU
            elif len(cluster) >= 2:
                head = cluster[0].glyph
                pair = (cluster[0].glyph, cluster[1].glyph)
                if head == "h" or (len(cluster) == 2 and pair in _OPTIONAL_PAIRS):
                    optional = True
                else:
                    weight = GURU

        if (
            pada_final_index is not None
            and i == pada_final_index
            and weight == LAGHU
        ):
            optional = True

        syl.weight = weight
        syl.optional_guru = optional
        syl.final_in_pada = pada_final_index is not None and i == pada_final_index
        symbols.append(OPTIONAL if optional else weight)
    return "".join(symbols)


@dataclass(frozen=True)
class GanaSequence:
    """Triplet feet plus a 0-2 symbol remainder."""

    ganas: str
    residue: str

    def __str__(self) -> str:
        return self.ganas + self.residue

    @property
    def spaced(self) -> str:
        return " ".join(list(self.ganas) + list(self.residue))


GANA_MAP = {
    "lgg": "y",
    "glg": "r",
    "ggl": "t",
    "gll": "b",
    "lgl": "j",
    "llg": "s",
    "ggg": "m",
    "lll": "n",
}
GANA_EXPANSION = {v: k for k, v in GANA_MAP.items()}


def to_ganas(pattern: str) -> GanaSequence:
    """Encode a concrete l/g pattern as triplet feet; the caller must resolve
    optional positions first."""
    if OPTIONAL in pattern:
        raise UnresolvedOptional(pattern)
    ganas = []
    usable = len(pattern) - len(pattern) % 3
    for i in range(0, usable, 3):
        ganas.append(GANA_MAP[pattern[i : i + 3]])
    return GanaSequence("".join(ganas), pattern[usable:])


def expand_ganas(ganas: str, residue: str = "") -> str:
    """Inverse of to_ganas for well-formed gana strings."""
    return "".join(GANA_EXPANSION[g] for g in ganas) + residue


def resolve(pattern: str, resolution: dict[int, str] | None = None) -> str:
    """Replace each '*' using the per-position choices in `resolution`."""
    if OPTIONAL not in pattern:
        return pattern
    out = []
    for i, sym in enumerate(pattern):
        if sym == OPTIONAL:
            if not resolution or i not in resolution:
                raise IncompleteResolution(i)
            out.append(resolution[i])
        else:
            out.append(sym)
    return "".join(out)


def matra_count(pattern: str, resolution: dict[int, str] | None = None) -> int:
    """Syllabic instants: one per short syllable, two per long."""
    concrete = resolve(pattern, resolution)
    return sum(1 if s == LAGHU else 2 for s in concrete)


def matra_range(pattern: str) -> tuple[int, int]:
    """(min, max) matra counts over all resolutions of the optional positions."""
    base = sum(1 if s in (LAGHU, OPTIONAL) else 2 for s in pattern)
    return base, base + pattern.count(OPTIONAL)


def grouped(pattern: str) -> str:
    """Display form with triplet spacing: 'gglggllglgg' -> 'ggl ggl lgl gg'."""
    return " ".join(pattern[i : i + 3] for i in range(0, len(pattern), 3))
