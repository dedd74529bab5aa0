"""IAST text codec: phoneme tokenization, letter classification, spelled-letter input.

The accepted alphabet is the romanized Sanskrit inventory (IAST). Multi-codepoint
phonemes (digraph stops like "kh", diphthongs "ai"/"au", ring-below vocalics like
"r̥") are matched longest-first, so a digraph is never split when one exists at a
position. Input text is normalized to Unicode NFC before matching; each Letter
keeps the surface spelling it arrived with, so rendering round-trips byte-exactly.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field

# letter categories
VOWEL_SHORT = "vowel-short"
VOWEL_LONG = "vowel-long"
CONSONANT = "consonant"
SIBILANT = "sibilant"
ASPIRATE = "aspirate"
ANUSVARA = "anusvara"
VISARGA = "visarga"
AVAGRAHA = "avagraha"

VOWEL_CATEGORIES = frozenset({VOWEL_SHORT, VOWEL_LONG})
# categories that close a syllable / count as "consonant" for word-shape rules
CONSONANT_CATEGORIES = frozenset({CONSONANT, SIBILANT, ASPIRATE, ANUSVARA, VISARGA})

SHORT_VOWELS = ("a", "i", "u", "ṛ", "ḷ")
LONG_VOWELS = ("ā", "ī", "ū", "ṝ", "e", "ai", "o", "au")
CONSONANTS = (
    "k", "kh", "g", "gh", "ṅ",
    "c", "ch", "j", "jh", "ñ",
    "ṭ", "ṭh", "ḍ", "ḍh", "ṇ",
    "t", "th", "d", "dh", "n",
    "p", "ph", "b", "bh", "m",
    "y", "r", "l", "v",
)
SIBILANTS = ("ś", "ṣ", "s")

AVAGRAHA_MARK = "'"

# canonical glyph -> category
_CATEGORY: dict[str, str] = {}
for _g in SHORT_VOWELS:
    _CATEGORY[_g] = VOWEL_SHORT
for _g in LONG_VOWELS:
    _CATEGORY[_g] = VOWEL_LONG
for _g in CONSONANTS:
    _CATEGORY[_g] = CONSONANT
for _g in SIBILANTS:
    _CATEGORY[_g] = SIBILANT
_CATEGORY["h"] = ASPIRATE
_CATEGORY["ṃ"] = ANUSVARA
_CATEGORY["ḥ"] = VISARGA
_CATEGORY[AVAGRAHA_MARK] = AVAGRAHA

# Accepted surface spellings that differ from the canonical glyph.  Vocalic r/l
# may arrive with a combining ring below (r̥, r̥̄, l̥) instead of the precomposed
# dot-below forms; the anusvara may arrive as dot-above ṁ.  Surfaces are kept.
_SURFACE_ALIASES: dict[str, str] = {
    "r̥": "ṛ",
    "r̥̄": "ṝ",
    "l̥": "ḷ",
    "ṁ": "ṃ",  # ṁ
}

_SURFACE_TO_CANON: dict[str, str] = {g: g for g in _CATEGORY}
_SURFACE_TO_CANON.update(_SURFACE_ALIASES)

# longest surface first so digraphs win over their prefixes
_SURFACES_BY_LENGTH = sorted(_SURFACE_TO_CANON, key=len, reverse=True)
_MAX_SURFACE_LEN = len(_SURFACES_BY_LENGTH[0])

DIACRITIC_TEXT = "diacritic-text"
SPELLED_LETTERS = "spelled-letters"


class CodecError(Exception):
    """Base error for text decoding problems."""


class UnknownCodepoint(CodecError):
    def __init__(self, position: int, fragment: str):
        self.position = position
        self.fragment = fragment
        super().__init__(f"unrecognized character {fragment!r} at position {position}")


class EmptyInput(CodecError):
    def __init__(self, message: str = "input contains no words"):
        super().__init__(message)


class UnmappedCapital(CodecError):
    def __init__(self, letter: str):
        self.letter = letter
        super().__init__(f"capital {letter!r} has no spelled-letter mapping")


class UnknownGlyph(CodecError):
    def __init__(self, glyph: str):
        self.glyph = glyph
        super().__init__(f"not an accepted phoneme: {glyph!r}")


@dataclass(frozen=True)
class Letter:
    """One phoneme. `glyph` is canonical IAST; `surface` is the spelling as written."""

    glyph: str
    category: str
    surface: str = ""

    def __post_init__(self):
        if not self.surface:
            object.__setattr__(self, "surface", self.glyph)

    @property
    def is_vowel(self) -> bool:
        return self.category in VOWEL_CATEGORIES

    @property
    def is_consonantal(self) -> bool:
        """True for anything that is not a vowel or the avagraha mark."""
        return self.category in CONSONANT_CATEGORIES


def make_letter(glyph: str, surface: str | None = None) -> Letter:
    canon = _SURFACE_TO_CANON.get(glyph)
    if canon is None:
        raise UnknownGlyph(glyph)
    return Letter(canon, _CATEGORY[canon], surface or glyph)


@dataclass
class Word:
    """A tokenized word: its phonemes plus the original spelling.

    `dual_number` stays None until the poet (or an override) resolves whether
    the word is a dual form; that flag gates the pragr̥hya sandhi exception.
    """

    lexeme: tuple[Letter, ...]
    surface: str
    dual_number: bool | None = None

    @property
    def initial_class(self) -> str:
        return self.lexeme[0].category

    @property
    def final_class(self) -> str:
        return self.lexeme[-1].category

    @property
    def vowel_count(self) -> int:
        return sum(1 for l in self.lexeme if l.is_vowel)

    def ends_with(self, *glyphs: str) -> bool:
        """True when the word's final canonical glyphs equal `glyphs`."""
        n = len(glyphs)
        if len(self.lexeme) < n:
            return False
        return tuple(l.glyph for l in self.lexeme[-n:]) == glyphs


@dataclass
class ProseInput:
    words: list[Word]
    source_mode: str = DIACRITIC_TEXT


def normalize(text: str) -> str:
    """Unicode canonical composition plus whitespace collapse."""
    return " ".join(unicodedata.normalize("NFC", text).split())


def _match_letters(word: str, offset: int) -> list[Letter]:
    letters: list[Letter] = []
    i = 0
    n = len(word)
    while i < n:
        for take in range(min(_MAX_SURFACE_LEN, n - i), 0, -1):
            chunk = word[i : i + take]
            canon = _SURFACE_TO_CANON.get(chunk)
            if canon is not None:
                letters.append(Letter(canon, _CATEGORY[canon], chunk))
                i += take
                break
        else:
            raise UnknownCodepoint(offset + i, word[i])
    return letters


def tokenize(text: str) -> ProseInput:
    """Split IAST text into words and decompose each word into phonemes.

    Raises UnknownCodepoint for anything outside the accepted alphabet
    (digits and punctuation other than the avagraha are rejected, not
    skipped) and EmptyInput for blank input.
    """
    norm = normalize(text)
    if not norm:
        raise EmptyInput()
    words: list[Word] = []
    offset = 0
    for surface in norm.split(" "):
        letters = _match_letters(surface, offset)
        words.append(Word(tuple(letters), surface))
        offset += len(surface) + 1
    return ProseInput(words)


def render(prose: ProseInput | list[Word]) -> str:
    words = prose.words if isinstance(prose, ProseInput) else prose
    return " ".join(w.surface for w in words)


def render_letters(letters: list[Letter] | tuple[Letter, ...]) -> str:
    return "".join(l.surface for l in letters)


def classify_letter(glyph: str) -> str:
    """Category of one phoneme (vowel-short, vowel-long, consonant, sibilant,
    aspirate, anusvara, visarga)."""
    canon = _SURFACE_TO_CANON.get(unicodedata.normalize("NFC", glyph))
    if canon is None:
        raise UnknownGlyph(glyph)
    return _CATEGORY[canon]


# Spelled-letter scheme: capitals call out diacritic letters, one token per
# letter, a blank token pauses between words.
SPELLED_CAPITALS = {
    "A": "ā",
    "I": "ī",
    "U": "ū",
    "F": "ṛ",
    "G": "ṅ",
    "Y": "ñ",
    "T": "ṭ",
    "D": "ḍ",
    "N": "ṇ",
    "S": "ś",
    "Z": "ṣ",
    "H": "ḥ",
    "M": "ṁ",  # ṁ
}


class InvalidSpelledToken(CodecError):
    def __init__(self, token: str):
        self.token = token
        super().__init__(f"spelled-letter token must be one ASCII letter, got {token!r}")


def decode_spelled(tokens: list[str]) -> str:
    """Decode a called-out letter sequence into an IAST string.

    Each token is a single ASCII letter; capitals map through the special
    character scheme (unmapped capitals are an error), lowercase letters map
    to themselves, and blank tokens separate words.
    """
    words: list[str] = []
    current: list[str] = []
    for token in tokens:
        token = token.strip()
        if token == "":
            if current:
                words.append("".join(current))
                current = []
            continue
        if len(token) != 1 or not token.isascii() or not token.isalpha():
            raise InvalidSpelledToken(token)
        if token.isupper():
            mapped = SPELLED_CAPITALS.get(token)
            if mapped is None:
                raise UnmappedCapital(token)
            current.append(mapped)
        else:
            current.append(token)
    if current:
        words.append("".join(current))
    return " ".join(words)


def parse_spelled_stream(text: str) -> list[str]:
    """Split raw spelled-mode input into tokens: one per line, or comma-separated;
    an empty token is a word pause."""
    tokens: list[str] = []
    for line in text.splitlines():
        if "," in line:
            tokens.extend(part.strip() for part in line.split(","))
        else:
            tokens.append(line.strip())
    return tokens
