"""Euphonic junction rules that matter for scansion.

Only the junction rewrites that can change syllable counts or weights are
implemented; each junction is resolved once, left to right, by the first rule
whose conditions hold. Unmatched junctions are legal and leave the words
separate. Vowel mergers can cascade through a merged unit because the unit's
final letters are re-examined at the next junction.

Rule order:
  1. savarna-dirgha   a/ā+a/ā -> ā; i/ī+i/ī -> ī; u/ū+u/ū -> ū
  2. guna             a/ā+i/ī -> e; a/ā+u/ū -> o; a/ā+ṛ -> ar
  3. vrddhi           a/ā+e/ai -> ai; a/ā+o/au -> au
  4. yan              i/ī|u/ū|ṛ + dissimilar vowel -> y|v|r + vowel
  5. ayadi            e|ai|o|au -> ay|āy|av|āv before vowels (e/o not before a)
  6. purvarupa        e/o + a -> e'/o'   (blocked for dual-number words)
  7. visarga          ahaḥ+ahaḥ -> aharahaḥ; -aḥ+a -> -o'; -aḥ+voiced -> -o;
                      -aḥ+vowel -> -a vowel; -āḥ+voiced -> -ā
  8. assimilation     t+ṭ-class -> ṭ; t+c-class -> c

A word ending in e/ī/ū may be a dual form (pragr̥hya), in which case vowel
sandhi before an initial a- must not apply; when the flag is unresolved the
engine asks, and in batch mode assumes the non-dual reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .text_codec import (
    ASPIRATE,
    AVAGRAHA_MARK,
    CONSONANT,
    Letter,
    SIBILANT,
    Word,
    make_letter,
    render_letters,
)

REMOVES_SYLLABLE = "removes-syllable"
CHANGES_WEIGHT = "changes-weight"
NEUTRAL = "neutral"

_A_KIND = {"a", "ā"}
_I_KIND = {"i", "ī"}
_U_KIND = {"u", "ū"}

_VOICED_CONSONANTS = {
    "g", "gh", "j", "jh", "ḍ", "ḍh", "d", "dh", "b", "bh",
    "ṅ", "ñ", "ṇ", "n", "m", "y", "r", "l", "v", "h",
}
_RETROFLEX_STOPS = {"ṭ", "ṭh", "ḍ", "ḍh", "ṇ"}
_PALATAL_STOPS = {"c", "ch", "j", "jh", "ñ"}

_PRAGRHYA_FINALS = {"e", "ī", "ū"}


@dataclass(frozen=True)
class SandhiRule:
    """A junction rule: identity, the metrical effect of its rewrite, and the
    two predicates that gate it."""

    rule_id: str
    weight_effect: str
    left_condition: str  # human-readable condition on the left final
    right_condition: str  # condition on the right initial


RULE_TABLE = [
    SandhiRule("savarna-dirgha", REMOVES_SYLLABLE, "final a/ā, i/ī or u/ū", "similar vowel"),
    SandhiRule("guna", REMOVES_SYLLABLE, "final a/ā", "i/ī, u/ū or ṛ"),
    SandhiRule("vrddhi", REMOVES_SYLLABLE, "final a/ā", "e/ai or o/au"),
    SandhiRule("yan", REMOVES_SYLLABLE, "final i/ī, u/ū or ṛ", "dissimilar vowel"),
    SandhiRule("ayadi", CHANGES_WEIGHT, "final e/ai/o/au", "vowel (e/o: other than a)"),
    SandhiRule("purvarupa", REMOVES_SYLLABLE, "final e/o, not dual", "initial a"),
    SandhiRule("visarga-aharahah", CHANGES_WEIGHT, "the word ahaḥ", "the word ahaḥ"),
    SandhiRule("visarga-o", REMOVES_SYLLABLE, "final -aḥ", "initial a"),
    SandhiRule("visarga-o-voiced", NEUTRAL, "final -aḥ", "voiced consonant"),
    SandhiRule("visarga-hiatus", CHANGES_WEIGHT, "final -aḥ", "vowel other than a"),
    SandhiRule("visarga-long-drop", NEUTRAL, "final -āḥ", "voiced sound"),
    SandhiRule("stutva", CHANGES_WEIGHT, "final t", "retroflex stop"),
    SandhiRule("scutva", CHANGES_WEIGHT, "final t", "palatal stop"),
]
RULES_BY_ID = {r.rule_id: r for r in RULE_TABLE}


@dataclass
class JunctionResolution:
    left_word: str
    right_word: str
    applied_rule: str | None = None
    weight_effect: str = NEUTRAL
    merged: bool = False
    needs_confirmation: bool = False
    question: str | None = None
    dual_applied: bool | None = None  # effective dual reading at a pragrhya junction


@dataclass
class Unit:
    """A maximal run of letters between unmerged word gaps."""

    letters: list[Letter]
    words: list[Word]

    @property
    def surface(self) -> str:
        return render_letters(self.letters)


@dataclass
class SandhiResult:
    units: list[Unit]
    trace: list[JunctionResolution]
    pending: list[JunctionResolution]

    @property
    def letters(self) -> list[Letter]:
        out: list[Letter] = []
        for u in self.units:
            out.extend(u.letters)
        return out

    @property
    def text(self) -> str:
        return " ".join(u.surface for u in self.units)

    @property
    def vowel_count(self) -> int:
        return sum(1 for l in self.letters if l.is_vowel)


def _is_pragrhya_junction(left_final: Letter, right_initial: Letter) -> bool:
    return left_final.glyph in _PRAGRHYA_FINALS and right_initial.glyph == "a"


def pragrhya_question(left: str, right: str) -> str:
    return (
        f"Is '{left}' a dual-number form? If so it keeps its final vowel "
        f"unchanged before '{right}'."
    )


def _rewrite(
    left: list[Letter], left_word: Word, right: Word
) -> tuple[str | None, str, bool, list[Letter], list[Letter]]:
    """Pick the first matching rule for one junction.

    Returns (rule_id, weight_effect, merged, new_left, new_right); for merged
    junctions new_right is empty and new_left is the merged stream.
    """
    lf = left[-1]
    rl = list(right.lexeme)
    ri = rl[0]

    def L(glyph: str) -> Letter:
        return make_letter(glyph)

    # 1. savarna-dirgha
    for kind, long_form in ((_A_KIND, "ā"), (_I_KIND, "ī"), (_U_KIND, "ū")):
        if lf.glyph in kind and ri.glyph in kind:
            return "savarna-dirgha", REMOVES_SYLLABLE, True, left[:-1] + [L(long_form)] + rl[1:], []

    # 2. guna
    if lf.glyph in _A_KIND:
        if ri.glyph in _I_KIND:
            return "guna", REMOVES_SYLLABLE, True, left[:-1] + [L("e")] + rl[1:], []
        if ri.glyph in _U_KIND:
            return "guna", REMOVES_SYLLABLE, True, left[:-1] + [L("o")] + rl[1:], []
        if ri.glyph == "ṛ":
            return "guna", REMOVES_SYLLABLE, True, left[:-1] + [L("a"), L("r")] + rl[1:], []
        # 3. vrddhi
        if ri.glyph in ("e", "ai"):
            return "vrddhi", REMOVES_SYLLABLE, True, left[:-1] + [L("ai")] + rl[1:], []
        if ri.glyph in ("o", "au"):
            return "vrddhi", REMOVES_SYLLABLE, True, left[:-1] + [L("au")] + rl[1:], []

    # 4. yan
    if ri.is_vowel:
        if lf.glyph in _I_KIND and ri.glyph not in _I_KIND:
            return "yan", REMOVES_SYLLABLE, True, left[:-1] + [L("y")] + rl, []
        if lf.glyph in _U_KIND and ri.glyph not in _U_KIND:
            return "yan", REMOVES_SYLLABLE, True, left[:-1] + [L("v")] + rl, []
        if lf.glyph == "ṛ" and ri.glyph != "ṛ":
            return "yan", REMOVES_SYLLABLE, True, left[:-1] + [L("r")] + rl, []

    # 5. ayadi (e/o yield to purvarupa before a)
    if ri.is_vowel:
        if lf.glyph == "e" and ri.glyph != "a":
            return "ayadi", CHANGES_WEIGHT, True, left[:-1] + [L("a"), L("y")] + rl, []
        if lf.glyph == "ai":
            return "ayadi", CHANGES_WEIGHT, True, left[:-1] + [L("ā"), L("y")] + rl, []
        if lf.glyph == "o" and ri.glyph != "a":
            return "ayadi", CHANGES_WEIGHT, True, left[:-1] + [L("a"), L("v")] + rl, []
        if lf.glyph == "au":
            return "ayadi", CHANGES_WEIGHT, True, left[:-1] + [L("ā"), L("v")] + rl, []

    # 6. purvarupa
    if lf.glyph in ("e", "o") and ri.glyph == "a":
        return "purvarupa", REMOVES_SYLLABLE, True, left + [L(AVAGRAHA_MARK)] + rl[1:], []

    # 7. visarga family
    ahah = ("a", "h", "a", "ḥ")
    if (
        tuple(l.glyph for l in left[-4:]) == ahah
        and tuple(l.glyph for l in left_word.lexeme) == ahah
        and tuple(l.glyph for l in right.lexeme) == ahah
    ):
        return "visarga-aharahah", CHANGES_WEIGHT, True, left[:-1] + [L("r")] + rl, []
    if lf.glyph == "ḥ" and len(left) >= 2:
        before = left[-2]
        if before.glyph == "a":
            if ri.glyph == "a":
                return "visarga-o", REMOVES_SYLLABLE, True, left[:-2] + [L("o"), L(AVAGRAHA_MARK)] + rl[1:], []
            if ri.glyph in _VOICED_CONSONANTS:
                return "visarga-o-voiced", NEUTRAL, False, left[:-2] + [L("o")], rl
            if ri.is_vowel:
                return "visarga-hiatus", CHANGES_WEIGHT, False, left[:-1], rl
        elif before.glyph == "ā" and (ri.is_vowel or ri.glyph in _VOICED_CONSONANTS):
            return "visarga-long-drop", NEUTRAL, False, left[:-1], rl

    # 8. final-t assimilation
    if lf.glyph == "t":
        if ri.glyph in _RETROFLEX_STOPS:
            return "stutva", CHANGES_WEIGHT, True, left[:-1] + [L("ṭ")] + rl, []
        if ri.glyph in _PALATAL_STOPS:
            return "scutva", CHANGES_WEIGHT, True, left[:-1] + [L("c")] + rl, []

    return None, NEUTRAL, False, left, rl


Overrides = dict[tuple[str, str], bool]


def apply_sequence(
    words: list[Word], overrides: Overrides | None = None
) -> SandhiResult:
    """Resolve every junction of a word sequence, left to right.

    `overrides` maps (left word surface, right word surface) pairs to a dual
    answer. Unresolved pragr̥hya junctions are listed as pending questions and
    default to the non-dual reading (the sandhi applies).
    """
    if not words:
        raise ValueError("apply_sequence needs at least one word")
    overrides = overrides or {}
    units: list[Unit] = [Unit(list(words[0].lexeme), [words[0]])]
    trace: list[JunctionResolution] = []
    pending: list[JunctionResolution] = []

    for right in words[1:]:
        unit = units[-1]
        last_word = unit.words[-1]
        resolution = JunctionResolution(last_word.surface, right.surface)

        dual: bool | None = None
        if _is_pragrhya_junction(unit.letters[-1], right.lexeme[0]):
            key = (last_word.surface, right.surface)
            resolution.question = pragrhya_question(last_word.surface, right.surface)
            if key in overrides:
                dual = overrides[key]
            elif last_word.dual_number is not None:
                dual = last_word.dual_number
            else:
                resolution.needs_confirmation = True
                pending.append(resolution)
                dual = False  # batch default: apply the sandhi
            resolution.dual_applied = dual

        if dual:
            units.append(Unit(list(right.lexeme), [right]))
        else:
            rule_id, effect, merged, new_left, new_right = _rewrite(
                unit.letters, last_word, right
            )
            resolution.applied_rule = rule_id
            resolution.weight_effect = effect
            resolution.merged = merged
            if merged:
                unit.letters = new_left
                unit.words.append(right)
            else:
                unit.letters = new_left
                units.append(Unit(new_right, [right]))
        trace.append(resolution)

    return SandhiResult(units, trace, pending)


def join(
    left: Word, right: Word, dual_override: bool | None = None
) -> tuple[list[Letter], JunctionResolution]:
    """Resolve a single junction; returns the merged letter stream and how it
    was resolved."""
    overrides: Overrides = {}
    if dual_override is not None:
        overrides[(left.surface, right.surface)] = dual_override
    result = apply_sequence([left, right], overrides)
    return result.letters, result.trace[0]


def sensitive_pairs(words: list[Word]) -> list[tuple[str, str]]:
    """Ordered word pairs that would raise a pragr̥hya question if adjacent.

    Permutation search may place any pair side by side, so all such pairs are
    asked up front in interactive sessions, one question per distinct pair.
    """
    pairs: list[tuple[str, str]] = []
    seen: set[tuple[str, str]] = set()
    for i, a in enumerate(words):
        if a.dual_number is not None or a.lexeme[-1].glyph not in _PRAGRHYA_FINALS:
            continue
        for j, b in enumerate(words):
            if i == j or b.lexeme[0].glyph != "a":
                continue
            key = (a.surface, b.surface)
            if key not in seen:
                seen.add(key)
                pairs.append(key)
    return pairs
