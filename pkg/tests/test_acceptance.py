"""Acceptance suite: one test per release criterion, each printing a
PASS/FAIL line (run with -s to see them inline).

    pytest tests/test_acceptance.py -v -s
"""

import itertools
import random
import time

import pytest

from padyakara.band import compute_band, compute_r, compute_r_combined, count_sets
from padyakara.catalog import band_filter, parse_catalog
from padyakara.composer import (
    CompositionRequest,
    MATCHED,
    compose,
    pada_band,
    scan_verse,
)
from padyakara.phonology import grouped, syllabify, weigh
from padyakara.sandhi import apply_sequence
from padyakara.text_codec import ProseInput, tokenize

from conftest import (
    HALF_HEAVY,
    HALF_LIGHT,
    LEXICON,
    VERSE_LINES,
    VERSE_ROWS,
    W_EVEN,
    W_EVEN2,
    W_ODD,
    W_ODD2,
)
from oracle import oracle_verdict


def _report(name):
    print(f"\nACCEPTANCE PASS: {name}")


# ---------------------------------------------------------------- criterion 1

def test_table_verse_reproduction(catalog):
    """Scanning the sample verse yields the published weight rows and the
    mixed-quarter verdict, within 10 ms."""
    scan_verse(VERSE_LINES, catalog)  # warm caches
    start = time.perf_counter()
    scan = scan_verse(VERSE_LINES, catalog)
    elapsed = time.perf_counter() - start
    rows = [grouped(p.pattern) for p in scan.padas]
    assert rows == VERSE_ROWS
    assert scan.verdict is not None and scan.verdict.exact
    assert scan.verdict.record.name == "Upajāti"
    assert elapsed < 0.010, f"scan took {elapsed * 1000:.2f} ms"
    _report("Table II reproduction (bit-exact rows, Upajāti, <10 ms)")


# ---------------------------------------------------------------- criterion 2

def test_worked_example_counts():
    sentences = [
        ("idānīm atra ālasyam tyaktvā aham paṭhāmi ca likhāmi ca",
         dict(n1=3, n2=5, n3=1)),
        ("ambaraḥ na atra asti parantu ambaraḥ anyatra asti ataḥ aham itaḥ tatra gacchāmi",
         dict(n1=1, n2=4, n3=4, n5=4)),
        ("kr̥ṣṇaḥ idānīm atra ālasyam tyaktvā paṭhati ca likhati ca",
         dict(n1=2, n2=5, n3=1, n7=1)),
    ]
    for sentence, expected in sentences:
        n1, n2, n3, n5, n7 = count_sets(tokenize(sentence).words)
        got = dict(n1=n1, n2=n2, n3=n3, n5=n5, n7=n7)
        for key, value in expected.items():
            assert got[key] == value, (sentence, key, got)
    _report("word-class counts for the three worked sentences (bit-exact)")


# ---------------------------------------------------------------- criterion 3

SANDHI_GOLDENS = [
    (("tat", "ṭīkā"), None, "taṭṭīkā", "changes-weight"),
    (("phale", "atra"), False, "phale'tra", "removes-syllable"),
    (("phale", "atra"), True, "phale atra", "neutral"),
    (("itaḥ", "ambaraḥ"), None, "ito'mbaraḥ", "removes-syllable"),
    (("tatra", "ambaraḥ"), None, "tatrāmbaraḥ", "removes-syllable"),
    (("ambaraḥ", "itaḥ"), None, "ambara itaḥ", "changes-weight"),
    (("kr̥ṣṇaḥ", "aham"), None, "kr̥ṣṇo'ham", "removes-syllable"),
    (("kr̥ṣṇaḥ", "idānīm"), None, "kr̥ṣṇa idānīm", "changes-weight"),
    (("kau", "ūrudvayam"), None, "kāvūrudvayam", "changes-weight"),
    (("ahaḥ", "ahaḥ"), None, "aharahaḥ", "changes-weight"),
]


def test_sandhi_golden_set():
    for (left, right), dual, expected, effect in SANDHI_GOLDENS:
        words = [tokenize(left).words[0], tokenize(right).words[0]]
        overrides = {(left, right): dual} if dual is not None else {}
        result = apply_sequence(words, overrides)
        assert result.text == expected, (left, right, result.text)
        got_effect = result.trace[0].weight_effect
        assert got_effect == effect, (left, right, got_effect)
    _report("sandhi golden set (bit-exact surfaces and weight effects)")


# ---------------------------------------------------------------- criterion 4

def test_band_soundness_brute_force():
    """200 random inputs of up to 7 words: every permutation's post-junction
    vowel count stays inside [Min, Max]. The draw pool deliberately has no
    vowel-initial -aḥ words; see tests/conftest.py."""
    rng = random.Random(20260808)
    words = {s: tokenize(s).words[0] for s in LEXICON}
    start = time.perf_counter()
    checked = 0
    for _ in range(200):
        size = rng.randint(2, 7)
        picks = [words[rng.choice(LEXICON)] for _ in range(size)]
        report = compute_band(picks)
        seen = set()
        for perm in itertools.permutations(range(size)):
            key = tuple(picks[i].surface for i in perm)
            if key in seen:
                continue
            seen.add(key)
            count = apply_sequence([picks[i] for i in perm]).vowel_count
            checked += 1
            assert report.min_syllables <= count <= report.max_syllables, (
                [w.surface for w in picks], count, report,
            )
    elapsed = time.perf_counter() - start
    assert elapsed < 60, f"brute force took {elapsed:.1f} s"
    _report(
        f"band soundness: {checked} permutations across 200 inputs, "
        f"0 violations, {elapsed:.1f} s"
    )


# ---------------------------------------------------------------- criterion 5

def test_search_space_pruning_scenario():
    """A 48-vowel input with four possible reductions keeps only the 11- and
    12-syllable rows of a 100-entry catalog: 90% pruned."""
    catalog = parse_catalog("\n".join(
        f"M{n:02d}{chr(97 + k)}|sama|{n}|{'g' * n}|"
        for n in range(5, 25) for k in range(5)
    ))
    assert len(catalog) == 100
    sentence = "idānīm atra ālasyam tyaktvā aham paṭhāmi ca likhāmi ca"
    words = tokenize(sentence).words + [tokenize("marut").words[0]] * 14
    band = compute_band(words)
    assert band.max_syllables == 48
    assert band.r == 4
    assert band.min_syllables == 44
    lo, hi = pada_band(band)
    assert (lo, hi) == (11, 12)
    view = band_filter(catalog, lo, hi)
    assert len(view) == 10
    reduction = 1 - len(view) / len(catalog)
    assert reduction >= 0.85
    _report(f"search-space pruning: 100 -> {len(view)} entries ({reduction:.0%} pruned)")


# ---------------------------------------------------------------- criterion 6

def _constructed_inputs():
    rng = random.Random(4321)
    pool = LEXICON + [W_ODD, W_EVEN, W_ODD2, W_EVEN2, HALF_HEAVY, HALF_LIGHT]
    inputs = [
        [W_ODD, W_EVEN, W_ODD2, W_EVEN2],          # matches in given order
        [W_ODD, W_EVEN, W_ODD2, HALF_LIGHT, HALF_HEAVY],  # needs a reorder
        [W_EVEN, W_ODD, W_ODD2, W_EVEN2],          # needs a reorder
        ["rāma"],                                   # degenerate
        ["marut", "phalam"],                        # nothing close
    ]
    while len(inputs) < 50:
        size = rng.randint(2, 6)
        inputs.append([rng.choice(pool) for _ in range(size)])
    return inputs


def test_oracle_equivalence(catalog):
    agreements = 0
    for picks in _constructed_inputs():
        words = tokenize(" ".join(picks)).words
        verdict = oracle_verdict(words, catalog)
        result = compose(
            CompositionRequest(ProseInput(words), max_permutations=720), catalog
        )
        if result.status == MATCHED:
            got = f"matched:{result.metre.record.name}"
        elif result.metre is None:
            got = "closest:none"
        else:
            got = f"closest:{result.metre.distance}"
        assert got == verdict, (picks, got, verdict)
        agreements += 1
    _report(f"oracle equivalence on {agreements} constructed inputs (bit-exact verdicts)")


# ---------------------------------------------------------------- criterion 7

def test_rescan_closure(catalog):
    """Every verse the engine emits re-scans to the pattern it was matched
    against."""
    matched = 0
    for picks in _constructed_inputs():
        words = tokenize(" ".join(picks)).words
        result = compose(
            CompositionRequest(ProseInput(words), max_permutations=720), catalog
        )
        if result.status != MATCHED:
            continue
        matched += 1
        for pada in result.verse_padas:
            letters = [l for w in tokenize(pada.text).words for l in w.lexeme]
            syls = syllabify(letters)
            again = weigh(syls, pada_final_index=len(syls) - 1)
            assert again == pada.pattern, (picks, pada.text)
    table = compose(CompositionRequest(tokenize(" ".join(VERSE_LINES))), catalog)
    assert table.status == MATCHED
    for pada in table.verse_padas:
        letters = [l for w in tokenize(pada.text).words for l in w.lexeme]
        syls = syllabify(letters)
        assert weigh(syls, pada_final_index=len(syls) - 1) == pada.pattern
    matched += 1
    assert matched > 0
    _report(f"re-scan closure on {matched} matched verses (100%)")


# ---------------------------------------------------------------- criterion 8

def test_formula_consistency_exhaustive():
    """Composed r equals the one-shot shortcut on every tuple the shortcut's
    case analysis handles; the S7 blind spot at n1 = n2 (the documented
    n5 = 0 slice and its n5 > 0 sibling) is reported, never silently patched."""
    documented = sibling = 0
    for t in itertools.product(range(7), repeat=5):
        n1, n2, n3, n5, n7 = t
        composed, shortcut = compute_r(*t), compute_r_combined(*t)
        if n1 == n2 and n7 > 0:
            if composed != shortcut:
                if n5 == 0:
                    documented += 1
                else:
                    sibling += 1
        else:
            assert composed == shortcut, t
    assert documented > 0, "documented gap family must exist"
    # the gap surfaces in the report rather than being silently resolved
    report = compute_band(tokenize("kr̥ṣṇaḥ aham tyaktvā").words)  # n1=n2=1, n5=0, n7=1
    assert report.r != report.r_combined
    assert report.formula_note is not None
    _report(
        f"formula consistency over 7^5 tuples; gap reported on "
        f"{documented} documented + {sibling} sibling tuples"
    )
