import itertools

import pytest

from padyakara.catalog import (
    Catalog,
    DuplicateEntry,
    EmptyCatalogView,
    MatchResult,
    ParseError,
    PatternLengthMismatch,
    band_filter,
    closest,
    match_ardhasama,
    match_jati,
    match_sama,
    match_sama_verse,
    match_upajati,
    match_visama,
    parse_catalog,
    pattern_distance,
    template_match,
)

INDRAVAJRA = "gglggllglgg"
UPENDRAVAJRA = "lglggllglgg"


def synthetic_catalog(per_count=5, counts=range(5, 25)):
    lines = []
    for n in counts:
        for k in range(per_count):
            lines.append(f"M{n:02d}{chr(97 + k)}|sama|{n}|{'g' * n}|")
    return parse_catalog("\n".join(lines))


def test_load_seed_entry(catalog):
    rec = catalog.find("Indravajrā")
    assert rec is not None
    assert rec.family == "sama"
    assert rec.syllables_per_pada == 11
    assert rec.pada_patterns == (INDRAVAJRA,)


def test_parse_single_line():
    c = parse_catalog("Indravajrā|sama|11|ggl ggl lgl gg")
    assert len(c) == 1
    assert c.records[0].pada_patterns == (INDRAVAJRA,)


def test_empty_catalog_is_valid():
    assert len(parse_catalog("")) == 0
    assert len(parse_catalog("# only a comment\n")) == 0


def test_dandaka_rejected():
    with pytest.raises(ParseError):
        parse_catalog(f"Big|sama|27|{'g' * 27}|")


def test_duplicate_rejected():
    text = "A|sama|2|gg|\nA|sama|2|ll|"
    with pytest.raises(DuplicateEntry):
        parse_catalog(text)


def test_length_mismatch_rejected():
    with pytest.raises(PatternLengthMismatch):
        parse_catalog("A|sama|3|gg|")


def test_bad_symbol_rejected():
    with pytest.raises(ParseError):
        parse_catalog("A|sama|2|gq|")


def test_load_idempotent(catalog):
    from padyakara.cli import default_catalog

    again = default_catalog()
    assert [r.name for r in again.records] == [r.name for r in catalog.records]
    assert [r.pada_patterns for r in again.records] == [r.pada_patterns for r in catalog.records]


def test_band_filter_window():
    c = synthetic_catalog(per_count=1, counts=range(8, 27))
    view = band_filter(c, 11, 12)
    assert sorted(r.syllables_per_pada for r in view.records) == [11, 12]


def test_band_filter_identity():
    c = synthetic_catalog(per_count=1)
    view = band_filter(c, 1, 26)
    assert len(view) == len(c)


def test_band_filter_hundred_entry_scenario():
    c = synthetic_catalog()  # 20 counts x 5 entries = 100
    assert len(c) == 100
    view = band_filter(c, 11, 12)
    assert len(view) == 10  # 90% pruned


def test_band_filter_soundness_and_completeness():
    c = synthetic_catalog(per_count=2)
    lo, hi = 9, 14
    view = band_filter(c, lo, hi)
    kept = {r.name for r in view.records}
    for r in c.records:
        inside = lo <= r.syllables_per_pada <= hi
        assert (r.name in kept) == inside


def test_band_filter_jati_intersection(catalog):
    # Āryā: 57 instants -> 29..57 syllables for the whole verse
    view = band_filter(catalog, 8, 14)  # verse window 32..56 intersects
    assert view.find("Āryā") is not None
    view = band_filter(catalog, 1, 2)  # verse window 4..8 does not
    assert view.find("Āryā") is None


def test_match_sama_exact(catalog):
    results = match_sama(INDRAVAJRA, catalog)
    assert results[0].record.name == "Indravajrā"
    assert results[0].exact and results[0].distance == 0


def test_match_sama_upendra(catalog):
    results = match_sama(UPENDRAVAJRA, catalog)
    assert results[0].record.name == "Upendravajrā"
    assert results[0].exact


def test_match_sama_wildcard_resolution(catalog):
    pattern = INDRAVAJRA[:-1] + "*"
    results = match_sama(pattern, catalog)
    top = results[0]
    assert top.record.name == "Indravajrā" and top.exact
    assert top.resolution[0][10] == "g"


def test_match_upajati_mixed(catalog):
    padas = [INDRAVAJRA, INDRAVAJRA, UPENDRAVAJRA, INDRAVAJRA]
    results = match_upajati(padas, catalog)
    assert results and results[0].record.name == "Upajāti" and results[0].exact


def test_match_upajati_pure_cases(catalog):
    pure_i = match_upajati([INDRAVAJRA] * 4, catalog)
    assert pure_i[0].record.name == "Indravajrā"
    pure_u = match_upajati([UPENDRAVAJRA] * 4, catalog)
    assert pure_u[0].record.name == "Upendravajrā"


def test_match_ardhasama_from_record(catalog):
    rec = catalog.find("Anuṣṭubh")
    a, b = rec.pada_patterns
    concrete_a = a.replace("x", "g")
    concrete_b = b.replace("x", "l")
    results = match_ardhasama([concrete_a, concrete_b, concrete_a, concrete_b], catalog)
    assert results[0].record.name == "Anuṣṭubh" and results[0].exact


def test_match_ardhasama_same_pattern_everywhere_fails(catalog):
    rec = catalog.find("Anuṣṭubh")
    a = rec.pada_patterns[0].replace("x", "g")
    results = match_ardhasama([a, a, a, a], catalog)
    assert not results[0].exact


def test_match_ardhasama_one_flip_distance(catalog):
    rec = catalog.find("Anuṣṭubh")
    a, b = (p.replace("x", "g") for p in rec.pada_patterns)
    # flip a constrained position of the fourth quarter
    b_bad = b[:6] + ("g" if b[6] == "l" else "l") + b[7:]
    results = match_ardhasama([a, b, a, b_bad], catalog)
    assert not results[0].exact
    assert results[0].distance == 1


def test_match_jati_totals(catalog):
    # Āryā halves: 30 + 27 instants; quarters below count 16+14 and 14+13
    patterns = ["g" * 8, "g" * 7, "g" * 7, "l" * 11 + "g"]
    results = match_jati(patterns, None, catalog)
    top = results[0]
    assert top.record.name == "Āryā" and top.exact


def test_match_jati_distance(catalog):
    # halves 30 and 26: one instant short on the second half
    patterns = ["g" * 8, "g" * 7, "g" * 7, "l" * 12]
    results = match_jati(patterns, None, catalog)
    assert results[0].distance == 1


def test_match_jati_empty():
    assert match_jati([], None, Catalog([])) == []


def test_closest_one_flip(catalog):
    # flipping the first symbol of Indravajrā lands exactly on Upendravajrā
    flipped_to_upendra = "l" + INDRAVAJRA[1:]
    assert flipped_to_upendra == UPENDRAVAJRA
    # a flip at the second position stays closest to Indravajrā, distance 1
    flipped = INDRAVAJRA[0] + "l" + INDRAVAJRA[2:]
    best = closest([flipped] * 4, catalog)
    assert best.record.name == "Indravajrā"
    assert best.distance == 4  # one per quarter
    best = closest([INDRAVAJRA, INDRAVAJRA, INDRAVAJRA, flipped], catalog)
    assert best.record.name == "Indravajrā"
    assert best.distance == 1


def test_closest_exact_is_zero(catalog):
    best = closest([INDRAVAJRA] * 4, catalog)
    assert best.distance == 0


def test_closest_length_mismatch_insertion(catalog):
    twelve = INDRAVAJRA + "g"
    c = parse_catalog("Indravajrā|sama|11|ggl ggl lgl gg|")
    best = closest([twelve] * 4, c)
    assert best.distance == 4  # one insertion per quarter


def test_closest_empty_view():
    with pytest.raises(EmptyCatalogView):
        closest([INDRAVAJRA] * 4, Catalog([]))


def test_closest_agrees_with_exhaustive_scan():
    c = parse_catalog(
        "\n".join(
            [
                "A|sama|4|gggg|",
                "B|sama|4|llll|",
                "C|sama|4|glgl|",
            ]
        )
    )
    for pattern in ("".join(p) for p in itertools.product("lg", repeat=4)):
        best = closest([pattern] * 4, c)
        brute = min(
            (sum(pattern_distance(pattern, r.pada_patterns[0]) for _ in range(4)), r.name)
            for r in c.records
        )
        assert best.distance == brute[0]


def test_wildcard_subset_property(catalog):
    """Adding a '*' where the template already agrees never loses matches."""
    base = match_sama(INDRAVAJRA, catalog)
    names = {r.record.name for r in base if r.exact}
    for i in range(len(INDRAVAJRA)):
        starred = INDRAVAJRA[:i] + "*" + INDRAVAJRA[i + 1 :]
        got = {r.record.name for r in match_sama(starred, catalog) if r.exact}
        assert names <= got


def test_template_match_x_positions():
    assert template_match("lg", "xx") == {}
    assert template_match("l*", "xg") == {1: "g"}
    assert template_match("gg", "gl") is None


def test_pattern_distance_unit_costs():
    assert pattern_distance("ggl", "ggl") == 0
    assert pattern_distance("ggl", "gll") == 1
    assert pattern_distance("gg", "ggl") == 1
    assert pattern_distance("*g", "lg") == 0
