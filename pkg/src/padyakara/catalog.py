"""The metre database: loading, band filtering, and pattern matching.

Catalog file format (UTF-8, line oriented, '#' comments):

    name|family|count-or-matras|patterns|aliases

  family    sama, ardhasama, visama or jati
  varna     count = syllables per quarter (1..26); patterns are l/g/x strings
            (spaces cosmetic, 'x' = unconstrained position), comma-separated:
            one template for sama, two for ardhasama, four for visama
  jati      matras = quarter-instant totals joined by '+' (two values for the
            half-verse schemes, four for quarter schemes); patterns unused
  aliases   optional comma-separated alternative names

Verse patterns may carry '*' at optionally-long positions; a '*' matches a
template position at no cost and resolves to the template's symbol. Distance
between a pattern and a template is unit-cost Levenshtein over {l, g} with
'*'/'x' matching anything. Upajāti, the mixture of Indravajrā and
Upendravajrā quarters, is computed from its constituents rather than stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from .phonology import OPTIONAL, matra_range

SAMA = "sama"
ARDHASAMA = "ardhasama"
VISAMA = "visama"
JATI = "jati"
FAMILIES = (SAMA, ARDHASAMA, VISAMA, JATI)

_TEMPLATE_COUNT = {SAMA: 1, ARDHASAMA: 2, VISAMA: 4}
MAX_PADA_SYLLABLES = 26  # longer quarters are dandaka metres, out of scope

UPAJATI_CONSTITUENTS = ("Indravajrā", "Upendravajrā")
UPAJATI_NAME = "Upajāti"


class CatalogError(Exception):
    pass


class ParseError(CatalogError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class DuplicateEntry(CatalogError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate catalog entry: {name}")


class PatternLengthMismatch(CatalogError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"template length does not match syllable count: {name}")


class EmptyCatalogView(CatalogError):
    def __init__(self):
        super().__init__("no catalog entries to match against")


@dataclass(frozen=True)
class MetreRecord:
    name: str
    family: str
    pada_patterns: tuple[str, ...] = ()
    syllables_per_pada: int | None = None
    matra_scheme: tuple[int, ...] = ()
    aliases: tuple[str, ...] = ()

    @property
    def pada_lengths(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.pada_patterns)


@dataclass(frozen=True)
class MatchResult:
    record: MetreRecord
    resolution: tuple[dict[int, str], ...] = ()
    exact: bool = False
    distance: int = 0
    padas_differing: int = 0

    def sort_key(self) -> tuple:
        return (not self.exact, self.distance, self.padas_differing, self.record.name)


@dataclass
class Catalog:
    records: list[MetreRecord]
    band: tuple[int, int] | None = None

    def __len__(self) -> int:
        return len(self.records)

    def by_family(self, family: str) -> list[MetreRecord]:
        return [r for r in self.records if r.family == family]

    def find(self, name: str) -> MetreRecord | None:
        for r in self.records:
            if r.name == name or name in r.aliases:
                return r
        return None


def _parse_pattern(raw: str, line_no: int) -> str:
    pattern = raw.replace(" ", "")
    for ch in pattern:
        if ch not in ("l", "g", "x"):
            raise ParseError(line_no, f"bad pattern symbol {ch!r}")
    return pattern


def parse_catalog(text: str) -> Catalog:
    records: list[MetreRecord] = []
    seen: set[tuple[str, str]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split("|")]
        if len(fields) < 4:
            raise ParseError(line_no, "expected name|family|count|patterns[|aliases]")
        name, family, count_field, patterns_field = fields[:4]
        aliases = tuple(a.strip() for a in fields[4].split(",") if a.strip()) if len(fields) > 4 else ()
        if family not in FAMILIES:
            raise ParseError(line_no, f"unknown family {family!r}")
        key = (name, family)
        if key in seen:
            raise DuplicateEntry(name)
        seen.add(key)

        if family == JATI:
            try:
                scheme = tuple(int(p) for p in count_field.split("+"))
            except ValueError:
                raise ParseError(line_no, f"bad matra scheme {count_field!r}")
            if len(scheme) not in (2, 4) or any(m <= 0 for m in scheme):
                raise ParseError(line_no, "matra scheme needs 2 or 4 positive totals")
            records.append(MetreRecord(name, family, (), None, scheme, aliases))
            continue

        try:
            count = int(count_field)
        except ValueError:
            raise ParseError(line_no, f"bad syllable count {count_field!r}")
        if count < 1 or count > MAX_PADA_SYLLABLES:
            raise ParseError(
                line_no, f"{count} syllables per quarter is outside 1..{MAX_PADA_SYLLABLES}"
            )
        patterns = tuple(
            _parse_pattern(p, line_no) for p in patterns_field.split(",") if p.strip()
        )
        if len(patterns) != _TEMPLATE_COUNT[family]:
            raise ParseError(
                line_no, f"{family} needs {_TEMPLATE_COUNT[family]} template(s), got {len(patterns)}"
            )
        if any(not 1 <= len(p) <= MAX_PADA_SYLLABLES for p in patterns):
            raise ParseError(line_no, "template length outside 1..26")
        if family == SAMA and any(len(p) != count for p in patterns):
            raise PatternLengthMismatch(name)
        records.append(MetreRecord(name, family, patterns, count, (), aliases))
    return Catalog(records)


def load_catalog(source: str | Path) -> Catalog:
    return parse_catalog(Path(source).read_text(encoding="utf-8"))


def band_filter(catalog: Catalog, min_syll: int, max_syll: int) -> Catalog:
    """Entries whose quarters can fit inside [min_syll, max_syll] syllables."""
    if not 1 <= min_syll <= max_syll:
        raise ValueError("need 1 <= min_syll <= max_syll")
    kept: list[MetreRecord] = []
    for rec in catalog.records:
        if rec.family == JATI:
            total = sum(rec.matra_scheme)
            lo, hi = (total + 1) // 2, total  # a quarter of M matras spans ceil(M/2)..M syllables
            if lo <= 4 * max_syll and hi >= 4 * min_syll:
                kept.append(rec)
        else:
            if all(min_syll <= len(p) <= max_syll for p in rec.pada_patterns):
                kept.append(rec)
    return Catalog(kept, band=(min_syll, max_syll))


def symbols_match(pattern_sym: str, template_sym: str) -> bool:
    return pattern_sym == template_sym or pattern_sym == OPTIONAL or template_sym == "x"


def template_match(pattern: str, template: str) -> dict[int, str] | None:
    """Exact match of one quarter against one template; returns the
    resolution chosen for each optional position, or None."""
    if len(pattern) != len(template):
        return None
    resolution: dict[int, str] = {}
    for i, (p, t) in enumerate(zip(pattern, template)):
        if not symbols_match(p, t):
            return None
        if p == OPTIONAL:
            resolution[i] = t if t in ("l", "g") else "l"
    return resolution


@lru_cache(maxsize=65536)
def pattern_distance(pattern: str, template: str) -> int:
    """Unit-cost edit distance; '*' and 'x' positions match anything freely."""
    m, n = len(pattern), len(template)
    prev = list(range(n + 1))
    for i in range(1, m + 1):
        cur = [i] + [0] * n
        p = pattern[i - 1]
        for j in range(1, n + 1):
            same = symbols_match(p, template[j - 1])
            cur[j] = min(
                prev[j] + 1,
                cur[j - 1] + 1,
                prev[j - 1] + (0 if same else 1),
            )
        prev = cur
    return prev[n]


def _verse_result(record: MetreRecord, patterns: list[str], templates: list[str]) -> MatchResult:
    """Score four quarters against four templates (one per quarter)."""
    resolutions: list[dict[int, str]] = []
    distance = 0
    differing = 0
    exact = True
    for p, t in zip(patterns, templates):
        res = template_match(p, t)
        if res is None:
            exact = False
            d = pattern_distance(p, t)
            distance += d
            if d:
                differing += 1
            resolutions.append({i: "l" for i, s in enumerate(p) if s == OPTIONAL})
        else:
            resolutions.append(res)
    return MatchResult(record, tuple(resolutions), exact, distance, differing)


def match_sama(pattern: str, view: Catalog) -> list[MatchResult]:
    """Match one quarter's pattern against the sama table, exact first."""
    results = []
    for rec in view.by_family(SAMA):
        results.append(_verse_result(rec, [pattern], [rec.pada_patterns[0]]))
    results.sort(key=MatchResult.sort_key)
    return results


def match_sama_verse(patterns: list[str], view: Catalog) -> list[MatchResult]:
    results = []
    for rec in view.by_family(SAMA):
        results.append(_verse_result(rec, patterns, [rec.pada_patterns[0]] * len(patterns)))
    results.sort(key=MatchResult.sort_key)
    return results


def upajati_record(view: Catalog) -> MetreRecord | None:
    a = view.find(UPAJATI_CONSTITUENTS[0])
    b = view.find(UPAJATI_CONSTITUENTS[1])
    if a is None or b is None:
        return None
    return MetreRecord(
        UPAJATI_NAME,
        SAMA,
        (a.pada_patterns[0], b.pada_patterns[0]),
        a.syllables_per_pada,
    )


def match_upajati(patterns: list[str], view: Catalog) -> list[MatchResult]:
    """Quarters drawn from the two constituent templates; a pure verse keeps
    the constituent's own name."""
    rec = upajati_record(view)
    if rec is None or len(patterns) != 4:
        return []
    t_a, t_b = rec.pada_patterns
    choices: list[tuple[str, dict[int, str]] | None] = []
    for p in patterns:
        res_a = template_match(p, t_a)
        if res_a is not None:
            choices.append(("a", res_a))
            continue
        res_b = template_match(p, t_b)
        choices.append(("b", res_b) if res_b is not None else None)
    if any(c is None for c in choices):
        return []
    kinds = {c[0] for c in choices}
    resolutions = tuple(c[1] for c in choices)
    if kinds == {"a"}:
        base = view.find(UPAJATI_CONSTITUENTS[0])
        return [MatchResult(base, resolutions, True, 0)]
    if kinds == {"b"}:
        base = view.find(UPAJATI_CONSTITUENTS[1])
        return [MatchResult(base, resolutions, True, 0)]
    return [MatchResult(rec, resolutions, True, 0)]


def match_ardhasama(patterns: list[str], view: Catalog) -> list[MatchResult]:
    """First and third quarters follow template A, second and fourth B."""
    if len(patterns) != 4:
        return []
    results = []
    for rec in view.by_family(ARDHASAMA):
        a, b = rec.pada_patterns
        results.append(_verse_result(rec, patterns, [a, b, a, b]))
    results.sort(key=MatchResult.sort_key)
    return results


def match_visama(patterns: list[str], view: Catalog) -> list[MatchResult]:
    if len(patterns) != 4:
        return []
    results = []
    for rec in view.by_family(VISAMA):
        results.append(_verse_result(rec, patterns, list(rec.pada_patterns)))
    results.sort(key=MatchResult.sort_key)
    return results


def _scheme_quarters(scheme: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Quarter groupings a scheme constrains: halves pair quarters (1,2), (3,4)."""
    if len(scheme) == 4:
        return [(0,), (1,), (2,), (3,)]
    return [(0, 1), (2, 3)]


def match_jati(
    patterns: list[str],
    resolutions: list[dict[int, str]] | None,
    view: Catalog,
) -> list[MatchResult]:
    """Match quarter patterns against matra-total schemes.

    With explicit resolutions the instant counts are fixed; otherwise each
    optional position may count one or two, and a scheme total is satisfied if
    it falls inside the reachable range.
    """
    if len(patterns) != 4:
        return []
    from .phonology import matra_count

    if resolutions is not None:
        fixed = [matra_count(p, r) for p, r in zip(patterns, resolutions)]
        ranges = [(f, f) for f in fixed]
    else:
        ranges = [matra_range(p) for p in patterns]

    results = []
    for rec in view.by_family(JATI):
        distance = 0
        differing = 0
        for scheme_total, quarter_ids in zip(rec.matra_scheme, _scheme_quarters(rec.matra_scheme)):
            lo = sum(ranges[q][0] for q in quarter_ids)
            hi = sum(ranges[q][1] for q in quarter_ids)
            if scheme_total < lo:
                d = lo - scheme_total
            elif scheme_total > hi:
                d = scheme_total - hi
            else:
                d = 0
            distance += d
            if d:
                differing += 1
        reslns = tuple(
            {i: "l" for i, s in enumerate(p) if s == OPTIONAL} if resolutions is None else resolutions[k]
            for k, p in enumerate(patterns)
        )
        results.append(MatchResult(rec, reslns, distance == 0, distance, differing))
    results.sort(key=MatchResult.sort_key)
    return results


def closest(patterns: list[str], view: Catalog) -> MatchResult:
    """Minimal-distance record over the whole view; ties break on fewer
    differing quarters, then name."""
    if not view.records:
        raise EmptyCatalogView()
    candidates: list[MatchResult] = []
    if len(patterns) == 4:
        candidates.extend(match_sama_verse(patterns, view))
        candidates.extend(match_upajati(patterns, view))
        candidates.extend(match_ardhasama(patterns, view))
        candidates.extend(match_visama(patterns, view))
        candidates.extend(match_jati(patterns, None, view))
        # near-miss mixture of the upajati constituents (exact mixtures are
        # already covered by match_upajati above)
        rec = upajati_record(view)
        if rec is not None:
            t_a, t_b = rec.pada_patterns
            per_pada = [
                min(pattern_distance(p, t_a), pattern_distance(p, t_b)) for p in patterns
            ]
            candidates.append(
                MatchResult(rec, (), False, sum(per_pada), sum(1 for d in per_pada if d))
            )
    else:
        candidates.extend(match_sama(patterns[0], view))
    if not candidates:
        raise EmptyCatalogView()
    return min(candidates, key=MatchResult.sort_key)
