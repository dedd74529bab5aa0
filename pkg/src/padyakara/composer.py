"""Prose-to-verse search.

Pipeline per permutation of the input words: resolve junctions, count
syllables, choose quarter splits, scan each quarter, and match against the
catalog narrowed to the syllable band. The given word order is always tried
first; other orders follow by increasing transposition distance from it, so
the verse stays as close to the prose sense as possible. The first exact match
wins; otherwise the closest record seen anywhere is reported together with
suggestions for getting there.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import catalog as cat
from .band import BandReport, compute_band
from .catalog import Catalog, MatchResult
from .phonology import Syllable, syllabify, weigh
from .sandhi import Overrides, SandhiResult, apply_sequence, sensitive_pairs
from .text_codec import EmptyInput, ProseInput, Word

BATCH = "batch"
INTERACTIVE = "interactive"

MATCHED = "matched"
CLOSEST_ONLY = "closest-only"
NEEDS_INPUT = "needs-input"

DEFAULT_MAX_PERMUTATIONS = 40320  # 8!


@dataclass
class CompositionRequest:
    prose: ProseInput
    mode: str = BATCH
    max_permutations: int = DEFAULT_MAX_PERMUTATIONS
    families_enabled: frozenset[str] = frozenset(cat.FAMILIES)
    overrides: Overrides = field(default_factory=dict)

    def __post_init__(self):
        if self.max_permutations < 1:
            raise ValueError("max_permutations must be >= 1")


@dataclass
class Suggestion:
    kind: str  # word-swap | word-replace | syllable-flip-hint
    detail: str
    required_pattern: str = ""
    swap: tuple[str, str] | None = None  # word surfaces to exchange in the draft
    pada: int | None = None  # 1-based quarter of the flagged syllable
    syllable: int | None = None  # 1-based syllable within the quarter

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "detail": self.detail,
            "required_pattern": self.required_pattern,
            "swap": list(self.swap) if self.swap else None,
            "pada": self.pada,
            "syllable": self.syllable,
        }


@dataclass
class PadaScan:
    text: str
    pattern: str
    syllables: list[Syllable]
    offsets: list[tuple[int, int]]


@dataclass
class CompositionResult:
    status: str
    band: BandReport
    permutation: tuple[int, ...]
    permutations_tried: int
    entries_total: int
    entries_in_band: int
    verse_padas: list[PadaScan] = field(default_factory=list)
    metre: MatchResult | None = None
    sandhi_trace: list = field(default_factory=list)
    suggestions: list[Suggestion] = field(default_factory=list)
    pending_questions: list = field(default_factory=list)
    prose_text: str = ""  # the words in their given order, junctions resolved
    prose_trace: list = field(default_factory=list)

    @property
    def verse_text(self) -> str:
        return "\n".join(p.text for p in self.verse_padas)


def pada_band(band: BandReport) -> tuple[int, int]:
    lo = max(1, band.min_syllables // 4)
    hi = max(lo, -(-band.max_syllables // 4))
    return lo, hi


def split_quarters(
    total: int,
    min_pada: int,
    max_pada: int,
    visama_shapes: tuple[tuple[int, ...], ...] = (),
) -> list[tuple[int, int, int, int]]:
    """Candidate quarter-length shapes for a verse of `total` syllables:
    the equal split first, then alternating (a, b, a, b) shapes inside the
    band, then the shapes of loaded visama records."""
    shapes: list[tuple[int, int, int, int]] = []
    if total >= 4 and total % 4 == 0:
        q = total // 4
        shapes.append((q, q, q, q))
    pairs = []
    for a in range(min_pada, max_pada + 1):
        rem = total - 2 * a
        if rem <= 0 or rem % 2:
            continue
        b = rem // 2
        if b != a and min_pada <= b <= max_pada:
            pairs.append((abs(a - b), a, b))
    for _, a, b in sorted(pairs):
        shapes.append((a, b, a, b))
    for shape in visama_shapes:
        if len(shape) == 4 and sum(shape) == total and shape not in shapes:
            shapes.append(tuple(shape))
    return shapes


def _sweep(sandhi: SandhiResult, records: Catalog, families: frozenset[str], lo: int, hi: int, closest: bool):
    """Yield (shape, equal_split, scans, exact, candidates) per realizable split."""
    total = sandhi.vowel_count
    visama_shapes = tuple(rec.pada_lengths for rec in records.by_family(cat.VISAMA))
    shapes = [
        (shape, shape[0] * 4 == total)
        for shape in split_quarters(total, lo, hi, visama_shapes)
    ]
    if cat.JATI in families and records.by_family(cat.JATI):
        known = {s for s, _ in shapes}
        for shape in boundary_shapes(sandhi.units):
            if shape not in known:
                shapes.append((shape, False))
    for shape, equal_split in shapes:
        scans = _pada_scans(sandhi.units, shape)
        if scans is None:
            continue
        patterns = [s.pattern for s in scans]
        exact, candidates = _family_matches(patterns, records, families, equal_split=equal_split)
        yield shape, equal_split, scans, exact, candidates
        if exact is not None and not closest:
            return


def boundary_shapes(units) -> list[tuple[int, int, int, int]]:
    """Every four-way cut of the unit sequence (used for matra-counted
    metres, whose quarters need not be syllable-regular)."""
    counts = [sum(1 for l in u.letters if l.is_vowel) for u in units]
    cums = list(itertools.accumulate(counts))
    total = cums[-1] if cums else 0
    interior = sorted(set(cums[:-1]))
    shapes = []
    for trio in itertools.combinations(interior, 3):
        a, b, c = trio
        shapes.append((a, b - a, c - b, total - c))
    return shapes


def _cayley_distance(perm: tuple[int, ...]) -> int:
    """Transpositions needed to reach `perm` from the identity."""
    seen = [False] * len(perm)
    cycles = 0
    for i in range(len(perm)):
        if not seen[i]:
            cycles += 1
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
    return len(perm) - cycles


def permutation_order(words: list[Word], limit: int) -> list[tuple[int, ...]]:
    """Identity first, then increasing transposition distance, ties in index
    order; permutations that repeat the same word sequence are dropped."""
    n = len(words)
    surfaces = [w.surface for w in words]
    if n <= 8:
        perms = sorted(itertools.permutations(range(n)), key=lambda p: (_cayley_distance(p), p))
    else:
        # too many to sort globally; lexicographic stream keeps identity first
        perms = itertools.permutations(range(n))
    out: list[tuple[int, ...]] = []
    seen: set[tuple[str, ...]] = set()
    for p in perms:
        key = tuple(surfaces[i] for i in p)
        if key in seen:
            continue
        seen.add(key)
        out.append(p)
        if len(out) >= limit:
            break
    return out


def _pada_scans(units, shape: tuple[int, ...]) -> list[PadaScan] | None:
    """Cut the unit sequence at the shape's cumulative syllable counts; a cut
    must land on a unit boundary (merged words cannot straddle quarters)."""
    unit_counts = [sum(1 for l in u.letters if l.is_vowel) for u in units]
    bounds = set(itertools.accumulate(shape[:-1]))
    padas: list[list] = [[]]
    cum = 0
    for unit, count in zip(units, unit_counts):
        padas[-1].append(unit)
        cum += count
        if cum in bounds:
            bounds.discard(cum)
            padas.append([])
    if bounds or len(padas) != len(shape) or not all(padas):
        return None
    scans: list[PadaScan] = []
    for pada_units, want in zip(padas, shape):
        letters = []
        offsets_map = []
        text_parts = []
        pos = 0
        for k, u in enumerate(pada_units):
            if k:
                pos += 1  # the joining space
            for letter in u.letters:
                offsets_map.append((pos, pos + len(letter.surface)))
                pos += len(letter.surface)
                letters.append(letter)
            text_parts.append(u.surface)
        syllables = syllabify(letters)
        if len(syllables) != want:
            return None
        pattern = weigh(syllables, pada_final_index=len(syllables) - 1)
        # char span of each syllable inside the pada text
        spans = []
        li = 0
        for syl in syllables:
            start = offsets_map[li][0]
            end = offsets_map[li + len(syl.letters) - 1][1]
            spans.append((start, end))
            li += len(syl.letters)
        scans.append(PadaScan(" ".join(text_parts), pattern, syllables, spans))
    return scans


def _family_matches(
    patterns: list[str], view: Catalog, families: frozenset[str], equal_split: bool
) -> tuple[MatchResult | None, list[MatchResult]]:
    """(first exact match honouring the family order, all candidates seen)."""
    candidates: list[MatchResult] = []
    order = []
    if equal_split:
        if cat.SAMA in families:
            order.append(cat.match_sama_verse(patterns, view))
            order.append(cat.match_upajati(patterns, view))
        if cat.ARDHASAMA in families:
            order.append(cat.match_ardhasama(patterns, view))
        if cat.VISAMA in families:
            order.append(cat.match_visama(patterns, view))
        if cat.JATI in families:
            order.append(cat.match_jati(patterns, None, view))
    else:
        if cat.ARDHASAMA in families:
            order.append(cat.match_ardhasama(patterns, view))
        if cat.VISAMA in families:
            order.append(cat.match_visama(patterns, view))
        if cat.JATI in families:
            order.append(cat.match_jati(patterns, None, view))
    for results in order:
        candidates.extend(results)
        for r in results:
            if r.exact:
                return r, candidates
    return None, candidates


def compose(request: CompositionRequest, catalog: Catalog) -> CompositionResult:
    """Run the verse search for one prose input."""
    words = request.prose.words
    if not words:
        raise EmptyInput()
    band = compute_band(words)
    lo, hi = pada_band(band)
    view = band_filter_enabled(catalog, lo, hi, request.families_enabled)

    identity = apply_sequence(words, request.overrides)
    questions = unresolved_questions(words, request.overrides)
    if request.mode == INTERACTIVE and questions:
        return CompositionResult(
            status=NEEDS_INPUT,
            band=band,
            permutation=tuple(range(len(words))),
            permutations_tried=0,
            entries_total=len(catalog),
            entries_in_band=len(view),
            pending_questions=questions,
            prose_text=identity.text,
            prose_trace=identity.trace,
        )

    full = Catalog(
        [r for r in catalog.records if r.family in request.families_enabled],
        band=(1, cat.MAX_PADA_SYLLABLES),
    )

    tried = 0
    order = permutation_order(words, request.max_permutations)
    for perm in order:
        tried += 1
        seq = [words[i] for i in perm]
        sandhi = apply_sequence(seq, request.overrides)
        for shape, equal_split, scans, exact, _ in _sweep(
            sandhi, view, request.families_enabled, lo, hi, closest=False
        ):
            if exact is not None:
                return CompositionResult(
                    status=MATCHED,
                    band=band,
                    permutation=perm,
                    permutations_tried=tried,
                    entries_total=len(catalog),
                    entries_in_band=len(view),
                    verse_padas=scans,
                    metre=exact,
                    sandhi_trace=sandhi.trace,
                    pending_questions=[],
                    prose_text=identity.text,
                    prose_trace=identity.trace,
                )

    # No exact match within budget: find the closest record over the whole
    # catalog, with no band restriction (the band only prunes the exact
    # search; it must never change the reported answer).
    best: MatchResult | None = None
    best_ctx: tuple[tuple[int, ...], SandhiResult, list[PadaScan]] | None = None
    for perm in order:
        seq = [words[i] for i in perm]
        sandhi = apply_sequence(seq, request.overrides)
        for shape, equal_split, scans, exact, candidates in _sweep(
            sandhi, full, request.families_enabled, 1, cat.MAX_PADA_SYLLABLES, closest=True
        ):
            for c in candidates:
                if best is None or c.sort_key() < best.sort_key():
                    best = c
                    best_ctx = (perm, sandhi, scans)

    if best is not None and best_ctx is not None:
        perm, sandhi, scans = best_ctx
        suggestions = make_suggestions(best, [words[i] for i in perm], scans, full, request.overrides)
        return CompositionResult(
            status=CLOSEST_ONLY,
            band=band,
            permutation=perm,
            permutations_tried=tried,
            entries_total=len(catalog),
            entries_in_band=len(view),
            verse_padas=scans,
            metre=best,
            sandhi_trace=sandhi.trace,
            suggestions=suggestions,
            prose_text=identity.text,
            prose_trace=identity.trace,
        )

    return CompositionResult(
        status=CLOSEST_ONLY,
        band=band,
        permutation=tuple(range(len(words))),
        permutations_tried=tried,
        entries_total=len(catalog),
        entries_in_band=len(view),
        sandhi_trace=identity.trace,
        prose_text=identity.text,
        prose_trace=identity.trace,
        suggestions=[
            Suggestion(
                "syllable-flip-hint",
                f"no quarter split fits {band.max_syllables} syllable(s) inside the "
                f"{lo}-{hi} per-quarter band; a verse needs four quarters",
            )
        ],
    )


def band_filter_enabled(
    catalog: Catalog, lo: int, hi: int, families: frozenset[str]
) -> Catalog:
    view = cat.band_filter(catalog, lo, hi)
    if families != frozenset(cat.FAMILIES):
        view = Catalog([r for r in view.records if r.family in families], view.band)
    return view


def unresolved_questions(words: list[Word], overrides: Overrides) -> list[dict]:
    out = []
    for left, right in sensitive_pairs(words):
        if (left, right) not in overrides:
            from .sandhi import pragrhya_question

            out.append({"left": left, "right": right, "question": pragrhya_question(left, right)})
    return out


def _record_templates(result: MatchResult, scans: list[PadaScan], pada_count: int) -> list[str]:
    rec = result.record
    if rec.family == cat.SAMA:
        if len(rec.pada_patterns) == 1:
            return [rec.pada_patterns[0]] * pada_count
        # derived upajati record: pick the closer constituent per quarter
        t_a, t_b = rec.pada_patterns
        return [
            t_a
            if cat.pattern_distance(s.pattern, t_a) <= cat.pattern_distance(s.pattern, t_b)
            else t_b
            for s in scans
        ]
    if rec.family == cat.ARDHASAMA:
        a, b = rec.pada_patterns
        return [a, b, a, b][:pada_count]
    if rec.family == cat.VISAMA:
        return list(rec.pada_patterns)[:pada_count]
    return []


def make_suggestions(
    best: MatchResult,
    words: list[Word],
    scans: list[PadaScan],
    view: Catalog,
    overrides: Overrides,
) -> list[Suggestion]:
    """Hints for a near miss: name every offending syllable, and propose word
    swaps (verified to produce the target) drawn from the input itself."""
    if best.exact:
        return []
    suggestions: list[Suggestion] = []
    templates = _record_templates(best, scans, len(scans))
    for p_idx, (scan, template) in enumerate(zip(scans, templates), start=1):
        if len(scan.pattern) != len(template):
            suggestions.append(
                Suggestion(
                    "syllable-flip-hint",
                    f"quarter {p_idx} has {len(scan.pattern)} syllables but "
                    f"{best.record.name} wants {len(template)}",
                    template,
                    pada=p_idx,
                )
            )
            continue
        for i, (s, t) in enumerate(zip(scan.pattern, template)):
            if not cat.symbols_match(s, t):
                syl = scan.syllables[i].text
                suggestions.append(
                    Suggestion(
                        "syllable-flip-hint",
                        f"quarter {p_idx}, syllable {i + 1} '{syl}' scans "
                        f"'{s}' but {best.record.name} needs '{t}'",
                        t,
                        pada=p_idx,
                        syllable=i + 1,
                    )
                )

    # try every transposition of the word order; keep the ones that land the metre
    target = best.record.name
    for i in range(len(words)):
        for j in range(i + 1, len(words)):
            swapped = words[:]
            swapped[i], swapped[j] = swapped[j], swapped[i]
            outcome = _quick_match(swapped, view, overrides)
            if outcome is None:
                continue
            kind = "word-swap" if outcome.record.name == target else "word-replace"
            suggestions.append(
                Suggestion(
                    kind,
                    f"exchange '{words[i].surface}' and '{words[j].surface}' "
                    f"to scan as {outcome.record.name}",
                    outcome.record.pada_patterns[0] if outcome.record.pada_patterns else "",
                    swap=(words[i].surface, words[j].surface),
                )
            )
    return suggestions


def _quick_match(words: list[Word], view: Catalog, overrides: Overrides) -> MatchResult | None:
    """First exact match for one fixed word order, if any."""
    sandhi = apply_sequence(words, overrides)
    total = sandhi.vowel_count
    band = view.band or (1, cat.MAX_PADA_SYLLABLES)
    for shape in split_quarters(total, band[0], band[1]):
        scans = _pada_scans(sandhi.units, shape)
        if scans is None:
            continue
        exact, _ = _family_matches(
            [s.pattern for s in scans],
            view,
            frozenset(cat.FAMILIES),
            equal_split=(shape[0] * 4 == total),
        )
        if exact is not None:
            return exact
    return None


@dataclass
class OversizeResult:
    verses: list[CompositionResult]
    groups: list[list[str]] = field(default_factory=list)  # word surfaces per verse

    @property
    def status(self) -> str:
        return MATCHED if all(v.status == MATCHED for v in self.verses) else CLOSEST_ONLY


ANUSTUBH_TOTAL = 32  # syllables in a full anuṣṭubh verse


def oversize_strategy(request: CompositionRequest, catalog: Catalog) -> OversizeResult:
    """For inputs too large for any single metre (over 26 syllables per
    quarter), cut the prose into consecutive groups aimed at anuṣṭubh-sized
    verses and compose each group independently."""
    words = request.prose.words
    if not words:
        raise EmptyInput()
    total = sum(w.vowel_count for w in words)
    group_count = max(1, -(-total // ANUSTUBH_TOTAL))
    groups: list[list[Word]] = []
    remaining = total
    idx = 0
    for g in range(group_count):
        groups_left = group_count - g
        if groups_left == 1:
            groups.append(words[idx:])
            idx = len(words)
            break
        target = remaining / groups_left
        group: list[Word] = []
        acc = 0
        while idx < len(words):
            w = words[idx].vowel_count
            # take the next word while it brings the group closer to target
            if group and abs(acc + w - target) > abs(acc - target):
                break
            group.append(words[idx])
            acc += w
            idx += 1
        groups.append(group)
        remaining -= acc

    verses = []
    kept_groups = []
    for group in groups:
        if not group:
            continue
        sub = CompositionRequest(
            ProseInput(group, request.prose.source_mode),
            mode=request.mode,
            max_permutations=request.max_permutations,
            families_enabled=request.families_enabled,
            overrides=request.overrides,
        )
        verses.append(compose(sub, catalog))
        kept_groups.append([w.surface for w in group])
    return OversizeResult(verses, kept_groups)


@dataclass
class VerseScan:
    padas: list[PadaScan]
    verdict: MatchResult | None

    @property
    def exact(self) -> bool:
        return self.verdict is not None and self.verdict.exact


def scan_verse(lines: list[str], catalog: Catalog) -> VerseScan:
    """Scan already-versified text, one quarter per line, and identify it."""
    from .text_codec import tokenize

    scans: list[PadaScan] = []
    for line in lines:
        prose = tokenize(line)
        letters = [l for w in prose.words for l in w.lexeme]
        syllables = syllabify(letters)
        pattern = weigh(syllables, pada_final_index=len(syllables) - 1)
        text = " ".join(w.surface for w in prose.words)
        spans = []
        pos = 0
        word_iter = iter(prose.words)
        # recompute per-letter offsets across the spaced words
        offsets = []
        for w in prose.words:
            for letter in w.lexeme:
                offsets.append((pos, pos + len(letter.surface)))
                pos += len(letter.surface)
            pos += 1
        li = 0
        for syl in syllables:
            spans.append((offsets[li][0], offsets[li + len(syl.letters) - 1][1]))
            li += len(syl.letters)
        scans.append(PadaScan(text, pattern, syllables, spans))

    verdict: MatchResult | None = None
    patterns = [s.pattern for s in scans]
    if len(patterns) == 4:
        exact, candidates = _family_matches(
            patterns, catalog, frozenset(cat.FAMILIES), equal_split=len({len(p) for p in patterns}) == 1
        )
        if exact is not None:
            verdict = exact
        elif candidates:
            verdict = min(candidates, key=MatchResult.sort_key)
    elif len(patterns) == 1:
        results = cat.match_sama(patterns[0], catalog)
        verdict = results[0] if results else None
    return VerseScan(scans, verdict)
