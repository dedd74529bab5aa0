"""Structured composition report.

One JSON document carries everything a client needs: the verse with
per-syllable weights and character offsets (for highlighting), the matched or
closest metre, the sandhi trace, the syllable band with all its components,
and any suggestions. The same document is written by the command line and
returned by the session service, so batch and interactive runs can be
compared bit for bit.
"""

from __future__ import annotations

import json
from typing import Any

from .catalog import MatchResult
from .composer import CompositionResult, OversizeResult, PadaScan, VerseScan
from .phonology import GanaSequence, OPTIONAL, grouped, resolve, to_ganas

SCHEMA_VERSION = 1


def _pada_doc(scan: PadaScan, resolution: dict[int, str] | None) -> dict[str, Any]:
    concrete = None
    ganas = None
    if OPTIONAL not in scan.pattern:
        concrete = scan.pattern
    elif resolution is not None:
        concrete = resolve(scan.pattern, resolution)
    if concrete is not None:
        ganas = str(to_ganas(concrete))
    syllables = []
    for syl, (start, end) in zip(scan.syllables, scan.offsets):
        syllables.append(
            {
                "text": syl.text,
                "weight": syl.weight,
                "optional": syl.optional_guru,
                "start": start,
                "end": end,
            }
        )
    return {
        "text": scan.text,
        "pattern": scan.pattern,
        "pattern_grouped": grouped(scan.pattern),
        "resolved_pattern": concrete,
        "ganas": ganas,
        "syllables": syllables,
    }


def _metre_doc(match: MatchResult | None) -> dict[str, Any] | None:
    if match is None:
        return None
    return {
        "name": match.record.name,
        "family": match.record.family,
        "exact": match.exact,
        "distance": match.distance,
    }


def _trace_doc(trace) -> list[dict[str, Any]]:
    out = []
    for t in trace:
        entry: dict[str, Any] = {
            "left": t.left_word,
            "right": t.right_word,
            "rule": t.applied_rule,
            "effect": t.weight_effect,
            "merged": t.merged,
        }
        if t.question is not None or t.dual_applied is not None:
            entry["pragrhya"] = {"question": t.question, "dual": t.dual_applied}
        out.append(entry)
    return out


def result_document(result: CompositionResult, input_words: list[str], source_mode: str) -> dict[str, Any]:
    resolutions = list(result.metre.resolution) if result.metre else []
    padas = []
    for i, scan in enumerate(result.verse_padas):
        res = resolutions[i] if i < len(resolutions) else None
        padas.append(_pada_doc(scan, res))
    return {
        "schema_version": SCHEMA_VERSION,
        "status": result.status,
        "input": {"words": input_words, "source_mode": source_mode},
        "band": result.band.to_dict(),
        "catalog": {
            "entries_total": result.entries_total,
            "entries_in_band": result.entries_in_band,
        },
        "permutation": list(result.permutation),
        "permutations_tried": result.permutations_tried,
        "prose": {"text": result.prose_text, "trace": _trace_doc(result.prose_trace)},
        "verse": {"text": result.verse_text, "padas": padas} if padas else None,
        "metre": _metre_doc(result.metre),
        "sandhi_trace": _trace_doc(result.sandhi_trace),
        "suggestions": [s.to_dict() for s in result.suggestions],
        "pending_questions": list(result.pending_questions),
    }


def oversize_document(result: OversizeResult, input_words: list[str], source_mode: str) -> dict[str, Any]:
    groups = result.groups or [input_words] * len(result.verses)
    return {
        "schema_version": SCHEMA_VERSION,
        "status": result.status,
        "input": {"words": input_words, "source_mode": source_mode},
        "multi_verse": True,
        "results": [
            result_document(v, g, source_mode) for v, g in zip(result.verses, groups)
        ],
    }


def scan_document(scan: VerseScan) -> dict[str, Any]:
    resolutions = list(scan.verdict.resolution) if scan.verdict else []
    padas = []
    for i, p in enumerate(scan.padas):
        res = resolutions[i] if i < len(resolutions) else None
        padas.append(_pada_doc(p, res))
    return {
        "schema_version": SCHEMA_VERSION,
        "padas": padas,
        "metre": _metre_doc(scan.verdict),
    }


def to_json(document: dict[str, Any]) -> str:
    return json.dumps(document, ensure_ascii=False, indent=2, sort_keys=True)
