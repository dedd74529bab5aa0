"""padyakara: turn Sanskrit prose into metrical verse.

The pipeline: tokenize IAST text, resolve euphonic junctions, scan syllable
weights, bound the reachable syllable count, and search word orders against a
metre catalog narrowed to that band.
"""

from .text_codec import (
    Letter,
    ProseInput,
    Word,
    classify_letter,
    decode_spelled,
    normalize,
    render,
    tokenize,
)
from .phonology import (
    GanaSequence,
    Syllable,
    grouped,
    matra_count,
    syllabify,
    to_ganas,
    weigh,
)
from .sandhi import JunctionResolution, SandhiResult, apply_sequence, join
from .band import BandReport, classify_word, compute_band, count_sets
from .catalog import (
    Catalog,
    MatchResult,
    MetreRecord,
    band_filter,
    closest,
    load_catalog,
    match_ardhasama,
    match_jati,
    match_sama,
    match_upajati,
    parse_catalog,
)
from .composer import (
    CompositionRequest,
    CompositionResult,
    Suggestion,
    compose,
    oversize_strategy,
    scan_verse,
    split_quarters,
)

__version__ = "0.1.0"

__all__ = [
    "Letter", "ProseInput", "Word", "classify_letter", "decode_spelled",
    "normalize", "render", "tokenize",
    "GanaSequence", "Syllable", "grouped", "matra_count", "syllabify",
    "to_ganas", "weigh",
    "JunctionResolution", "SandhiResult", "apply_sequence", "join",
    "BandReport", "classify_word", "compute_band", "count_sets",
    "Catalog", "MatchResult", "MetreRecord", "band_filter", "closest",
    "load_catalog", "match_ardhasama", "match_jati", "match_sama",
    "match_upajati", "parse_catalog",
    "CompositionRequest", "CompositionResult", "Suggestion", "compose",
    "oversize_strategy", "scan_verse", "split_quarters",
    "__version__",
]
