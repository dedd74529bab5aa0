"""Command line: compose prose into verse, scan existing verse, or serve the
session API for the workbench.

Exit codes: 0 exact metre, 2 closest match only, 1 processing error,
64 usage error, 66 unreadable input file.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import catalog as cat
from . import composer, report
from .text_codec import (
    CodecError,
    EmptyInput,
    decode_spelled,
    parse_spelled_stream,
    SPELLED_LETTERS,
    tokenize,
)

EX_OK = 0
EX_CLOSEST = 2
EX_ERROR = 1
EX_USAGE = 64
EX_NOINPUT = 66


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EX_USAGE)


def default_catalog() -> cat.Catalog:
    text = resources.files("padyakara").joinpath("data/metres.txt").read_text("utf-8")
    return cat.parse_catalog(text)


def _load_catalog(path: str | None) -> cat.Catalog:
    if path is None:
        return default_catalog()
    return cat.load_catalog(path)


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.exists():
        print(f"cannot read {path}", file=sys.stderr)
        sys.exit(EX_NOINPUT)
    return p.read_text(encoding="utf-8")


def _prose_from_text(text: str, spelled: bool):
    if spelled:
        decoded = decode_spelled(parse_spelled_stream(text))
        prose = tokenize(decoded)
        prose.source_mode = SPELLED_LETTERS
        return prose
    return tokenize(text)


def _print_result(doc: dict) -> None:
    print(f"status: {doc['status']}")
    band = doc["band"]
    print(
        f"band: {band['min_syllables']}..{band['max_syllables']} syllables "
        f"(r={band['r']}); catalog {doc['catalog']['entries_in_band']}/"
        f"{doc['catalog']['entries_total']} entries in band"
    )
    if doc.get("verse"):
        for pada in doc["verse"]["padas"]:
            ganas = f"  [{' '.join(pada['ganas'])}]" if pada.get("ganas") else ""
            print(f"  {pada['text']}")
            print(f"    {pada['pattern_grouped']}{ganas}")
    if doc.get("metre"):
        m = doc["metre"]
        tag = "exact" if m["exact"] else f"closest, distance {m['distance']}"
        print(f"metre: {m['name']} ({tag})")
    for s in doc.get("suggestions", []):
        print(f"suggestion [{s['kind']}]: {s['detail']}")


def _ask_interactively(questions) -> dict:
    overrides = {}
    for q in questions:
        answer = input(f"{q['question']} [y/N] ").strip().lower()
        overrides[(q["left"], q["right"])] = answer in ("y", "yes")
    return overrides


def cmd_compose(args) -> int:
    if args.interactive and args.input == "-":
        print("error: --interactive needs --input <file> (stdin is used for answers)",
              file=sys.stderr)
        return EX_USAGE
    try:
        prose = _prose_from_text(_read_input(args.input), args.spelled)
    except EmptyInput:
        print("error: input is empty", file=sys.stderr)
        return EX_ERROR
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ERROR
    catalog = _load_catalog(args.catalog)
    families = frozenset(args.families.split(",")) if args.families else frozenset(cat.FAMILIES)
    unknown = families - frozenset(cat.FAMILIES)
    if unknown:
        print(f"error: unknown families {sorted(unknown)}", file=sys.stderr)
        return EX_USAGE

    request = composer.CompositionRequest(
        prose,
        mode=composer.INTERACTIVE if args.interactive else composer.BATCH,
        max_permutations=args.max_permutations,
        families_enabled=families,
    )
    words = [w.surface for w in prose.words]

    total = sum(w.vowel_count for w in prose.words)
    if total > 4 * cat.MAX_PADA_SYLLABLES:
        result = composer.oversize_strategy(request, catalog)
        doc = report.oversize_document(result, words, prose.source_mode)
        for sub in doc["results"]:
            _print_result(sub)
        status = result.status
    else:
        result = composer.compose(request, catalog)
        if result.status == composer.NEEDS_INPUT and args.interactive:
            request.overrides.update(_ask_interactively(result.pending_questions))
            result = composer.compose(request, catalog)
        doc = report.result_document(result, words, prose.source_mode)
        _print_result(doc)
        status = result.status

    if args.report:
        Path(args.report).write_text(report.to_json(doc) + "\n", encoding="utf-8")
    return EX_OK if status == composer.MATCHED else EX_CLOSEST


def cmd_scan(args) -> int:
    try:
        text = _read_input(args.input)
        if args.spelled:
            text = decode_spelled(parse_spelled_stream(text))
        lines = [line for line in text.splitlines() if line.strip()]
        if not lines:
            print("error: input is empty", file=sys.stderr)
            return EX_ERROR
        catalog = _load_catalog(args.catalog)
        scan = composer.scan_verse(lines, catalog)
    except CodecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ERROR
    doc = report.scan_document(scan)
    for pada in doc["padas"]:
        ganas = f"  [{' '.join(pada['ganas'])}]" if pada.get("ganas") else ""
        print(f"{pada['text']}")
        print(f"  {pada['pattern_grouped']}{ganas}")
    if doc["metre"]:
        m = doc["metre"]
        tag = "exact" if m["exact"] else f"closest, distance {m['distance']}"
        print(f"metre: {m['name']} ({tag})")
    else:
        print("metre: not identified")
    if args.report:
        Path(args.report).write_text(report.to_json(doc) + "\n", encoding="utf-8")
    return EX_OK if doc["metre"] and doc["metre"]["exact"] else EX_CLOSEST


def cmd_serve(args) -> int:
    from .service import serve

    catalog = _load_catalog(args.catalog)
    serve(args.port, catalog, host=args.host)
    return EX_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padyakara", description="Sanskrit prose-to-verse workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p_compose = sub.add_parser("compose", help="arrange prose words into a metrical verse")
    p_compose.add_argument("--input", required=True, help="input file, or - for stdin")
    p_compose.add_argument("--spelled", action="store_true", help="input uses the spelled-letter scheme")
    p_compose.add_argument("--catalog", help="metre catalog file (default: packaged seed)")
    p_compose.add_argument("--max-permutations", type=int, default=composer.DEFAULT_MAX_PERMUTATIONS)
    p_compose.add_argument("--families", help="comma-separated subset of sama,ardhasama,visama,jati")
    p_compose.add_argument("--interactive", action="store_true", help="ask dual-number questions")
    p_compose.add_argument("--report", help="write the JSON report here")
    p_compose.set_defaults(func=cmd_compose)

    p_scan = sub.add_parser("scan", help="scan existing verse, one quarter per line")
    p_scan.add_argument("--input", required=True)
    p_scan.add_argument("--spelled", action="store_true")
    p_scan.add_argument("--catalog")
    p_scan.add_argument("--report")
    p_scan.set_defaults(func=cmd_scan)

    p_serve = sub.add_parser("serve", help="run the local session service")
    p_serve.add_argument("--port", type=int, required=True, help="0 picks a free port")
    p_serve.add_argument("--catalog")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except cat.CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_ERROR
    except EmptyInput:
        print("error: input is empty", file=sys.stderr)
        return EX_ERROR


if __name__ == "__main__":
    sys.exit(main())
