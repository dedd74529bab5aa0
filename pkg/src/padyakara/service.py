"""Loopback HTTP+JSON session service for the composition workbench.

Endpoints:
  POST /sessions                    create a session from prose; returns any
                                    dual-number questions, or the finished
                                    result when none are pending
  POST /sessions/<id>/answers       answer one question {left, right, dual}
  GET  /sessions/<id>               session state and result
  POST /scan                        stateless scansion of verse text

Sessions run independently; the catalog is shared read-only. Payloads mirror
the report schema exactly, so a service-driven composition and a batch CLI
run produce the same document.
"""

from __future__ import annotations

import json
import threading
import uuid
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import composer, report
from .catalog import Catalog
from .text_codec import (
    CodecError,
    SPELLED_LETTERS,
    decode_spelled,
    parse_spelled_stream,
    tokenize,
)

AWAITING = "awaiting-answers"
RUNNING = "running"
DONE = "done"


@dataclass
class Session:
    session_id: str
    request: composer.CompositionRequest
    words: list[str]
    source_mode: str
    state: str = AWAITING
    pending: list[dict] = field(default_factory=list)
    result_doc: dict | None = None
    lock: threading.Lock = field(default_factory=threading.Lock)

    def view(self) -> dict:
        return {
            "session_id": self.session_id,
            "state": self.state,
            "pending_questions": list(self.pending),
            "result": self.result_doc,
        }


class BadRequest(Exception):
    def __init__(self, message: str, details: dict | None = None):
        self.details = details or {}
        super().__init__(message)


class SessionStore:
    def __init__(self, catalog: Catalog):
        self.catalog = catalog
        self._sessions: dict[str, Session] = {}
        self._lock = threading.Lock()

    def create(self, payload: dict) -> Session:
        prose_text = payload.get("prose")
        if not isinstance(prose_text, str) or not prose_text.strip():
            raise BadRequest("field 'prose' must be a non-empty string", {"field": "prose"})
        spelled = bool(payload.get("spelled", False))
        try:
            if spelled:
                prose = tokenize(decode_spelled(parse_spelled_stream(prose_text)))
                prose.source_mode = SPELLED_LETTERS
            else:
                prose = tokenize(prose_text)
        except CodecError as exc:
            raise BadRequest(str(exc), {"field": "prose"})

        max_perms = payload.get("max_permutations", composer.DEFAULT_MAX_PERMUTATIONS)
        if not isinstance(max_perms, int) or max_perms < 1:
            raise BadRequest("field 'max_permutations' must be a positive integer",
                             {"field": "max_permutations"})
        request = composer.CompositionRequest(
            prose, mode=composer.INTERACTIVE, max_permutations=max_perms
        )
        session = Session(
            uuid.uuid4().hex,
            request,
            [w.surface for w in prose.words],
            prose.source_mode,
        )
        session.pending = composer.unresolved_questions(prose.words, request.overrides)
        with self._lock:
            self._sessions[session.session_id] = session
        if not session.pending:
            self._run(session)
        return session

    def get(self, session_id: str) -> Session | None:
        with self._lock:
            return self._sessions.get(session_id)

    def answer(self, session: Session, payload: dict) -> Session:
        left, right = payload.get("left"), payload.get("right")
        dual = payload.get("dual")
        if not isinstance(left, str) or not isinstance(right, str):
            raise BadRequest("fields 'left' and 'right' must be strings", {"field": "left/right"})
        if not isinstance(dual, bool):
            raise BadRequest("field 'dual' must be a boolean", {"field": "dual"})
        with session.lock:
            match = [q for q in session.pending if q["left"] == left and q["right"] == right]
            if not match:
                raise BadRequest(
                    "question already resolved or unknown", {"field": "left/right"}
                )
            session.request.overrides[(left, right)] = dual
            session.pending = [
                q for q in session.pending if not (q["left"] == left and q["right"] == right)
            ]
            if not session.pending:
                self._run(session)
        return session

    def _run(self, session: Session) -> None:
        session.state = RUNNING
        request = session.request
        # all questions answered: the search itself runs in batch semantics
        request.mode = composer.BATCH
        result = composer.compose(request, self.catalog)
        session.result_doc = report.result_document(result, session.words, session.source_mode)
        session.state = DONE


def _scan_payload(payload: dict, catalog: Catalog) -> dict:
    text = payload.get("text")
    if not isinstance(text, str) or not text.strip():
        raise BadRequest("field 'text' must be a non-empty string", {"field": "text"})
    lines = [line for line in text.splitlines() if line.strip()]
    try:
        scan = composer.scan_verse(lines, catalog)
    except CodecError as exc:
        raise BadRequest(str(exc), {"field": "text"})
    return report.scan_document(scan)


class Handler(BaseHTTPRequestHandler):
    store: SessionStore  # set by serve()

    def log_message(self, *args):  # quiet
        pass

    def _send(self, code: int, doc: dict) -> None:
        body = json.dumps(doc, ensure_ascii=False, sort_keys=True).encode("utf-8")
        self.send_response(code)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.end_headers()
        self.wfile.write(body)

    def _payload(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            doc = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise BadRequest(f"payload is not valid JSON: {exc}")
        if not isinstance(doc, dict):
            raise BadRequest("payload must be a JSON object")
        return doc

    def do_OPTIONS(self):
        self._send(204, {})

    def do_GET(self):
        parts = [p for p in self.path.split("/") if p]
        if len(parts) == 2 and parts[0] == "sessions":
            session = self.store.get(parts[1])
            if session is None:
                self._send(404, {"error": "unknown session"})
            else:
                self._send(200, session.view())
            return
        if not parts:
            self._send(200, {"service": "padyakara", "endpoints": ["/sessions", "/scan"]})
            return
        self._send(404, {"error": "not found"})

    def do_POST(self):
        parts = [p for p in self.path.split("/") if p]
        try:
            if parts == ["sessions"]:
                session = self.store.create(self._payload())
                self._send(201, session.view())
                return
            if len(parts) == 3 and parts[0] == "sessions" and parts[2] == "answers":
                session = self.store.get(parts[1])
                if session is None:
                    self._send(404, {"error": "unknown session"})
                    return
                self._send(200, self.store.answer(session, self._payload()).view())
                return
            if parts == ["scan"]:
                self._send(200, _scan_payload(self._payload(), self.store.catalog))
                return
            self._send(404, {"error": "not found"})
        except BadRequest as exc:
            self._send(400, {"error": str(exc), **exc.details})


def make_server(port: int, catalog: Catalog, host: str = "127.0.0.1") -> ThreadingHTTPServer:
    handler = type("BoundHandler", (Handler,), {"store": SessionStore(catalog)})
    return ThreadingHTTPServer((host, port), handler)


def serve(port: int, catalog: Catalog, host: str = "127.0.0.1") -> None:
    server = make_server(port, catalog, host)
    actual = server.server_address[1]
    print(f"listening on {host}:{actual}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
