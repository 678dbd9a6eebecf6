"""HTTP service backing the consultation UI.

Endpoints:
  GET  /api/kb        frame, conditions, symptom names + supports
  POST /api/diagnose  DiagnoseRequest -> DiagnoseResponse (400 on bad input)
  GET  /               static UI bundle when one is available

Stateless per request: every handler reads the shared immutable knowledge
base and nothing else. Diagnose responses are produced by the same serializer
as `beliefchain diagnose --format json`, so the bodies match byte for byte.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .core import EvidenceError
from .engine import diagnose
from .kb import KnowledgeBase
from .serialize import kb_payload, response_payload, to_json

_PLACEHOLDER_PAGE = """<!doctype html>
<html>
<head><meta charset="utf-8"><title>beliefchain</title></head>
<body>
<h1>beliefchain service</h1>
<p>No UI bundle is installed. The API is live:</p>
<ul>
<li><code>GET /api/kb</code></li>
<li><code>POST /api/diagnose</code> with
<code>{"condition": "1", "symptoms": ["fever"], "trace": false}</code></li>
</ul>
</body>
</html>
"""

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".mjs": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".map": "application/json",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".png": "image/png",
    ".ico": "image/x-icon",
}


def _parse_diagnose_request(raw: bytes) -> tuple[str, list[str], bool]:
    data = json.loads(raw.decode("utf-8"))
    if not isinstance(data, dict):
        raise ValueError("request body must be a JSON object")
    condition = data.get("condition")
    if not isinstance(condition, str):
        raise ValueError("condition must be a string")
    symptoms = data.get("symptoms")
    if not isinstance(symptoms, list) or not all(isinstance(s, str) for s in symptoms):
        raise ValueError("symptoms must be a list of strings")
    trace = data.get("trace", False)
    if not isinstance(trace, bool):
        raise ValueError("trace must be a boolean")
    return condition, symptoms, trace


def default_ui_dir() -> Path | None:
    candidate = Path.cwd() / "frontend" / "dist"
    return candidate if candidate.is_dir() else None


class _Handler(BaseHTTPRequestHandler):
    kb: KnowledgeBase
    kb_body: bytes
    ui_dir: Path | None

    protocol_version = "HTTP/1.1"

    def log_message(self, fmt: str, *args) -> None:  # keep test output quiet
        pass

    def _send(self, status: int, body: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _send_json(self, status: int, text: str) -> None:
        self._send(status, text.encode("utf-8"), "application/json")

    def _send_error_json(self, status: int, message: str) -> None:
        self._send_json(status, to_json({"error": message}))

    def do_GET(self) -> None:
        path = self.path.split("?", 1)[0]
        if path == "/api/kb":
            self._send(200, self.kb_body, "application/json")
        elif path.startswith("/api/"):
            self._send_error_json(404, f"no such endpoint: {path}")
        else:
            self._send_static(path)

    def do_POST(self) -> None:
        path = self.path.split("?", 1)[0]
        if path != "/api/diagnose":
            self._send_error_json(404, f"no such endpoint: {path}")
            return
        length = int(self.headers.get("Content-Length", "0"))
        raw = self.rfile.read(length)
        try:
            condition, symptoms, trace = _parse_diagnose_request(raw)
            d = diagnose(self.kb, condition, symptoms)
        except (ValueError, EvidenceError) as err:
            self._send_error_json(400, str(err))
            return
        self._send_json(200, to_json(response_payload(d, trace)))

    def _send_static(self, path: str) -> None:
        if path == "/":
            path = "/index.html"
        if self.ui_dir is not None:
            root = self.ui_dir.resolve()
            target = (root / path.lstrip("/")).resolve()
            if target.is_relative_to(root) and target.is_file():
                ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
                self._send(200, target.read_bytes(), ctype)
                return
        if path == "/index.html":
            self._send(200, _PLACEHOLDER_PAGE.encode("utf-8"), _CONTENT_TYPES[".html"])
            return
        self._send(404, b"not found\n", "text/plain; charset=utf-8")


def make_server(
    kb: KnowledgeBase,
    host: str = "127.0.0.1",
    port: int = 8080,
    ui_dir: Path | None = None,
) -> ThreadingHTTPServer:
    """Bind a server; call serve_forever() on the result to run it."""
    handler = type(
        "BoundHandler",
        (_Handler,),
        {"kb": kb, "kb_body": to_json(kb_payload(kb)).encode("utf-8"), "ui_dir": ui_dir},
    )
    server = ThreadingHTTPServer((host, port), handler)
    server.daemon_threads = True
    return server
