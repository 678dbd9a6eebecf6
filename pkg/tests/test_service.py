import http.client
import threading

import pytest
import requests

from beliefchain.engine import diagnose
from beliefchain.kb import default_kb
from beliefchain.serialize import response_payload, to_json
from beliefchain.service import make_server
from expected import CHAIN_TOL, M3


@pytest.fixture(scope="module")
def server_port():
    server = make_server(default_kb(), "127.0.0.1", 0)
    port = server.server_address[1]
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield port
    server.shutdown()
    server.server_close()


@pytest.fixture(scope="module")
def base(server_port):
    return f"http://127.0.0.1:{server_port}"


class TestKbEndpoint:
    def test_shape(self, base):
        resp = requests.get(f"{base}/api/kb")
        assert resp.status_code == 200
        body = resp.json()
        assert len(body["symptoms"]) == 11
        assert len(body["conditions"]) == 5
        assert len(body["frame"]) == 7
        assert body["symptoms"][0]["name"] == "fever"

    def test_unknown_api_path_is_404(self, base):
        resp = requests.get(f"{base}/api/nope")
        assert resp.status_code == 404
        assert "error" in resp.json()


class TestDiagnoseEndpoint:
    def test_trace_steps_match_the_first_combination(self, base, kb):
        resp = requests.post(
            f"{base}/api/diagnose",
            json={"condition": "1", "symptoms": ["fever", "red-urine"], "trace": True},
        )
        assert resp.status_code == 200
        body = resp.json()
        masses = body["steps"][1]["masses"]
        assert masses["B"] == pytest.approx(M3[("B",)], abs=CHAIN_TOL)
        assert masses["AT,B,DF,M,R,WN"] == pytest.approx(
            M3[("AT", "B", "DF", "M", "R", "WN")], abs=CHAIN_TOL
        )
        assert masses["AT,B,DF,L,M,R,WN"] == pytest.approx(
            M3[("AT", "B", "DF", "M", "R", "WN", "L")], abs=CHAIN_TOL
        )

    def test_no_trace_omits_steps(self, base):
        resp = requests.post(
            f"{base}/api/diagnose",
            json={"condition": "1", "symptoms": ["fever"]},
        )
        assert resp.status_code == 200
        assert "steps" not in resp.json()

    def test_body_bytes_equal_cli_serializer(self, base, kb):
        resp = requests.post(
            f"{base}/api/diagnose",
            json={"condition": "3", "symptoms": list(kb.symptom_names()), "trace": True},
        )
        d = diagnose(kb, "3", kb.symptom_names())
        assert resp.content == to_json(response_payload(d, trace=True)).encode("utf-8")

    def test_empty_symptoms_is_400(self, base):
        resp = requests.post(
            f"{base}/api/diagnose", json={"condition": "1", "symptoms": []}
        )
        assert resp.status_code == 400
        assert "no symptoms" in resp.json()["error"]

    def test_unknown_condition_is_400(self, base):
        resp = requests.post(
            f"{base}/api/diagnose", json={"condition": "9", "symptoms": ["fever"]}
        )
        assert resp.status_code == 400
        assert "unknown condition" in resp.json()["error"]

    def test_malformed_bodies_are_400(self, base):
        for payload in (
            b"not json",
            b"[1, 2]",
            b'{"symptoms": ["fever"]}',
            b'{"condition": "1", "symptoms": "fever"}',
            b'{"condition": "1", "symptoms": ["fever"], "trace": "yes"}',
        ):
            resp = requests.post(
                f"{base}/api/diagnose",
                data=payload,
                headers={"Content-Type": "application/json"},
            )
            assert resp.status_code == 400, payload

    def test_wrong_path_is_404(self, base):
        resp = requests.post(f"{base}/api/kb", json={})
        assert resp.status_code == 404


class TestStatic:
    def test_placeholder_page_without_bundle(self, base):
        resp = requests.get(f"{base}/")
        assert resp.status_code == 200
        assert "beliefchain" in resp.text
        assert "text/html" in resp.headers["Content-Type"]

    def test_missing_asset_is_404(self, base):
        assert requests.get(f"{base}/missing.js").status_code == 404

    def test_bundle_directory_is_served(self, tmp_path):
        (tmp_path / "index.html").write_text("<html>bundle</html>", encoding="utf-8")
        (tmp_path / "app.js").write_text("console.log(1)", encoding="utf-8")
        (tmp_path.parent / "secret.txt").write_text("x", encoding="utf-8")
        server = make_server(default_kb(), "127.0.0.1", 0, ui_dir=tmp_path)
        port = server.server_address[1]
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        try:
            assert "bundle" in requests.get(f"http://127.0.0.1:{port}/").text
            js = requests.get(f"http://127.0.0.1:{port}/app.js")
            assert js.status_code == 200
            assert "javascript" in js.headers["Content-Type"]

            # traversal must not escape the bundle directory; send the raw
            # path because requests would normalize the dots away
            conn = http.client.HTTPConnection("127.0.0.1", port)
            conn.request("GET", "/../secret.txt")
            resp = conn.getresponse()
            assert resp.status == 404
            resp.read()
            conn.close()
        finally:
            server.shutdown()
            server.server_close()
