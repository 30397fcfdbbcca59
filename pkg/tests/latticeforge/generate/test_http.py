import json
import logging
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

import pytest

from latticeforge.errors import AuthError, ConfigError, TransportError
from latticeforge.generate.http import ChatCompletionGenerator, completions_url

KEY_ENV = "LATTICEFORGE_TEST_KEY"
SECRET = "sk-test-do-not-print-4242"

REPLY = "<sol> 1.8,2.4,2.9,4.0,5.0,4.7,3.4,3.9,5.0,4.6,5.0,5.0,8.0,5.0,7.0 <\\sol>"


class _Scripted(BaseHTTPRequestHandler):
    """Answers POSTs with the next status from the server's script; 200 once it runs out."""

    def do_POST(self):
        length = int(self.headers.get("Content-Length", 0))
        body = json.loads(self.rfile.read(length) or b"{}")
        self.server.requests.append({"path": self.path, "auth": self.headers.get("Authorization"), "body": body})
        status = self.server.script.pop(0) if self.server.script else 200
        if status == 200:
            payload = {
                "choices": [{"message": {"role": "assistant", "content": REPLY}}],
                "usage": {"prompt_tokens": 12, "completion_tokens": 34},
            }
            data = json.dumps(payload).encode("utf-8")
        else:
            data = b'{"error": "scripted"}'
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def log_message(self, format, *args):
        pass


@pytest.fixture
def server():
    srv = ThreadingHTTPServer(("127.0.0.1", 0), _Scripted)
    srv.script = []
    srv.requests = []
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield srv
    srv.shutdown()
    srv.server_close()


@pytest.fixture
def api_key(monkeypatch):
    monkeypatch.setenv(KEY_ENV, SECRET)
    return SECRET


def _client(server, **kwargs):
    host, port = server.server_address[:2]
    kwargs.setdefault("backoff_base", 0.001)
    kwargs.setdefault("timeout", 5.0)
    return ChatCompletionGenerator(f"http://{host}:{port}/v1", "test-model", KEY_ENV, **kwargs)


def test_successful_completion(server, api_key):
    gen = _client(server, temperature=0.7, max_tokens=64)
    out = gen.complete("hello")
    assert out.text == REPLY
    assert out.prompt_tokens == 12 and out.completion_tokens == 34
    assert out.latency >= 0
    (req,) = server.requests
    assert req["path"] == "/v1/chat/completions"
    assert req["auth"] == f"Bearer {SECRET}"
    assert req["body"]["model"] == "test-model"
    assert req["body"]["messages"] == [{"role": "user", "content": "hello"}]
    assert req["body"]["temperature"] == 0.7
    assert req["body"]["max_tokens"] == 64


def test_rate_limit_is_retried_until_success(server, api_key):
    server.script = [429, 429]
    gen = _client(server, max_retries=3)
    assert gen.complete("x").text == REPLY
    assert gen.attempts == 3
    assert len(gen.backoff_waits) == 2
    assert gen.backoff_waits == sorted(gen.backoff_waits)


def test_auth_failure_is_not_retried(server, api_key):
    server.script = [401]
    gen = _client(server)
    with pytest.raises(AuthError):
        gen.complete("x")
    assert gen.attempts == 1
    assert gen.backoff_waits == []


def test_forbidden_is_an_auth_error(server, api_key):
    server.script = [403]
    with pytest.raises(AuthError):
        _client(server).complete("x")


def test_persistent_server_errors_exhaust_retries(server, api_key):
    server.script = [503] * 10
    gen = _client(server, max_retries=2)
    with pytest.raises(TransportError):
        gen.complete("x")
    assert gen.attempts == 3
    assert gen.backoff_waits == sorted(gen.backoff_waits)


def test_client_error_is_not_retried(server, api_key):
    server.script = [400]
    gen = _client(server)
    with pytest.raises(TransportError):
        gen.complete("x")
    assert gen.attempts == 1


def test_unreachable_endpoint_raises_transport_error(api_key):
    scratch = ThreadingHTTPServer(("127.0.0.1", 0), _Scripted)
    host, port = scratch.server_address[:2]
    scratch.server_close()
    gen = ChatCompletionGenerator(f"http://{host}:{port}", "m", KEY_ENV, max_retries=1, backoff_base=0.001, timeout=2.0)
    with pytest.raises(TransportError):
        gen.complete("x")
    assert gen.attempts == 2


def test_key_never_reaches_logs_or_repr(server, api_key, caplog):
    server.script = [500]
    caplog.set_level(logging.DEBUG)
    gen = _client(server)
    gen.complete("x")
    assert SECRET not in caplog.text
    assert SECRET not in repr(gen)


def test_missing_key_is_a_config_error(monkeypatch):
    monkeypatch.delenv(KEY_ENV, raising=False)
    with pytest.raises(ConfigError):
        ChatCompletionGenerator("http://127.0.0.1:1", "m", KEY_ENV)


@pytest.mark.parametrize(
    "endpoint, expected",
    [
        ("https://api.example.test/v1", "https://api.example.test/v1/chat/completions"),
        ("https://api.example.test/v1/", "https://api.example.test/v1/chat/completions"),
        ("https://api.example.test/v1/chat/completions", "https://api.example.test/v1/chat/completions"),
    ],
)
def test_completions_url(endpoint, expected):
    assert completions_url(endpoint) == expected
