import json
import threading
from http.server import BaseHTTPRequestHandler, HTTPServer
from urllib.parse import parse_qs, urlparse

import httpx
import pytest

from c3kit.clients import (
    ChatMessage, ChatRequest, GazetteerNer, LlmClient, LlmConfigError, LlmHttpError, LlmNetworkError,
    LlmResponseError, NerAnnotation, NerError, NerServerClient, ResponseCache, Role, as_ner_backend,
    ner_annotate, NerBackend,
)


def _request(text="hello", **kw):
    return ChatRequest((ChatMessage(Role.SYSTEM, "be brief"), ChatMessage(Role.USER, text)), **kw)


def _reply(content):
    return httpx.Response(200, json={"choices": [{"message": {"role": "assistant", "content": content}}]})


def test_request_needs_one_leading_system():
    with pytest.raises(ValueError):
        ChatRequest((ChatMessage(Role.USER, "hi"),))
    with pytest.raises(ValueError):
        ChatRequest((ChatMessage(Role.SYSTEM, "a"), ChatMessage(Role.SYSTEM, "b")))
    with pytest.raises(ValueError):
        ChatMessage(Role.USER, "")


def test_cache_key_normalises_whitespace_and_tracks_sample():
    assert _request("a  b\n c").cache_key() == _request("a b c").cache_key()
    assert _request(sample=1).cache_key() != _request().cache_key()
    assert _request(model_id="other").cache_key() != _request().cache_key()
    assert "sample" not in _request(sample=2).wire_body()


def test_cache_round_trip(tmp_path):
    cache = ResponseCache(tmp_path)
    req = _request()
    assert cache.get(req) is None
    cache.put(req, "PERSON")
    assert cache.get(req) == "PERSON"
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_only_client(tmp_path):
    client = LlmClient(None, None, tmp_path)
    with pytest.raises(LlmConfigError):
        client.complete(_request())
    ResponseCache(tmp_path).put(_request(), "Yes")
    assert client.complete(_request()) == "Yes"
    assert client.network_calls == 0


def test_network_answer_is_cached(tmp_path):
    seen = []

    def handler(req):
        seen.append(json.loads(req.content))
        assert req.headers["authorization"] == "Bearer k"
        return _reply("EMAIL")

    client = LlmClient("http://llm/v1/chat", "k", tmp_path, transport=httpx.MockTransport(handler))
    assert client.complete(_request()) == "EMAIL"
    assert client.complete(_request()) == "EMAIL"
    assert len(seen) == 1 and seen[0]["max_tokens"] == 20


def test_retries_transient_status():
    replies = iter([httpx.Response(429), httpx.Response(503), _reply("ok")])
    naps = []
    client = LlmClient("http://llm", "k", transport=httpx.MockTransport(lambda r: next(replies)),
                       sleep=naps.append, backoff=0.1)
    assert client.complete(_request()) == "ok"
    assert naps == [0.1, 0.2]
    assert client.network_calls == 3


def test_gives_up_after_retries():
    client = LlmClient("http://llm", "k", retries=2, sleep=lambda s: None,
                       transport=httpx.MockTransport(lambda r: httpx.Response(500, text="boom")))
    with pytest.raises(LlmHttpError) as info:
        client.complete(_request())
    assert info.value.status == 500
    assert client.network_calls == 3


def test_client_error_not_retried():
    client = LlmClient("http://llm", "k", sleep=lambda s: None,
                       transport=httpx.MockTransport(lambda r: httpx.Response(401, text="no")))
    with pytest.raises(LlmHttpError):
        client.complete(_request())
    assert client.network_calls == 1


@pytest.mark.parametrize("body", ["not json", "{}", '{"choices": []}', '{"choices": [{"message": {"content": 3}}]}'])
def test_bad_response_body(body):
    client = LlmClient("http://llm", "k", transport=httpx.MockTransport(lambda r: httpx.Response(200, text=body)))
    with pytest.raises(LlmResponseError):
        client.complete(_request())


def test_network_failure():
    def boom(req):
        raise httpx.ConnectError("refused")

    client = LlmClient("http://llm", "k", retries=1, sleep=lambda s: None, transport=httpx.MockTransport(boom))
    with pytest.raises(LlmNetworkError):
        client.complete(_request())


def test_from_env(monkeypatch, tmp_path):
    monkeypatch.setenv("C3_LLM_ENDPOINT", "http://e")
    monkeypatch.setenv("C3_LLM_KEY", "secret")
    client = LlmClient.from_env(tmp_path)
    assert (client.endpoint, client.api_key) == ("http://e", "secret")


# --------------------------------------------------------------------- NER


@pytest.mark.parametrize("text,labels", [
    ("Simon", ["PERSON"]),
    ("Enrico Fermi", ["PERSON"]),
    ("testUser", ["PERSON"]),
    ("Paris", ["CITY"]),
    ("third", ["ORDINAL"]),
    ("42", ["CARDINAL"]),
    ("10:30", ["TIME"]),
    ("2023-01-05", ["DATE"]),
    ("the", []),
    ("|x45e*3q4+", []),
    ("", []),
])
def test_gazetteer_labels(registry, text, labels):
    assert GazetteerNer(registry).labels(text) == labels


def test_backend_names():
    assert as_ner_backend("gazetteer") is NerBackend.GAZETTEER
    assert as_ner_backend(NerBackend.SERVER) is NerBackend.SERVER
    with pytest.raises(NerError):
        as_ner_backend("spacy")


class _FakeServer(BaseHTTPRequestHandler):
    def do_POST(self):
        query = parse_qs(urlparse(self.path).query)
        props = json.loads(query["properties"][0])
        text = self.rfile.read(int(self.headers["Content-Length"])).decode()
        assert props["annotators"] == "tokenize,ssplit,ner"
        if text == "tokens only":
            sentence = {"tokens": [{"word": "Enrico", "ner": "PERSON"},
                                   {"word": "Fermi", "ner": "PERSON", "before": " "},
                                   {"word": "x", "ner": "O"}]}
        else:
            sentence = {"entitymentions": [{"text": text, "ner": "CITY"}, {"text": "?", "ner": "MISC"}]}
        body = json.dumps({"sentences": [sentence]}).encode()
        self.send_response(200)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def log_message(self, *args):
        pass


@pytest.fixture
def ner_server():
    server = HTTPServer(("127.0.0.1", 0), _FakeServer)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_port}/"
    server.shutdown()


def test_server_client(ner_server):
    client = NerServerClient(ner_server)
    assert client.annotate("Rome") == [NerAnnotation("Rome", "CITY")]
    assert client.annotate("tokens only") == [NerAnnotation("Enrico Fermi", "PERSON")]
    assert client.annotate("   ") == []


def test_server_errors(monkeypatch):
    with pytest.raises(NerError, match="C3_NER_ENDPOINT"):
        NerServerClient().annotate("x")
    bad = NerServerClient("http://ner", transport=httpx.MockTransport(lambda r: httpx.Response(200, text="<html>")))
    with pytest.raises(NerError, match="non-JSON"):
        bad.annotate("x")


def test_ner_annotate_dispatch(registry, ner_server):
    assert ner_annotate("Simon", "GAZETTEER", registry=registry) == [NerAnnotation("Simon", "PERSON")]
    assert ner_annotate("Oslo", "SERVER", server=NerServerClient(ner_server))[0].label == "CITY"
