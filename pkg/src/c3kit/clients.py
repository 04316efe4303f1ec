"""Backends: chat-completions LLM client with an on-disk response cache, and NER.

Two NER backends exist: :class:`GazetteerNer` (deterministic, offline) and
:class:`NerServerClient`, which speaks the JSON protocol of a CoreNLP-style
annotation server.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import re
import tempfile
import threading
import time
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Iterable

import httpx

from .registry import ContextRegistry, Group

log = logging.getLogger(__name__)

ENV_ENDPOINT = "C3_LLM_ENDPOINT"
ENV_KEY = "C3_LLM_KEY"
ENV_MODEL = "C3_LLM_MODEL"
ENV_NER_ENDPOINT = "C3_NER_ENDPOINT"
DEFAULT_MODEL = "gpt-4-turbo"

_TRANSIENT_STATUS = {408, 409, 425, 429, 500, 502, 503, 504}


class Role(str, Enum):
    SYSTEM = "system"
    USER = "user"
    ASSISTANT = "assistant"


@dataclass(frozen=True)
class ChatMessage:
    role: Role
    content: str

    def __post_init__(self) -> None:
        if not self.content:
            raise ValueError("chat message content must be non-empty")


@dataclass(frozen=True)
class ChatRequest:
    messages: tuple[ChatMessage, ...]
    model_id: str = DEFAULT_MODEL
    max_response_tokens: int = 20
    temperature: float | None = None  # None leaves the backend default in place
    sample: int = 0  # distinguishes repeated votes in the cache; never sent

    def __post_init__(self) -> None:
        msgs = tuple(self.messages)
        object.__setattr__(self, "messages", msgs)
        systems = [m for m in msgs if m.role is Role.SYSTEM]
        if not msgs or msgs[0].role is not Role.SYSTEM or len(systems) != 1:
            raise ValueError("a chat request starts with exactly one SYSTEM message")

    def wire_body(self) -> dict[str, Any]:
        body: dict[str, Any] = {
            "model": self.model_id,
            "messages": [{"role": m.role.value, "content": m.content} for m in self.messages],
            "max_tokens": self.max_response_tokens,
        }
        if self.temperature is not None:
            body["temperature"] = self.temperature
        return body

    def canonical(self) -> str:
        body = self.wire_body()
        for m in body["messages"]:
            m["content"] = " ".join(m["content"].split())
        if self.sample:
            body["sample"] = self.sample
        return json.dumps(body, sort_keys=True, ensure_ascii=False, separators=(",", ":"))

    def cache_key(self) -> str:
        return hashlib.sha256(self.canonical().encode("utf-8")).hexdigest()


class LlmError(RuntimeError):
    pass


class LlmConfigError(LlmError):
    pass


class LlmHttpError(LlmError):
    def __init__(self, status: int, excerpt: str):
        super().__init__(f"LLM backend returned HTTP {status}: {excerpt}")
        self.status = status


class LlmResponseError(LlmError):
    pass


class LlmNetworkError(LlmError):
    pass


class ResponseCache:
    """One JSON file per cache key; writes go through a temp file and ``os.replace``."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, request: ChatRequest) -> str | None:
        path = self._path(request.cache_key())
        try:
            entry = json.loads(path.read_text(encoding="utf-8"))
        except FileNotFoundError:
            return None
        except (OSError, json.JSONDecodeError) as exc:
            log.warning("ignoring unreadable cache entry %s: %s", path, exc)
            return None
        if entry.get("request") != request.canonical():
            return None
        return entry["response"]

    def put(self, request: ChatRequest, response: str) -> Path:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(request.cache_key())
        entry = {"key": request.cache_key(), "request": request.canonical(), "response": response}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(entry, f, ensure_ascii=False, indent=1)
            os.replace(tmp, path)
        except BaseException:
            Path(tmp).unlink(missing_ok=True)
            raise
        return path


class LlmClient:
    def __init__(
        self,
        endpoint: str | None = None,
        api_key: str | None = None,
        cache_dir: str | Path | None = None,
        *,
        max_in_flight: int = 4,
        retries: int = 3,
        backoff: float = 0.5,
        timeout: float = 120.0,
        transport: httpx.BaseTransport | None = None,
        sleep: Callable[[float], None] = time.sleep,
    ):
        self.endpoint = endpoint
        self.api_key = api_key
        self.cache = ResponseCache(cache_dir) if cache_dir else None
        self.retries = retries
        self.backoff = backoff
        self.timeout = timeout
        self._transport = transport
        self._sleep = sleep
        self._slots = threading.BoundedSemaphore(max_in_flight)
        self.network_calls = 0

    @classmethod
    def from_env(cls, cache_dir: str | Path | None = None, **kwargs: Any) -> "LlmClient":
        return cls(os.environ.get(ENV_ENDPOINT), os.environ.get(ENV_KEY), cache_dir, **kwargs)

    def complete(self, request: ChatRequest) -> str:
        if self.cache is not None:
            hit = self.cache.get(request)
            if hit is not None:
                return hit
        if not self.endpoint or not self.api_key:
            raise LlmConfigError(
                f"cache miss for request {request.cache_key()[:12]} and no LLM backend configured "
                f"(set {ENV_ENDPOINT} and {ENV_KEY})"
            )
        with self._slots:
            text = self._post(request)
        if self.cache is not None:
            self.cache.put(request, text)
        return text

    def _post(self, request: ChatRequest) -> str:
        headers = {"Authorization": f"Bearer {self.api_key}", "Content-Type": "application/json"}
        last: Exception | None = None
        with httpx.Client(timeout=self.timeout, transport=self._transport) as http:
            for attempt in range(self.retries + 1):
                if attempt:
                    self._sleep(self.backoff * 2 ** (attempt - 1))
                try:
                    self.network_calls += 1
                    resp = http.post(self.endpoint, json=request.wire_body(), headers=headers)
                except httpx.TransportError as exc:
                    last = LlmNetworkError(f"LLM request failed: {exc}")
                    continue
                if resp.status_code in _TRANSIENT_STATUS:
                    last = LlmHttpError(resp.status_code, resp.text[:200])
                    continue
                if resp.status_code >= 400:
                    raise LlmHttpError(resp.status_code, resp.text[:200])
                return _first_choice(resp.text)
        assert last is not None
        raise last


def _first_choice(body: str) -> str:
    try:
        content = json.loads(body)["choices"][0]["message"]["content"]
    except (ValueError, KeyError, IndexError, TypeError):
        raise LlmResponseError(f"cannot read choices[0].message.content from response: {body[:200]!r}") from None
    if not isinstance(content, str):
        raise LlmResponseError(f"non-text completion content: {body[:200]!r}")
    return content


def llm_complete(request: ChatRequest, client: LlmClient | None = None) -> str:
    return (client or LlmClient.from_env()).complete(request)


# --------------------------------------------------------------------- NER


@dataclass(frozen=True)
class NerAnnotation:
    span_text: str
    label: str


class NerBackend(str, Enum):
    SERVER = "SERVER"
    GAZETTEER = "GAZETTEER"


class NerError(RuntimeError):
    pass


def as_ner_backend(value: NerBackend | str) -> NerBackend:
    if isinstance(value, NerBackend):
        return value
    try:
        return NerBackend(str(value).upper())
    except ValueError:
        raise NerError(f"unknown NER backend: {value!r}") from None


_ALLOWED = re.compile(r"^[\w\s.,:;'’%$€£¥‰&/()-]*$")
_TOKEN = re.compile(
    r"(?P<ISODATE>\d{4}-\d{1,2}-\d{1,2})"
    r"|(?P<SLASHDATE>\d{1,2}/\d{1,2}/\d{2,4})"
    r"|(?P<CLOCK>\d{1,2}:\d{2}(?::\d{2})?)"
    r"|(?P<ORD>\d+(?:st|nd|rd|th)\b)"
    r"|(?P<NUM>\d+(?:,\d{3})*(?:\.\d+)?)"
    r"|(?P<WORD>[^\W\d_]+(?:[.'’][^\W\d_]+)*\.?)"
    r"|(?P<SYM>[%$€£¥‰&])"
)
_CAMEL = re.compile(r"(?<=[a-z])(?=[A-Z])")
# tokens that may complete a match but never make one on their own
_WEAK_WORDS = frozenset({"the", "of", "a", "an", "in", "at", "to", "and", "&", "this", "per", "next", "last"})
_WEAK_CLASSES = frozenset({"<num>"})
_NUMERIC_LABELS = frozenset({"CARDINAL"})  # labels where a bare number is a strong match


def _normal_forms(text: str) -> list[str]:
    base = " ".join(text.replace("_", " ").split()).lower()
    split = " ".join(_CAMEL.sub(" ", text.replace("_", " ")).split()).lower()
    return [base] if base == split else [base, split]


def _tokens(form: str) -> list[tuple[str, str | None]]:
    out = []
    for m in _TOKEN.finditer(form):
        kind = m.lastgroup
        tok = m.group()
        if kind == "WORD" and tok.endswith(".") and "." not in tok[:-1]:
            tok = tok[:-1]
        cls = f"<{kind.lower()}>" if kind not in ("WORD", "SYM") else None
        out.append((tok, cls))
    return out


class GazetteerNer:
    """Label a text with L when it is a term of gazetteer L, or when every token
    is a term (or token class) of L and at least one token is a strong match."""

    def __init__(self, registry: ContextRegistry):
        allowed = {c.name for c in registry.contexts if c.group is Group.STRING and c.category != "Cyberspace"}
        self._sets = {k: v for k, v in registry.gazetteer_sets.items() if k in allowed}

    def labels(self, text: str) -> list[str]:
        if not text.strip() or not _ALLOWED.match(text):
            return []
        forms = _normal_forms(text)
        token_lists = [_tokens(f) for f in forms]
        found = []
        for label, terms in self._sets.items():
            if any(f in terms and f not in _WEAK_WORDS for f in forms):
                found.append(label)
                continue
            for toks in token_lists:
                if toks and self._tokens_match(toks, terms, label in _NUMERIC_LABELS):
                    found.append(label)
                    break
        return found

    @staticmethod
    def _tokens_match(toks: list[tuple[str, str | None]], terms: frozenset[str], numeric: bool) -> bool:
        strong = False
        for tok, cls in toks:
            if tok in terms:
                strong = strong or tok not in _WEAK_WORDS
            elif cls is not None and cls in terms:
                strong = strong or numeric or cls not in _WEAK_CLASSES
            else:
                return False
        return strong

    def annotate(self, text: str) -> list[NerAnnotation]:
        span = text.strip()
        return [NerAnnotation(span, label) for label in self.labels(text)]


# CoreNLP label -> context name; unmapped labels are dropped
CORENLP_LABELS = {
    "PERSON": "PERSON",
    "LOCATION": "LOCATION",
    "ORGANIZATION": "ORGANIZATION",
    "CITY": "CITY",
    "COUNTRY": "COUNTRY",
    "STATE_OR_PROVINCE": "GPE",
    "NATIONALITY": "NORP",
    "RELIGION": "NORP",
    "IDEOLOGY": "NORP",
    "FACILITY": "FAC",
    "DATE": "DATE",
    "TIME": "TIME",
    "DURATION": "DURATION",
    "SET": "TIMESET",
    "MONEY": "MONEY",
    "PERCENT": "PERCENT",
    "ORDINAL": "ORDINAL",
    "NUMBER": "CARDINAL",
    "GPE": "GPE",
    "FAC": "FAC",
    "NORP": "NORP",
    "CARDINAL": "CARDINAL",
    "TIMESET": "TIMESET",
}


class NerServerClient:
    """Client for an annotation server: raw text POSTed with a ``properties`` query."""

    PROPERTIES = {"annotators": "tokenize,ssplit,ner", "outputFormat": "json"}

    def __init__(self, endpoint: str | None = None, *, timeout: float = 30.0,
                 transport: httpx.BaseTransport | None = None):
        self.endpoint = endpoint or os.environ.get(ENV_NER_ENDPOINT)
        self.timeout = timeout
        self._transport = transport

    def annotate(self, text: str) -> list[NerAnnotation]:
        if not self.endpoint:
            raise NerError(f"no NER server configured (set {ENV_NER_ENDPOINT})")
        if not text.strip():
            return []
        params = {"properties": json.dumps(self.PROPERTIES)}
        try:
            with httpx.Client(timeout=self.timeout, transport=self._transport) as http:
                resp = http.post(self.endpoint, params=params, content=text.encode("utf-8"))
        except httpx.TransportError as exc:
            raise NerError(f"NER server unreachable: {exc}") from None
        if resp.status_code >= 400:
            raise NerError(f"NER server returned HTTP {resp.status_code}: {resp.text[:200]}")
        try:
            doc = resp.json()
        except ValueError:
            raise NerError(f"NER server sent non-JSON body: {resp.text[:200]!r}") from None
        return list(_mentions(doc))


def _mentions(doc: dict[str, Any]) -> Iterable[NerAnnotation]:
    for sentence in doc.get("sentences", []):
        mentions = sentence.get("entitymentions")
        if mentions is None:
            mentions = _group_tokens(sentence.get("tokens", []))
        for m in mentions:
            label = CORENLP_LABELS.get(m.get("ner", ""))
            if label is not None:
                yield NerAnnotation(m.get("text", ""), label)


def _group_tokens(tokens: list[dict[str, Any]]) -> list[dict[str, str]]:
    groups: list[dict[str, str]] = []
    prev = "O"
    for tok in tokens:
        ner = tok.get("ner", "O")
        if ner != "O" and ner == prev:
            groups[-1]["text"] += tok.get("before", " ") + tok.get("word", "")
        elif ner != "O":
            groups.append({"text": tok.get("word", ""), "ner": ner})
        prev = ner
    return groups


def ner_annotate(text: str, backend: NerBackend | str, *, registry: ContextRegistry | None = None,
                 server: NerServerClient | None = None) -> list[NerAnnotation]:
    backend = as_ner_backend(backend)
    if backend is NerBackend.GAZETTEER:
        if registry is None:
            from .registry import builtin_registry
            registry = builtin_registry()
        return GazetteerNer(registry).annotate(text)
    return (server or NerServerClient()).annotate(text)
