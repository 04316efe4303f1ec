from __future__ import annotations

import json
from pathlib import Path

import pytest

from c3kit.clients import LlmClient
from c3kit.code_model import Kind, SourceUnit
from c3kit.registry import add_context, builtin_registry, load_registry

FIXTURES = Path(__file__).parent / "fixtures"
JAVA = FIXTURES / "java"
LLM_CACHE = FIXTURES / "llm_cache"

# criterion number -> (passed, detail), filled in by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(autouse=True)
def _no_live_llm(monkeypatch):
    monkeypatch.delenv("C3_LLM_ENDPOINT", raising=False)
    monkeypatch.delenv("C3_LLM_KEY", raising=False)
    monkeypatch.delenv("C3_NER_ENDPOINT", raising=False)


@pytest.fixture(scope="session")
def registry():
    return builtin_registry()


@pytest.fixture(scope="session")
def mrs_definition():
    return json.loads((FIXTURES / "mrs_role.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def extended_registry(mrs_definition):
    return load_registry(add_context({}, mrs_definition))


@pytest.fixture
def cached_client():
    """Client that can only answer from the committed response cache."""
    return LlmClient(None, None, LLM_CACHE)


def java_unit(name: str, kind: Kind = Kind.CODE_UNDER_TEST) -> SourceUnit:
    return SourceUnit.from_path(JAVA / name, kind)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
