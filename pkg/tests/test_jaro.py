import importlib

import pytest
from hypothesis import given, strategies as st

from c3kit import _jwpy, jaro


@pytest.mark.parametrize("a,b,sim", [
    ("MARTHA", "MARHTA", 0.9611),
    ("DWAYNE", "DUANE", 0.84),
    ("DIXON", "DICKSONX", 0.8133),
])
def test_known_values(a, b, sim):
    assert jaro.jaro_winkler_similarity(a, b) == pytest.approx(sim, abs=1e-4)


def test_edges():
    assert jaro.jaro_winkler_distance("", "") == 0.0
    assert jaro.jaro_winkler_distance("abc", "") == 1.0
    assert jaro.jaro_winkler_distance("abc", "xyz") == 1.0
    assert jaro.min_distance("bob", ["alice", "bob"]) == 0.0


def test_compiled_backend_loaded():
    # the extension is built by the editable install; its absence is a packaging bug
    assert jaro.BACKEND == "cython"


def test_forced_fallback(monkeypatch):
    monkeypatch.setenv("C3KIT_PURE_PYTHON", "1")
    try:
        mod = importlib.reload(jaro)
        assert mod.BACKEND == "python"
        assert mod.jaro_winkler_distance is _jwpy.jaro_winkler_distance
    finally:
        monkeypatch.delenv("C3KIT_PURE_PYTHON")
        importlib.reload(jaro)


text = st.text(alphabet=st.characters(min_codepoint=32, max_codepoint=0x2FF), max_size=30)


@given(text, text)
def test_backends_agree(a, b):
    assert jaro.jaro_winkler_distance(a, b) == pytest.approx(_jwpy.jaro_winkler_distance(a, b), abs=1e-12)


@given(text, text)
def test_symmetric_and_bounded(a, b):
    d = jaro.jaro_winkler_distance(a, b)
    assert 0.0 <= d <= 1.0
    assert d == pytest.approx(jaro.jaro_winkler_distance(b, a), abs=1e-12)
    assert (d == 0.0) == (a == b)
