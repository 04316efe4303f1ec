"""Jaro-Winkler distance with a compiled kernel when available.

``BACKEND`` is ``"cython"`` when the extension imported, else ``"python"``.
Set ``C3KIT_PURE_PYTHON=1`` to force the fallback.
"""
from __future__ import annotations

import os

from . import _jwpy

try:
    if os.environ.get("C3KIT_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _jwcore as _impl

    BACKEND = "cython"
except ImportError:
    _impl = _jwpy
    BACKEND = "python"

jaro_similarity = _impl.jaro_similarity
jaro_winkler_similarity = _impl.jaro_winkler_similarity
jaro_winkler_distance = _impl.jaro_winkler_distance
min_distance = _impl.min_distance

__all__ = [
    "BACKEND",
    "jaro_similarity",
    "jaro_winkler_similarity",
    "jaro_winkler_distance",
    "min_distance",
]
