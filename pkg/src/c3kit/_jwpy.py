"""Pure-Python Jaro-Winkler kernel (fallback for the compiled ``_jwcore``)."""
from __future__ import annotations

PREFIX_SCALE = 0.1
PREFIX_CAP = 4


def jaro_similarity(a: str, b: str) -> float:
    la, lb = len(a), len(b)
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    window = max(la, lb) // 2 - 1
    if window < 0:
        window = 0
    a_used = [False] * la
    b_used = [False] * lb
    matches = 0
    for i in range(la):
        ch = a[i]
        for j in range(max(0, i - window), min(i + window + 1, lb)):
            if not b_used[j] and b[j] == ch:
                a_used[i] = b_used[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    half = 0
    k = 0
    for i in range(la):
        if a_used[i]:
            while not b_used[k]:
                k += 1
            if a[i] != b[k]:
                half += 1
            k += 1
    transpositions = half // 2
    return (matches / la + matches / lb + (matches - transpositions) / matches) / 3.0


def jaro_winkler_similarity(a: str, b: str) -> float:
    sim = jaro_similarity(a, b)
    prefix = 0
    for x, y in zip(a[:PREFIX_CAP], b[:PREFIX_CAP]):
        if x != y:
            break
        prefix += 1
    return sim + prefix * PREFIX_SCALE * (1.0 - sim)


def jaro_winkler_distance(a: str, b: str) -> float:
    if a == b:
        return 0.0
    return 1.0 - jaro_winkler_similarity(a, b)


def min_distance(value: str, seeds) -> float:
    best = 1.0
    for seed in seeds:
        d = jaro_winkler_distance(value, seed)
        if d < best:
            best = d
            if best == 0.0:
                break
    return best
