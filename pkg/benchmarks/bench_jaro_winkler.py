"""Time the compiled Jaro-Winkler kernel against the pure-Python fallback.

    python3 benchmarks/bench_jaro_winkler.py [--pairs N] [--repeat R]

The workload mirrors the search: many candidate strings scored against the
seed list of a context with ``min_distance``.
"""
from __future__ import annotations

import argparse
import random
import string
import timeit

from c3kit import _jwpy, jaro
from c3kit.registry import Group, builtin_registry


def workload(n: int, rng: random.Random) -> list[tuple[str, list[str]]]:
    contexts = builtin_registry().by_group(Group.STRING)
    alphabet = string.ascii_letters + string.digits + "@._- "
    out = []
    for _ in range(n):
        seeds = list(rng.choice(contexts).seeds)
        value = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 20)))
        out.append((value, seeds))
    return out


def run(min_distance, work) -> None:
    for value, seeds in work:
        min_distance(value, seeds)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    work = workload(args.pairs, random.Random(0))
    n_pairs = sum(len(s) for _, s in work)
    backends = [("python", _jwpy.min_distance)]
    if jaro.BACKEND == "cython":
        backends.insert(0, ("cython", jaro.min_distance))
    else:
        print("compiled kernel not available; timing the fallback only")
    times = {}
    for name, fn in backends:
        best = min(timeit.repeat(lambda: run(fn, work), number=1, repeat=args.repeat))
        times[name] = best
        print(f"{name:7s} {best * 1e3:9.1f} ms  {n_pairs / best / 1e6:6.2f} M comparisons/s")
    if len(times) == 2:
        print(f"speed-up {times['python'] / times['cython']:.1f}x")


if __name__ == "__main__":
    main()
