"""Shared matroid corpora for the formula/oracle comparisons."""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

from polyface.catalog import (
    greedy_johnson_stable_set,
    random_johnson_stable_set,
    rank2,
    schubert,
    sparse_paving,
    two_flat,
    two_flat_parameters_valid,
)
from polyface.oracle import f_vector_oracle

# free-form lines printed after the acceptance summary
REPORTS: list[str] = []


def schubert_params(max_n: int):
    for n in range(3, max_n + 1):
        for k in range(2, n):
            for r in range(1, k):
                for h in range(r + 1, n - (k - r) + 1):
                    yield r, k, h, n


def two_flat_params(max_n: int, min_n: int = 4, ordered: bool = False):
    """Valid parameters; ``ordered`` keeps only |F| <= |G| (the rest are relabellings)."""
    for n in range(min_n, max_n + 1):
        for k in range(2, n):
            for c in range(n):
                for size_f in range(c + 2, n):
                    for size_g in range(size_f if ordered else c + 2, n - size_f + c + 1):
                        for r_f in range(c + 1, min(size_f, k)):
                            for r_g in range(max(c + 1, c + k - r_f), min(size_g, k)):
                                p = (r_f, r_g, size_f, size_g, c, k, n)
                                assert two_flat_parameters_valid(*p)
                                yield p


def partitions(n: int, max_part: int | None = None):
    """Partitions of n as non-increasing tuples."""
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def rank2_partitions(max_n: int, min_n: int = 2):
    for n in range(min_n, max_n + 1):
        for p in partitions(n):
            if len(p) >= 2:
                yield p


def sparse_paving_sets(max_n: int, seed: int = 2024, per_shape: int = 20):
    """(k, n, circuit-hyperplanes) with 2 <= k <= n-2: greedy families plus seeded random ones."""
    rng = random.Random(seed)
    out = []
    seen = set()
    for n in range(4, max_n + 1):
        for k in range(2, n - 1):
            candidates = [greedy_johnson_stable_set(n, k), []]
            for _ in range(per_shape):
                size = rng.randint(1, max(1, len(candidates[0]) + 1))
                candidates.append(random_johnson_stable_set(n, k, rng, size))
            for sets in candidates:
                key = (n, k, frozenset(sets))
                if key in seen:
                    continue
                seen.add(key)
                out.append((k, n, [list(s) for s in sets]))
    return out


@lru_cache(maxsize=None)
def schubert_corpus(max_n: int = 8):
    return tuple((p, schubert(*p)) for p in schubert_params(max_n))


@lru_cache(maxsize=None)
def two_flat_corpus(max_n: int = 8):
    return tuple((p, two_flat(*p)) for p in two_flat_params(max_n))


@lru_cache(maxsize=None)
def sparse_paving_corpus(max_n: int = 8):
    return tuple(((k, n, len(sets)), sparse_paving(k, n, sets)) for k, n, sets in sparse_paving_sets(max_n))


@lru_cache(maxsize=None)
def rank2_corpus(max_n: int = 9):
    return tuple((p, rank2(p)) for p in rank2_partitions(max_n))


def full_corpus():
    """Every explicit matroid used by the oracle comparisons."""
    return (
        [("schubert", p, m) for p, m in schubert_corpus()]
        + [("two_flat", p, m) for p, m in two_flat_corpus()]
        + [("sparse_paving", p, m) for p, m in sparse_paving_corpus()]
        + [("rank2", p, m) for p, m in rank2_corpus()]
    )


@lru_cache(maxsize=None)
def oracle(m):
    return f_vector_oracle(m)


def combos(n: int, k: int):
    return list(itertools.combinations(range(n), k))
