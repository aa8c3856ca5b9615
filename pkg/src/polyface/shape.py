"""Sequence-shape checks and facet counts for sparse paving matroids."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .poly import binom

__all__ = ["is_unimodal", "is_log_concave", "facet_count_sparse_paving", "graham_sloane_bound"]


def is_unimodal(seq: Sequence[int]) -> bool:
    """Weakly increasing up to some peak, weakly decreasing after it."""
    seq = list(seq)
    i = 1
    while i < len(seq) and seq[i - 1] <= seq[i]:
        i += 1
    while i < len(seq) and seq[i - 1] >= seq[i]:
        i += 1
    return i >= len(seq)


def is_log_concave(seq: Sequence[int]) -> bool:
    """``a[j]**2 >= a[j-1] * a[j+1]`` at every interior index; entries must be positive."""
    seq = list(seq)
    if any(a <= 0 for a in seq):
        raise InputError("log-concavity is only defined here for positive sequences")
    return all(seq[j] * seq[j] >= seq[j - 1] * seq[j + 1] for j in range(1, len(seq) - 1))


def facet_count_sparse_paving(n: int, lam: int, k: int | None = None) -> int:
    """Facets of a connected sparse paving base polytope with ``lam`` circuit-hyperplanes.

    Valid for ``3 <= k <= n - 3``.  In rank 2 (and corank 2) a circuit-hyperplane
    is a parallel (series) pair and some cube facets disappear, so passing such
    a ``k`` raises.
    """
    if n <= 4:
        raise InputError(f"the facet count 2n + lambda needs n > 4, got n={n}")
    if k is not None and not 3 <= k <= n - 3:
        raise InputError(f"the facet count 2n + lambda needs 3 <= k <= n - 3, got k={k}, n={n}")
    return 2 * n + lam


def graham_sloane_bound(n: int) -> Fraction:
    """``binom(n, n // 2) / n``, a lower bound for the maximum number of circuit-hyperplanes."""
    if n <= 0:
        raise InputError("graham_sloane_bound needs n > 0")
    return Fraction(binom(n, n // 2), n)
