"""Closed-form f-polynomials of split matroid base polytopes.

Nothing in this module builds a polytope.  Every result is an exact
``FPolynomial`` assembled from binomial sums:

* ``hypersimplex_f``  uniform matroids,
* ``u_poly`` / ``w_poly``  the correction terms for one split hyperplane and
  for a modular pair of split hyperplanes,
* ``split_f``  a connected split matroid from its lambda/mu tables,
* ``matroid_f``  any matroid whose components are split (product rule),
* ``two_flat_f``, ``sparse_paving_f``, ``rank2_f``  special families.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import FormulaError, InputError, NotSplitError
from .matroid import (
    LambdaTable,
    Matroid,
    MuTable,
    canonical_mu_key,
    connected_components,
    is_split,
    lambda_mu_tables,
    restrict,
    to_mask,
)
from .poly import FPolynomial, LaurentPolynomial, binom, check_f_polynomial, multinom

__all__ = [
    "SplitProfile",
    "hypersimplex_f",
    "p_prime",
    "p_poly",
    "u_poly",
    "w_poly",
    "split_f",
    "profile_of",
    "matroid_f",
    "two_flat_f",
    "sparse_paving_f",
    "sparse_paving_u_closed",
    "rank2_f",
]


def _require(cond: bool, message: str):
    if not cond:
        raise InputError(message)


@lru_cache(maxsize=4096)
def hypersimplex_f(k: int, n: int) -> FPolynomial:
    """f-polynomial of the hypersimplex ``Delta(k, n)``.

    ``k == 0`` or ``k == n`` is the point polytope; it comes back as the
    constant 1 with ``degenerate=True``.
    """
    _require(n >= 1 and 0 <= k <= n, f"hypersimplex needs 0 <= k <= n and n >= 1, got k={k}, n={n}")
    if k == 0 or k == n:
        return FPolynomial((1,), degenerate=True)
    coeffs = [binom(n, k)]
    for i in range(1, n):
        coeffs.append(binom(n, i + 1) * sum(binom(n - i - 1, k - j) for j in range(1, i + 1)))
    return FPolynomial(coeffs)


@lru_cache(maxsize=4096)
def p_prime(r: int, h: int) -> FPolynomial:
    """Faces of ``Delta(r, h)`` of positive dimension (none when ``r == h``)."""
    _require(0 < r <= h, f"p_prime needs 0 < r <= h, got r={r}, h={h}")
    if r == h:
        return FPolynomial()
    return hypersimplex_f(r, h) - binom(h, r)


# p_poly packs polynomials into one big integer, one slot of `bits` bits
# per power of x = 1/t.  Every coefficient touched is a count of faces of
# Delta(k, n), so it is below 3**n and fits a slot without carries.

def _slot_bits(n: int) -> int:
    need = (3 ** n).bit_length() + 1
    return -(-need // 32) * 32


@lru_cache(maxsize=512)
def _tail_table(size: int, bits: int) -> tuple[tuple[int, ...], ...]:
    """``T[L][M] = sum_{l<=L} sum_{m<=min(size-l, M)} multinom(size; l, m) x^(l+m)``."""
    rowpref = []
    for ell in range(size + 1):
        acc = 0
        row = []
        for m in range(size + 1):
            if ell + m <= size:
                acc += multinom(size, ell, m) << (bits * (ell + m))
            row.append(acc)
        rowpref.append(row)
    table = []
    prev = [0] * (size + 1)
    for ell in range(size + 1):
        cur = [prev[m] + rowpref[ell][m] for m in range(size + 1)]
        table.append(tuple(cur))
        prev = cur
    return tuple(table)


def _unpack(packed: int, bits: int, length: int) -> list[int]:
    mask = (1 << bits) - 1
    out = []
    for _ in range(length):
        out.append(packed & mask)
        packed >>= bits
    if packed:
        raise FormulaError("packed polynomial overflowed its slots")
    return out


def _check_schubert(r: int, k: int, h: int, n: int, name: str):
    if not 0 < r:
        raise InputError(f"{name}: need r > 0, got r={r}")
    if not r < k:
        raise InputError(f"{name}: need r < k, got r={r}, k={k}")
    if not k < n:
        raise InputError(f"{name}: need k < n, got k={k}, n={n}")
    if not r < h:
        raise InputError(f"{name}: need r < h, got r={r}, h={h}")
    if not h < n:
        raise InputError(f"{name}: need h < n, got h={h}, n={n}")
    if not k - r <= n - h:
        raise InputError(f"{name}: need k - r <= n - h (otherwise no bases), got k-r={k - r}, n-h={n - h}")


@lru_cache(maxsize=65536)
def p_poly(r: int, k: int, h: int, n: int) -> FPolynomial:
    """Non-vertex faces of ``Delta(k, n)`` that contain a cut-off vertex.

    Quadruple sum over ``i`` ones and ``j`` zeros fixed among the first
    ``h`` coordinates and ``l`` ones, ``m`` zeros among the others, weighted
    by ``t**(n-1-i-j-l-m)``.
    """
    _check_schubert(r, k, h, n, "p_poly")
    bits = _slot_bits(n)
    rest = n - h
    tail = _tail_table(rest, bits)
    packed = 0
    for j in range(h - r):
        m_cap = n - k - j - 1
        if m_cap < 0:
            break
        m_cap = min(m_cap, rest)
        for i in range(min(h - j, k - 1) + 1):
            ell_cap = min(k - i - 1, k - r - 1, rest)
            packed += multinom(h, i, j) * (tail[ell_cap][m_cap] << (bits * (i + j)))
    # slot s holds the coefficient of t**(n-1-s)
    coeffs = _unpack(packed, bits, n)
    return FPolynomial(coeffs[::-1])


@lru_cache(maxsize=65536)
def u_poly(r: int, k: int, h: int, n: int) -> FPolynomial:
    """Face-count defect of one split hyperplane.

    Equals ``f(Delta(k, n)) - f(Schubert matroid)`` where the Schubert matroid
    has a single proper cyclic flat of rank ``r`` and size ``h``.
    """
    _check_schubert(r, k, h, n, "u_poly")
    cut_vertices = sum(binom(h, i) * binom(n - h, k - i) for i in range(r + 1, k + 1))
    split_faces = p_prime(r, h) * p_prime(k - r, n - h) * FPolynomial((1, 1))
    return p_poly(r, k, h, n) - split_faces + cut_vertices


@lru_cache(maxsize=65536)
def w_poly(alpha: int, beta: int, a: int, b: int) -> FPolynomial:
    """Face-count defect of a modular pair of split hyperplanes."""
    _require(0 < alpha < a, f"w_poly needs 0 < alpha < a, got alpha={alpha}, a={a}")
    _require(0 < beta < b, f"w_poly needs 0 < beta < b, got beta={beta}, b={b}")
    # Fold each half into a polynomial in the number of fixed coordinates.
    left = [0] * (a + 1)
    for i in range(a - alpha):
        for j in range(alpha):
            left[i + j] += multinom(a, i, j)
    right = [0] * (b + 1)
    for i in range(b - beta):
        for j in range(beta):
            right[i + j] += multinom(b, i, j)
    coeffs = [0] * (a + b)
    for s, x in enumerate(left):
        if not x:
            continue
        for s2, y in enumerate(right):
            if y:
                coeffs[a + b - s - s2 - 2] += x * y
    base = FPolynomial(coeffs)
    return base + base.shift(1)


@dataclass(frozen=True)
class SplitProfile:
    """Everything the split formula needs: rank, size, lambda and mu tables."""

    k: int
    n: int
    lam: LambdaTable = field(default_factory=LambdaTable)
    mu: MuTable = field(default_factory=MuTable)

    def __post_init__(self):
        if not isinstance(self.lam, LambdaTable):
            object.__setattr__(self, "lam", LambdaTable(self.lam))
        if not isinstance(self.mu, MuTable):
            object.__setattr__(self, "mu", MuTable(self.mu))
        _require(0 < self.k < self.n, f"profile needs 0 < k < n, got k={self.k}, n={self.n}")
        for r, h in self.lam:
            _require(r < self.k, f"lambda key {(r, h)} has rank >= k={self.k}")
            _require(h < self.n, f"lambda key {(r, h)} has size >= n={self.n}")


def split_f(profile: SplitProfile, *, check: bool = True) -> FPolynomial:
    """f-polynomial of a connected split matroid from its profile."""
    k, n = profile.k, profile.n
    f = hypersimplex_f(k, n)
    for (r, h), c in profile.lam.items():
        f = f - c * u_poly(r, k, h, n)
    for key, c in profile.mu.items():
        f = f - c * w_poly(*key)
    if check:
        check_f_polynomial(f, n - 1)
    return f


def profile_of(m: Matroid) -> SplitProfile:
    lam, mu = lambda_mu_tables(m)
    return SplitProfile(m.k, m.n, lam, mu)


def matroid_f(m: Matroid) -> FPolynomial:
    """f-polynomial of any matroid whose connected components are split.

    Components are handled separately and multiplied; loops and coloops
    contribute a point.
    """
    comps = connected_components(m)
    result = FPolynomial((1,))
    for comp in comps:
        if len(comp) == 1:
            continue
        sub, labels = restrict(m, to_mask(comp))
        check = is_split(sub)
        if not check:
            f, g = check.certificate
            cert = (frozenset(labels[i] for i in f), frozenset(labels[i] for i in g))
            raise NotSplitError(
                f"component {sorted(comp)} is not split: cyclic flats {sorted(cert[0])} and "
                f"{sorted(cert[1])} violate the split inequality",
                cert,
            )
        result = result * split_f(profile_of(sub))
    check_f_polynomial(result, m.n - len(comps))
    if result[0] != len(m.bases):
        raise FormulaError(f"vertex count {result[0]} differs from basis count {len(m.bases)}")
    return result


def two_flat_f(rF: int, rG: int, sizeF: int, sizeG: int, intersection_size: int, k: int, n: int) -> FPolynomial:
    """f-polynomial of a split matroid whose cyclic flats are exactly empty, F, G and E."""
    c = intersection_size
    _require(sizeF + sizeG - c <= n, "F and G must fit in the ground set: |F| + |G| - |F & G| <= n")
    _require(0 <= c < min(sizeF, sizeG), "F and G must be distinct proper subsets")
    _require(0 < rF < sizeF and 0 < rG < sizeG, "each flat needs 0 < rank < size")
    _require(rF < k and rG < k, "flat ranks must be below k")
    if c + k > rF + rG:
        raise NotSplitError(f"|F & G| + k = {c + k} exceeds rF + rG = {rF + rG}; not split")
    f = hypersimplex_f(k, n) - u_poly(rF, k, sizeF, n) - u_poly(rG, k, sizeG, n)
    if c + k == rF + rG:
        key = canonical_mu_key(rF - c, rG - c, sizeF - c, sizeG - c)
        f = f - w_poly(*key)
    # direct sum of two uniform matroids only when F and G partition E
    dim = n - 2 if (c == 0 and k == rF + rG and sizeF + sizeG == n) else n - 1
    return check_f_polynomial(f, dim)


def sparse_paving_u_closed(k: int, n: int) -> FPolynomial:
    """The u-polynomial of one circuit-hyperplane, via its Laurent closed form."""
    _require(1 < k < n, f"sparse_paving_u_closed needs 1 < k < n, got k={k}, n={n}")
    one_plus_t = LaurentPolynomial(0, (1, 1))

    def power(e):
        out = LaurentPolynomial(0, (1,))
        for _ in range(e):
            out = out * one_plus_t
        return out

    u = LaurentPolynomial(0, (1,)) - k * (n - k) * one_plus_t
    u = u + ((n - k) * power(k + 1) + k * power(n - k + 1) - n * one_plus_t).shift(-1)
    u = u + (power(k) + power(n - k) - power(n) - 1).shift(-2)
    return u.to_fpolynomial()


def sparse_paving_f(k: int, n: int, lam: int, mu: int) -> FPolynomial:
    """f-polynomial of a connected sparse paving matroid.

    ``lam`` circuit-hyperplanes, ``mu`` of their pairs meeting in ``k-2``
    elements.
    """
    _require(0 < k < n, f"sparse_paving_f needs 0 < k < n, got k={k}, n={n}")
    _require(lam >= 0 and mu >= 0, "lambda and mu must be non-negative")
    f = hypersimplex_f(k, n)
    if lam:
        _require(k > 1, "rank-one sparse paving matroids with circuit-hyperplanes have loops")
        f = f - lam * sparse_paving_u_closed(k, n)
    if mu:
        f = f - mu * FPolynomial((0, 0, 1, 1))
    return check_f_polynomial(f, n - 1)


def rank2_f(h: Sequence[int]) -> FPolynomial:
    """f-polynomial of the loopless rank-two matroid with parallel classes of sizes ``h``."""
    h = [int(x) for x in h]
    s = len(h)
    _require(s >= 2, f"a loopless rank-two matroid has at least two parallel classes, got {s}")
    _require(all(x >= 1 for x in h), "class sizes must be positive")
    n = sum(h)
    dim = n - 1 if s >= 3 else n - 2
    sizes = sorted(Counter(h).items())
    coeffs = []
    for i in range(dim + 1):
        q = i + 2
        pair_sum = 0
        for idx, (x, cx) in enumerate(sizes):
            pair_sum += binom(cx, 2) * binom(2 * x + 1, q)
            for y, cy in sizes[idx + 1:]:
                pair_sum += cx * cy * binom(x + y + 1, q)
        single = sum(c * binom(x + 1, q) for x, c in sizes)
        comp = sum(c * binom(n - x, q) for x, c in sizes)
        coeffs.append(binom(n + 1, q) + (s - 1) * binom(n, q) - pair_sum + (s - 2) * single - comp)
    return check_f_polynomial(FPolynomial(coeffs), dim)
