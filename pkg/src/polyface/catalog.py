"""Named matroid families and the JSON matroid description format.

Elements are 0-based everywhere.  A JSON description is one of::

    {"n": 4, "bases": [[0, 2], [0, 3], [1, 2], [1, 3]]}
    {"family": "schubert", "params": [2, 3, 3, 6]}
    {"direct_sum": [{"family": "uniform", "params": [1, 2]}, ...]}

Schubert parameters are ``(r, k, h, n)``: the rank and size of the single
proper cyclic flat (placed on elements ``0..h-1``), then the rank and size of
the matroid.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from .errors import InputError
from .matroid import Matroid, direct_sum, to_mask

__all__ = [
    "MatroidSpec",
    "FAMILIES",
    "uniform",
    "schubert",
    "pg23",
    "binary_affine",
    "sparse_paving",
    "rank2",
    "two_flat",
    "two_flat_parameters_valid",
    "greedy_johnson_stable_set",
    "random_johnson_stable_set",
    "is_johnson_stable",
    "circuit_hyperplane_counts",
    "build_matroid",
    "serialize",
]


def uniform(k: int, n: int) -> Matroid:
    if not 0 < k <= n:
        raise InputError(f"uniform needs 0 < k <= n, got k={k}, n={n}")
    return Matroid(n, itertools.combinations(range(n), k))


def schubert(r: int, k: int, h: int, n: int) -> Matroid:
    """k-subsets with at most ``r`` elements among the first ``h``."""
    if not (0 < r < k < n and r < h < n and k - r <= n - h):
        raise InputError(
            f"schubert needs 0 < r < k < n, r < h < n and k - r <= n - h, got r={r}, k={k}, h={h}, n={n}"
        )
    head = (1 << h) - 1
    bases = [b for b in map(to_mask, itertools.combinations(range(n), k)) if (b & head).bit_count() <= r]
    return Matroid(n, bases)


def _pg2_points(q: int) -> list[tuple[int, int, int]]:
    # normalized representatives: first non-zero coordinate equal to 1
    pts = []
    for v in itertools.product(range(q), repeat=3):
        if any(v) and v[next(i for i, x in enumerate(v) if x)] == 1:
            pts.append(v)
    return pts


def pg23() -> Matroid:
    """The projective plane over the three-element field: 13 points, 13 four-point lines."""
    pts = _pg2_points(3)
    bases = []
    for a, b, c in itertools.combinations(range(len(pts)), 3):
        (x1, y1, z1), (x2, y2, z2), (x3, y3, z3) = pts[a], pts[b], pts[c]
        det = x1 * (y2 * z3 - y3 * z2) - y1 * (x2 * z3 - x3 * z2) + z1 * (x2 * y3 - x3 * y2)
        if det % 3:
            bases.append((a, b, c))
    return Matroid(len(pts), bases)


def binary_affine(m: int) -> Matroid:
    """Rank-4 matroid of affinely independent 4-sets in the binary affine space of dimension m."""
    if m < 3:
        raise InputError(f"binary_affine needs m >= 3, got {m}")
    n = 1 << m
    bases = [q for q in itertools.combinations(range(n), 4) if q[0] ^ q[1] ^ q[2] ^ q[3]]
    return Matroid(n, bases)


def is_johnson_stable(sets: Sequence[Sequence[int]]) -> bool:
    """Pairwise symmetric difference at least 4."""
    masks = [to_mask(s) for s in sets]
    return all((a ^ b).bit_count() >= 4 for a, b in itertools.combinations(masks, 2))


def sparse_paving(k: int, n: int, circuit_hyperplanes: Sequence[Sequence[int]]) -> Matroid:
    """Relax ``U(k, n)`` by deleting a Johnson-stable family of k-sets from its bases."""
    if not 0 < k < n:
        raise InputError(f"sparse_paving needs 0 < k < n, got k={k}, n={n}")
    removed = set()
    for s in circuit_hyperplanes:
        s = list(s)
        if len(s) != k or len(set(s)) != k or any(not 0 <= e < n for e in s):
            raise InputError(f"circuit-hyperplane {s} is not a {k}-subset of 0..{n - 1}")
        removed.add(to_mask(s))
    if len(removed) != len(circuit_hyperplanes):
        raise InputError("repeated circuit-hyperplane")
    if not is_johnson_stable(circuit_hyperplanes):
        raise InputError("circuit-hyperplanes must pairwise differ in at least 4 elements")
    bases = [b for b in map(to_mask, itertools.combinations(range(n), k)) if b not in removed]
    return Matroid(n, bases)


def rank2(h: Sequence[int]) -> Matroid:
    """Loopless rank-two matroid whose parallel classes are consecutive blocks of sizes ``h``."""
    h = list(h)
    if len(h) < 2 or any(x < 1 for x in h):
        raise InputError(f"rank2 needs at least two positive class sizes, got {h}")
    label = []
    for part, size in enumerate(h):
        label.extend([part] * size)
    n = len(label)
    bases = [(a, b) for a, b in itertools.combinations(range(n), 2) if label[a] != label[b]]
    return Matroid(n, bases)


def two_flat(rF: int, rG: int, sizeF: int, sizeG: int, c: int, k: int, n: int) -> Matroid:
    """k-sets meeting ``F`` in at most rF elements and ``G`` in at most rG.

    ``F = 0..sizeF-1`` and ``G`` is the next block of ``sizeG`` elements
    starting at ``sizeF - c``; elements past ``F | G`` are free.  Whether the
    cyclic flats are exactly empty, F, G, E is checked by
    ``two_flat_parameters_valid``.
    """
    if sizeF + sizeG - c > n or not 0 <= c < min(sizeF, sizeG):
        raise InputError("two_flat needs |F | G| <= n with |F & G| = c and F, G proper")
    F = (1 << sizeF) - 1
    G = ((1 << sizeG) - 1) << (sizeF - c)
    bases = [
        b
        for b in map(to_mask, itertools.combinations(range(n), k))
        if (b & F).bit_count() <= rF and (b & G).bit_count() <= rG
    ]
    if not bases:
        raise InputError("two_flat parameters leave no bases")
    return Matroid(n, bases)


def two_flat_parameters_valid(rF: int, rG: int, sizeF: int, sizeG: int, c: int, k: int, n: int) -> bool:
    """Parameters for which ``two_flat`` has cyclic flats exactly empty, F, G, E and is split."""
    return (
        sizeF + sizeG - c <= n
        and 0 <= c < rF < sizeF
        and c < rG < sizeG
        and rF < k
        and rG < k
        and c + k <= rF + rG
    )


def circuit_hyperplane_counts(k: int, sets: Sequence[Sequence[int]]) -> tuple[int, int]:
    """``(lambda, mu)``: the number of sets and of pairs sharing ``k - 2`` elements."""
    masks = [to_mask(s) for s in sets]
    mu = sum(1 for a, b in itertools.combinations(masks, 2) if (a & b).bit_count() == k - 2)
    return len(masks), mu


def greedy_johnson_stable_set(n: int, k: int) -> list[tuple[int, ...]]:
    """Lexicographic greedy family of k-subsets at pairwise symmetric difference >= 4.

    Maximal but not necessarily maximum.
    """
    if not 0 < k < n:
        raise InputError(f"greedy_johnson_stable_set needs 0 < k < n, got n={n}, k={k}")
    chosen: list[int] = []
    out = []
    for comb in itertools.combinations(range(n), k):
        mask = to_mask(comb)
        if all((mask & c).bit_count() <= k - 2 for c in chosen):
            chosen.append(mask)
            out.append(comb)
    return out


def random_johnson_stable_set(n: int, k: int, rng: random.Random, size: int | None = None) -> list[tuple[int, ...]]:
    """Greedy over a shuffled order, stopping after ``size`` picks when given."""
    combos = list(itertools.combinations(range(n), k))
    rng.shuffle(combos)
    chosen: list[int] = []
    out = []
    for comb in combos:
        if size is not None and len(out) >= size:
            break
        mask = to_mask(comb)
        if all((mask & c).bit_count() <= k - 2 for c in chosen):
            chosen.append(mask)
            out.append(tuple(sorted(comb)))
    return out


def _ints(params, count, name):
    if len(params) != count:
        raise InputError(f"{name} takes {count} integer parameters, got {len(params)}")
    out = []
    for p in params:
        if isinstance(p, bool) or not isinstance(p, int):
            raise InputError(f"{name} parameters must be integers, got {p!r}")
        out.append(p)
    return out


def _build_sparse_paving(params):
    if len(params) != 3:
        raise InputError("sparse_paving takes [k, n, [circuit-hyperplane, ...]]")
    k, n = _ints(params[:2], 2, "sparse_paving")
    sets = params[2]
    if not isinstance(sets, (list, tuple)) or not all(isinstance(s, (list, tuple)) for s in sets):
        raise InputError("sparse_paving circuit-hyperplanes must be a list of lists")
    return sparse_paving(k, n, [list(s) for s in sets])


def _build_rank2(params):
    return rank2(_ints(params, len(params), "rank2"))


FAMILIES: dict[str, tuple[str, Callable[[list], Matroid]]] = {
    "uniform": ("k,n", lambda p: uniform(*_ints(p, 2, "uniform"))),
    "schubert": ("r,k,h,n", lambda p: schubert(*_ints(p, 4, "schubert"))),
    "pg23": ("(none)", lambda p: (_ints(p, 0, "pg23"), pg23())[1]),
    "binary_affine": ("m", lambda p: binary_affine(*_ints(p, 1, "binary_affine"))),
    "sparse_paving": ("k,n,[circuit-hyperplanes]", _build_sparse_paving),
    "rank2": ("h1,...,hs", _build_rank2),
    "two_flat": ("rF,rG,|F|,|G|,|F&G|,k,n", lambda p: two_flat(*_ints(p, 7, "two_flat"))),
    "greedy_sparse_paving": (
        "k,n",
        lambda p: (lambda k, n: sparse_paving(k, n, greedy_johnson_stable_set(n, k)))(
            *_ints(p, 2, "greedy_sparse_paving")
        ),
    ),
}


@dataclass(frozen=True)
class MatroidSpec:
    """Parsed matroid description: explicit bases, a named family, or a direct sum."""

    n: int | None = None
    bases: tuple[tuple[int, ...], ...] | None = None
    family: str | None = None
    params: tuple = ()
    parts: tuple["MatroidSpec", ...] = ()

    @classmethod
    def from_json(cls, obj: Any) -> "MatroidSpec":
        if not isinstance(obj, dict):
            raise InputError("a matroid description must be a JSON object")
        if "direct_sum" in obj or obj.get("family") == "direct_sum":
            parts = obj.get("direct_sum", obj.get("params"))
            if not isinstance(parts, list) or not parts:
                raise InputError("direct_sum needs a non-empty list of descriptions")
            return cls(family="direct_sum", parts=tuple(cls.from_json(p) for p in parts))
        if "family" in obj:
            name = obj["family"]
            if name not in FAMILIES:
                raise InputError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}")
            params = obj.get("params", [])
            if not isinstance(params, list):
                raise InputError("params must be a list")
            return cls(family=name, params=_freeze(params))
        if "n" in obj and "bases" in obj:
            n, bases = obj["n"], obj["bases"]
            if isinstance(n, bool) or not isinstance(n, int):
                raise InputError("n must be an integer")
            if not isinstance(bases, list) or not all(isinstance(b, list) for b in bases):
                raise InputError("bases must be a list of lists")
            return cls(n=n, bases=tuple(tuple(b) for b in bases))
        raise InputError('expected {"n", "bases"}, {"family", "params"} or {"direct_sum"}')

    def to_json(self) -> dict:
        if self.family == "direct_sum":
            return {"direct_sum": [p.to_json() for p in self.parts]}
        if self.family is not None:
            return {"family": self.family, "params": _thaw(self.params)}
        return {"n": self.n, "bases": [list(b) for b in self.bases]}


def _freeze(x):
    if isinstance(x, list):
        return tuple(_freeze(v) for v in x)
    return x


def _thaw(x):
    if isinstance(x, tuple):
        return [_thaw(v) for v in x]
    return x


def build_matroid(spec: MatroidSpec | dict) -> Matroid:
    if not isinstance(spec, MatroidSpec):
        spec = MatroidSpec.from_json(spec)
    if spec.family == "direct_sum":
        return direct_sum(*(build_matroid(p) for p in spec.parts))
    if spec.family is not None:
        return FAMILIES[spec.family][1](_thaw(spec.params))
    return Matroid(spec.n, spec.bases)


def serialize(m: Matroid) -> dict:
    """Explicit JSON description of ``m``."""
    return {"n": m.n, "bases": m.basis_lists()}
