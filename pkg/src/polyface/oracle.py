"""Brute-force face lattices of matroid base polytopes.

Ground truth for the closed formulas, usable only at small scale.  The
polytope is described by the inequalities ``0 <= x_i <= 1`` and
``x(F) <= rk F`` for every cyclic flat ``F`` (redundant ones included).  A
face is the set of vertices tight on some subset of these inequalities, so
the lattice is the closure of the single-inequality tight sets under
intersection.  Face dimensions come from exact integer elimination.
"""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass

from .errors import InputError, OracleLimitError
from .matroid import Matroid, cyclic_flats, from_mask
from .poly import FPolynomial, check_f_polynomial

__all__ = [
    "DEFAULT_MAX_N",
    "DEFAULT_MAX_FACES",
    "DEFAULT_MAX_VERTICES",
    "Inequality",
    "FaceLattice",
    "oracle_limit",
    "polytope_vertices",
    "inequality_system",
    "affine_dimension",
    "face_lattice",
    "f_vector_oracle",
    "classify_2faces",
]

DEFAULT_MAX_N = 10
DEFAULT_MAX_FACES = 500_000
DEFAULT_MAX_VERTICES = 5_000


def oracle_limit() -> int:
    """Largest ground set the oracle accepts; ``POLYFACE_ORACLE_LIMIT`` overrides."""
    raw = os.environ.get("POLYFACE_ORACLE_LIMIT")
    if raw is None or raw == "":
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"POLYFACE_ORACLE_LIMIT must be an integer, got {raw!r}") from None
    if value <= 0:
        raise InputError("POLYFACE_ORACLE_LIMIT must be positive")
    return value


def polytope_vertices(m: Matroid) -> list[tuple[int, ...]]:
    """Indicator vectors of the bases, in the matroid's basis order."""
    return [tuple((b >> i) & 1 for i in range(m.n)) for b in m.bases]


@dataclass(frozen=True)
class Inequality:
    """``sum(x[i] for i in support) <= bound`` (or ``>=`` when ``lower``)."""

    support: frozenset
    bound: int
    lower: bool = False

    def tight(self, point) -> bool:
        return sum(point[i] for i in self.support) == self.bound

    def holds(self, point) -> bool:
        s = sum(point[i] for i in self.support)
        return s >= self.bound if self.lower else s <= self.bound


def inequality_system(m: Matroid) -> list[Inequality]:
    """Unit-cube bounds plus one rank inequality per cyclic flat.

    The equation ``x(E) = k`` holds on every vertex and is left implicit.
    """
    out = []
    for i in range(m.n):
        out.append(Inequality(frozenset((i,)), 0, lower=True))
        out.append(Inequality(frozenset((i,)), 1))
    for z in cyclic_flats(m):
        if z.mask and z.mask != m.ground:
            out.append(Inequality(z.elements, z.rank))
    return out


def affine_dimension(points) -> int:
    """Dimension of the affine hull of integer points, by fraction-free elimination."""
    points = list(points)
    if not points:
        return -1
    base = points[0]
    width = len(base)
    pivots: list[tuple[int, list[int]]] = []
    for p in points[1:]:
        v = [a - b for a, b in zip(p, base)]
        for col, row in pivots:
            x = v[col]
            if x:
                y = row[col]
                v = [y * a - x * b for a, b in zip(v, row)]
        lead = next((i for i, a in enumerate(v) if a), None)
        if lead is None:
            continue
        g = 0
        for a in v:
            if a:
                g = math.gcd(g, a)
        if g > 1:
            v = [a // g for a in v]
        pivots.append((lead, v))
        if len(pivots) == width:
            break
    return len(pivots)


@dataclass(frozen=True)
class FaceLattice:
    """All non-empty faces as ``(vertex_mask, dimension)`` pairs.

    Bit ``j`` of a vertex mask refers to ``vertices[j]``; faces are sorted by
    dimension and then by their vertex index tuples.
    """

    n: int
    vertices: tuple[tuple[int, ...], ...]
    faces: tuple[tuple[int, int], ...]

    @property
    def dimension(self) -> int:
        return self.faces[-1][1]

    def f_vector(self) -> FPolynomial:
        tally = Counter(d for _, d in self.faces)
        return FPolynomial([tally[d] for d in range(self.dimension + 1)])

    def face_vertices(self, mask: int) -> list[tuple[int, ...]]:
        return [self.vertices[j] for j in from_mask(mask)]


def face_lattice(
    m: Matroid,
    *,
    max_n: int | None = None,
    max_faces: int = DEFAULT_MAX_FACES,
    max_vertices: int = DEFAULT_MAX_VERTICES,
) -> FaceLattice:
    """Complete face lattice of the base polytope.

    Refuses (``OracleLimitError``) rather than truncating when the ground
    set, vertex count, or face count exceeds its limit.
    """
    limit = oracle_limit() if max_n is None else max_n
    if m.n > limit:
        raise OracleLimitError(f"oracle refuses n={m.n} (limit {limit}; set POLYFACE_ORACLE_LIMIT)")
    if len(m.bases) > max_vertices:
        raise OracleLimitError(f"oracle refuses {len(m.bases)} vertices (limit {max_vertices})")
    vertices = polytope_vertices(m)
    full = (1 << len(vertices)) - 1
    generators = set()
    for ineq in inequality_system(m):
        mask = 0
        for j, p in enumerate(vertices):
            if ineq.tight(p):
                mask |= 1 << j
        if mask and mask != full:
            generators.add(mask)
    generators = sorted(generators)

    seen = {full}
    frontier = [full]
    while frontier:
        nxt = []
        for face in frontier:
            for g in generators:
                sub = face & g
                if sub and sub not in seen:
                    seen.add(sub)
                    nxt.append(sub)
                    if len(seen) > max_faces:
                        raise OracleLimitError(f"face lattice exceeds {max_faces} faces")
        frontier = nxt

    faces = []
    for mask in seen:
        idx = from_mask(mask)
        faces.append((mask, affine_dimension(vertices[j] for j in idx), idx))
    faces.sort(key=lambda x: (x[1], x[2]))
    return FaceLattice(m.n, tuple(vertices), tuple((mask, d) for mask, d, _ in faces))


def f_vector_oracle(m: Matroid, **limits) -> FPolynomial:
    """f-polynomial read off the brute-force face lattice."""
    return check_f_polynomial(face_lattice(m, **limits).f_vector())


def classify_2faces(m: Matroid, **limits) -> dict[int, int]:
    """Two-dimensional faces tallied by vertex count (3: triangles, 4: squares)."""
    lattice = face_lattice(m, **limits)
    return dict(sorted(Counter(mask.bit_count() for mask, d in lattice.faces if d == 2).items()))
