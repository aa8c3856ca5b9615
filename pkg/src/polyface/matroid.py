"""Matroids given by an explicit list of bases.

Subsets of the ground set ``{0, ..., n-1}`` are machine-word style bitmasks
(Python ints): element ``e`` is present iff bit ``e`` is set.  ``n <= 64`` is
enforced.  All queries are exact and deterministic; the per-instance memo
tables only cache pure function values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, NamedTuple

from .errors import InputError, NotSplitError

__all__ = [
    "MAX_ELEMENTS",
    "Matroid",
    "CyclicFlat",
    "LambdaTable",
    "MuTable",
    "SplitCheck",
    "to_mask",
    "from_mask",
    "rank_of",
    "closure",
    "cyclic_flats",
    "lambda_mu_tables",
    "connected_components",
    "is_connected",
    "is_split",
    "split_violations",
    "dual",
    "restrict",
    "direct_sum",
    "canonical_mu_key",
]

MAX_ELEMENTS = 64


def to_mask(elements: Iterable[int]) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << e
    return mask


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Matroid:
    """A matroid on ``{0, ..., n-1}`` described by its bases.

    >>> m = Matroid(4, [[0, 2], [0, 3], [1, 2], [1, 3]])
    >>> m.k, len(m.bases)
    (2, 4)
    """

    def __init__(self, n: int, bases: Iterable[Iterable[int] | int], *, check_exchange: bool = False):
        if not isinstance(n, int) or isinstance(n, bool) or n <= 0:
            raise InputError(f"ground set size must be a positive integer, got {n!r}")
        if n > MAX_ELEMENTS:
            raise InputError(f"ground set size {n} exceeds the supported maximum {MAX_ELEMENTS}")
        masks = []
        full = (1 << n) - 1
        for b in bases:
            if isinstance(b, int) and not isinstance(b, bool):
                mask = b
            else:
                elems = list(b)
                for e in elems:
                    if not isinstance(e, int) or isinstance(e, bool) or not 0 <= e < n:
                        raise InputError(f"basis element {e!r} out of range 0..{n - 1}")
                mask = to_mask(elems)
                if mask.bit_count() != len(elems):
                    raise InputError(f"basis {sorted(elems)} repeats an element")
            if mask & ~full:
                raise InputError("basis mask uses elements outside the ground set")
            masks.append(mask)
        if not masks:
            raise InputError("a matroid needs at least one basis")
        k = masks[0].bit_count()
        if any(b.bit_count() != k for b in masks):
            raise InputError("bases have different cardinalities")
        if len(set(masks)) != len(masks):
            raise InputError("duplicate bases")
        if k == 0:
            raise InputError("rank must be positive")
        self.n = n
        self.k = k
        self.bases: tuple[int, ...] = tuple(sorted(masks))
        self.basis_set = frozenset(masks)
        self.ground = full
        self._independent = None
        self._rank_memo: dict[int, int] = {}
        if check_exchange:
            bad = self.exchange_violation()
            if bad is not None:
                b1, b2, e = bad
                raise InputError(
                    f"basis exchange fails for {from_mask(b1)}, {from_mask(b2)} at element {e}"
                )

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, k={self.k}, bases={len(self.bases)})"

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.basis_set == other.basis_set

    def __hash__(self):
        return hash((self.n, self.basis_set))

    def basis_lists(self) -> list[list[int]]:
        return [list(from_mask(b)) for b in self.bases]

    def exchange_violation(self):
        """First ``(B1, B2, e)`` breaking basis exchange, or ``None``."""
        for b1 in self.bases:
            for b2 in self.bases:
                only2 = b2 & ~b1
                for e in _bits(b1 & ~b2):
                    base = b1 & ~(1 << e)
                    if not any((base | (1 << f)) in self.basis_set for f in _bits(only2)):
                        return b1, b2, e
        return None

    @property
    def independent_sets(self) -> frozenset[int]:
        if self._independent is None:
            level = set(self.bases)
            found = set(level)
            while level:
                nxt = set()
                for s in level:
                    for e in _bits(s):
                        t = s & ~(1 << e)
                        if t not in found:
                            nxt.add(t)
                found |= nxt
                level = nxt
            self._independent = frozenset(found)
        return self._independent

    def rank(self, mask: int) -> int:
        r = self._rank_memo.get(mask)
        if r is None:
            indep = self.independent_sets
            cur = 0
            for e in _bits(mask & self.ground):
                trial = cur | (1 << e)
                if trial in indep:
                    cur = trial
            r = cur.bit_count()
            self._rank_memo[mask] = r
        return r

    def closure(self, mask: int) -> int:
        r = self.rank(mask)
        out = mask
        for e in _bits(self.ground & ~mask):
            if self.rank(mask | (1 << e)) == r:
                out |= 1 << e
        return out

    def is_flat(self, mask: int) -> bool:
        return self.closure(mask) == mask

    def is_cyclic(self, mask: int) -> bool:
        r = self.rank(mask)
        return all(self.rank(mask & ~(1 << e)) == r for e in _bits(mask))


def _as_mask(m: Matroid, s) -> int:
    if isinstance(s, int) and not isinstance(s, bool):
        raise InputError("pass subsets as iterables of elements; use Matroid.rank for masks")
    elems = list(s)
    for e in elems:
        if not isinstance(e, int) or not 0 <= e < m.n:
            raise InputError(f"element {e!r} out of range 0..{m.n - 1}")
    return to_mask(elems)


def rank_of(m: Matroid, s: Iterable[int]) -> int:
    """Rank of the subset ``s`` (an iterable of element indices)."""
    return m.rank(_as_mask(m, s))


def closure(m: Matroid, s: Iterable[int]) -> frozenset[int]:
    return frozenset(from_mask(m.closure(_as_mask(m, s))))


@dataclass(frozen=True, order=False)
class CyclicFlat:
    elements: frozenset
    rank: int
    size: int
    mask: int

    @classmethod
    def from_mask(cls, m: Matroid, mask: int) -> "CyclicFlat":
        return cls(frozenset(from_mask(mask)), m.rank(mask), mask.bit_count(), mask)

    def sort_key(self):
        return (self.size, tuple(sorted(self.elements)))


def _flats(m: Matroid) -> set[int]:
    """All flats, generated upward by covers starting from the closure of the empty set."""
    bottom = m.closure(0)
    seen = {bottom}
    frontier = [bottom]
    while frontier:
        nxt = []
        for f in frontier:
            for e in _bits(m.ground & ~f):
                g = m.closure(f | (1 << e))
                if g not in seen:
                    seen.add(g)
                    nxt.append(g)
        frontier = nxt
    return seen


def cyclic_flats(m: Matroid) -> list[CyclicFlat]:
    """All cyclic flats, sorted by size and then lexicographically."""
    out = [CyclicFlat.from_mask(m, f) for f in _flats(m) if m.is_cyclic(f)]
    out.sort(key=CyclicFlat.sort_key)
    return out


def _proper_cyclic_flats(m: Matroid) -> list[CyclicFlat]:
    return [z for z in cyclic_flats(m) if z.mask != 0 and z.mask != m.ground]


def canonical_mu_key(alpha: int, beta: int, a: int, b: int) -> tuple[int, int, int, int]:
    """Order a modular-pair key so that ``a < b``, or ``a == b`` and ``alpha <= beta``."""
    if a > b or (a == b and alpha > beta):
        return beta, alpha, b, a
    return alpha, beta, a, b


class _CountTable(Mapping):
    __slots__ = ("_entries",)

    def __init__(self, entries=None):
        clean = {}
        for key, c in dict(entries or {}).items():
            key = tuple(int(x) for x in key)
            self._check_key(key)
            if c < 0:
                raise InputError(f"negative count {c} for key {key}")
            if c:
                clean[key] = clean.get(key, 0) + int(c)
        self._entries = dict(sorted(clean.items()))

    def _check_key(self, key):
        pass

    def __getitem__(self, key):
        return self._entries[tuple(key)]

    def get(self, key, default=0):
        return self._entries.get(tuple(key), default)

    def __iter__(self):
        return iter(self._entries)

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if isinstance(other, _CountTable):
            return type(self) is type(other) and self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == {tuple(k): v for k, v in other.items() if v}
        return NotImplemented

    def total(self) -> int:
        return sum(self._entries.values())

    def __repr__(self):
        return f"{type(self).__name__}({self._entries})"


class LambdaTable(_CountTable):
    """Counts of proper non-empty cyclic flats keyed by ``(rank, size)``."""

    def _check_key(self, key):
        if len(key) != 2 or not 0 < key[0] < key[1]:
            raise InputError(f"lambda key {key} must satisfy 0 < r < h")


class MuTable(_CountTable):
    """Counts of modular pairs keyed canonically by ``(alpha, beta, a, b)``."""

    def _check_key(self, key):
        if len(key) != 4:
            raise InputError(f"mu key {key} must have four entries")
        alpha, beta, a, b = key
        if not (0 < alpha < a and 0 < beta < b):
            raise InputError(f"mu key {key} must satisfy 0 < alpha < a and 0 < beta < b")
        if canonical_mu_key(*key) != key:
            raise InputError(f"mu key {key} is not canonical")


class SplitCheck(NamedTuple):
    split: bool
    certificate: tuple[frozenset, frozenset] | None = None

    def __bool__(self):
        return self.split


def restrict(m: Matroid, mask: int) -> tuple[Matroid, tuple[int, ...]]:
    """Restriction to ``mask`` relabelled onto ``0..|mask|-1``.

    Returns the matroid and the original labels of its elements.
    """
    labels = from_mask(mask)
    if not labels:
        raise InputError("cannot restrict to the empty set")
    pieces = {b & mask for b in m.bases}
    top = max(p.bit_count() for p in pieces)
    relabel = {e: i for i, e in enumerate(labels)}
    bases = [[relabel[e] for e in _bits(p)] for p in pieces if p.bit_count() == top]
    if top == 0:
        # Restriction to loops has rank 0, which Matroid rejects; callers handle it.
        raise InputError("restriction has rank zero")
    return Matroid(len(labels), bases), labels


def connected_components(m: Matroid) -> list[frozenset[int]]:
    """Partition into connected components, ordered by smallest element.

    Two elements share a component iff they are linked through fundamental
    circuits of one fixed basis.
    """
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    b0 = m.bases[0]
    for e in _bits(m.ground & ~b0):
        for f in _bits(b0):
            if (b0 & ~(1 << f)) | (1 << e) in m.basis_set:
                ra, rb = find(e), find(f)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    groups: dict[int, list[int]] = {}
    for e in range(m.n):
        groups.setdefault(find(e), []).append(e)
    return [frozenset(g) for _, g in sorted(groups.items())]


def is_connected(m: Matroid) -> bool:
    return len(connected_components(m)) == 1


def _is_split_connected(m: Matroid) -> SplitCheck:
    proper = _proper_cyclic_flats(m)
    for f, g in itertools.combinations(proper, 2):
        if (f.mask & g.mask).bit_count() + m.k > f.rank + g.rank:
            return SplitCheck(False, (f.elements, g.elements))
    return SplitCheck(True)


def split_violations(m: Matroid) -> list[tuple[frozenset, frozenset]]:
    """Every pair of proper cyclic flats breaking ``|F & G| + k <= rk F + rk G``."""
    proper = _proper_cyclic_flats(m)
    return [
        (f.elements, g.elements)
        for f, g in itertools.combinations(proper, 2)
        if (f.mask & g.mask).bit_count() + m.k > f.rank + g.rank
    ]


def is_split(m: Matroid) -> SplitCheck:
    """Pairwise cyclic-flat test for split matroids, applied per component.

    The certificate, when present, uses the original element labels.
    """
    comps = connected_components(m)
    if len(comps) == 1:
        return _is_split_connected(m)
    for comp in comps:
        if len(comp) == 1:
            continue
        sub, labels = restrict(m, to_mask(comp))
        check = _is_split_connected(sub)
        if not check:
            f, g = check.certificate
            return SplitCheck(False, (frozenset(labels[i] for i in f), frozenset(labels[i] for i in g)))
    return SplitCheck(True)


def lambda_mu_tables(m: Matroid) -> tuple[LambdaTable, MuTable]:
    """The cyclic-flat counts and modular-pair counts of a connected split matroid."""
    if not is_connected(m):
        raise InputError("lambda/mu tables are only defined for connected matroids")
    check = _is_split_connected(m)
    if not check:
        f, g = check.certificate
        raise NotSplitError(
            f"matroid is not split: cyclic flats {sorted(f)} and {sorted(g)} violate the split inequality",
            check.certificate,
        )
    proper = _proper_cyclic_flats(m)
    lam: dict[tuple[int, int], int] = {}
    for z in proper:
        lam[(z.rank, z.size)] = lam.get((z.rank, z.size), 0) + 1
    mu: dict[tuple[int, int, int, int], int] = {}
    for f, g in itertools.combinations(proper, 2):
        meet = f.mask & g.mask
        r_meet = m.rank(meet)
        if f.rank + g.rank != r_meet + m.rank(f.mask | g.mask):
            continue
        key = canonical_mu_key(
            f.rank - r_meet, g.rank - r_meet, (f.mask & ~g.mask).bit_count(), (g.mask & ~f.mask).bit_count()
        )
        mu[key] = mu.get(key, 0) + 1
    return LambdaTable(lam), MuTable(mu)


def dual(m: Matroid) -> Matroid:
    """Dual matroid; rank ``n - k``.  Raises for a matroid of full rank ``n``."""
    if m.k == m.n:
        raise InputError("the dual of a free matroid has rank zero")
    return Matroid(m.n, [m.ground & ~b for b in m.bases])


def direct_sum(*parts: Matroid) -> Matroid:
    """Direct sum; the elements of later summands are shifted past earlier ones."""
    if not parts:
        raise InputError("direct_sum needs at least one summand")
    bases = [0]
    offset = 0
    for p in parts:
        bases = [b | (pb << offset) for b in bases for pb in p.bases]
        offset += p.n
    return Matroid(offset, bases)
