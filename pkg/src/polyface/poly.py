"""Exact dense integer polynomials, Laurent polynomials, and binomial kernels.

Coefficients are plain Python ints, so nothing here ever overflows.  An
``FPolynomial`` stores ``coeffs[i]`` as the coefficient of ``t**i``; when it is
the f-polynomial of a polytope, ``coeffs[i]`` is the number of i-dimensional
faces (the empty face is not recorded, the polytope itself is).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FormulaError

__all__ = [
    "FPolynomial",
    "LaurentPolynomial",
    "binom",
    "multinom",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "laurent_normalize",
    "check_f_polynomial",
]


@lru_cache(maxsize=None)
def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside ``0 <= k <= n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinom(total: int, i: int, j: int) -> int:
    """``total! / (i! j! (total-i-j)!)``, zero when the parts do not fit."""
    if total < 0 or i < 0 or j < 0 or i + j > total:
        return 0
    return binom(total, i) * binom(total - i, j)


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    end = len(coeffs)
    while end > 0 and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class FPolynomial:
    """Dense polynomial with exact integer coefficients.

    The zero polynomial has ``coeffs == ()``.  ``degenerate`` marks the
    point polytope returned for ``k in (0, n)`` hypersimplex parameters; it
    does not take part in equality.
    """

    coeffs: tuple[int, ...] = ()
    degenerate: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(tuple(int(c) for c in self.coeffs)))

    @classmethod
    def constant(cls, c: int) -> "FPolynomial":
        return cls((c,))

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "FPolynomial":
        if exponent < 0:
            raise FormulaError(f"negative exponent {exponent} in FPolynomial")
        return cls((0,) * exponent + (c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = FPolynomial.constant(other)
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return FPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = FPolynomial.constant(other)
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        if not isinstance(other, FPolynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def shift(self, k: int) -> "FPolynomial":
        """Multiply by ``t**k`` (``k >= 0``)."""
        if k < 0:
            raise FormulaError("FPolynomial.shift needs k >= 0; use LaurentPolynomial")
        if not self.coeffs:
            return self
        return FPolynomial((0,) * k + self.coeffs)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def alternating_sum(self) -> int:
        return sum(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def to_laurent(self) -> "LaurentPolynomial":
        return LaurentPolynomial(0, self.coeffs)

    def __repr__(self) -> str:
        return f"FPolynomial({list(self.coeffs)})"


def poly_add(p: FPolynomial, q: FPolynomial) -> FPolynomial:
    if len(p.coeffs) < len(q.coeffs):
        p, q = q, p
    out = list(p.coeffs)
    for i, c in enumerate(q.coeffs):
        out[i] += c
    return FPolynomial(out)


def poly_scale(p: FPolynomial, c: int) -> FPolynomial:
    return FPolynomial(tuple(c * a for a in p.coeffs))


def poly_mul(p: FPolynomial, q: FPolynomial) -> FPolynomial:
    if not p.coeffs or not q.coeffs:
        return FPolynomial()
    out = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            out[i + j] += a * b
    return FPolynomial(out)


@dataclass(frozen=True)
class LaurentPolynomial:
    """Integer Laurent polynomial ``sum coeffs[i] * t**(min_exponent + i)``.

    Always stored normalized: no zero coefficient at either end; the zero
    polynomial is ``(0, ())``.
    """

    min_exponent: int = 0
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        e, cs = laurent_normalize(self.min_exponent, self.coeffs)
        object.__setattr__(self, "min_exponent", e)
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def monomial(cls, exponent: int, c: int = 1) -> "LaurentPolynomial":
        return cls(exponent, (c,))

    @property
    def max_exponent(self) -> int:
        return self.min_exponent + len(self.coeffs) - 1

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial(0, (other,))
        elif isinstance(other, FPolynomial):
            other = other.to_laurent()
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.min_exponent, other.min_exponent)
        hi = max(self.max_exponent, other.max_exponent)
        out = [0] * (hi - lo + 1)
        for src in (self, other):
            off = src.min_exponent - lo
            for i, c in enumerate(src.coeffs):
                out[off + i] += c
        return LaurentPolynomial(lo, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.min_exponent, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, (int, FPolynomial, LaurentPolynomial)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(self.min_exponent, tuple(other * c for c in self.coeffs))
        if isinstance(other, FPolynomial):
            other = other.to_laurent()
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        prod = poly_mul(FPolynomial(self.coeffs), FPolynomial(other.coeffs))
        return LaurentPolynomial(self.min_exponent + other.min_exponent, prod.coeffs)

    __rmul__ = __mul__

    def shift(self, k: int) -> "LaurentPolynomial":
        """Multiply by ``t**k`` for any integer ``k``."""
        return LaurentPolynomial(self.min_exponent + k, self.coeffs)

    def to_fpolynomial(self) -> FPolynomial:
        """Convert; a surviving negative exponent means a formula bug."""
        if self.coeffs and self.min_exponent < 0:
            raise FormulaError(
                f"Laurent polynomial still has t^{self.min_exponent} after normalization"
            )
        if not self.coeffs:
            return FPolynomial()
        return FPolynomial((0,) * self.min_exponent + self.coeffs)


def laurent_normalize(min_exponent: int, coeffs: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Strip zeros at both ends; return the new ``(min_exponent, coeffs)``."""
    cs = [int(c) for c in coeffs]
    lo = 0
    while lo < len(cs) and cs[lo] == 0:
        lo += 1
    if lo == len(cs):
        return 0, ()
    hi = len(cs)
    while cs[hi - 1] == 0:
        hi -= 1
    return min_exponent + lo, tuple(cs[lo:hi])


def check_f_polynomial(p: FPolynomial, dim: int | None = None) -> FPolynomial:
    """Assert the structural facts every polytope f-polynomial obeys.

    Positive coefficients, leading coefficient 1, and the Euler relation
    ``sum (-1)^i f_i == 1``.  Returns ``p`` so it can wrap an expression.
    """
    if not p.coeffs:
        raise FormulaError("f-polynomial is zero")
    if dim is not None and p.degree != dim:
        raise FormulaError(f"f-polynomial has degree {p.degree}, expected {dim}")
    if p.coeffs[-1] != 1:
        raise FormulaError(f"leading coefficient is {p.coeffs[-1]}, not 1")
    if any(c <= 0 for c in p.coeffs):
        raise FormulaError(f"non-positive face count in {list(p.coeffs)}")
    if p.alternating_sum() != 1:
        raise FormulaError(f"Euler relation fails for {list(p.coeffs)}")
    return p
