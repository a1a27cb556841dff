"""Exact arithmetic in a real quadratic field Q(sqrt(d)).

Every slope handled by the package is a :class:`QuadExpr`, the number
``(p + q*sqrt(d)) / r``.  Floors of integer multiples are computed with an
integer square root, so no floating point is involved anywhere.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    DivisionByZero,
    NegativeRadicand,
    NonPositiveN,
    NotIrrational,
    RadicandMismatch,
    SlopeParse,
    ZeroDenominator,
)

__all__ = [
    "Ordering",
    "QuadExpr",
    "make",
    "rational",
    "add",
    "sub",
    "mul",
    "div",
    "compare",
    "floor_mul",
    "isqrt",
    "parse_slope",
    "PHI",
]

# Trial division bound for square-factor extraction of the radicand.
_SQUARE_FREE_LIMIT = 10**6


def isqrt(n: int) -> int:
    """Largest ``s`` with ``s*s <= n`` for arbitrary-precision ``n >= 0``."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def _split_square(d: int) -> tuple[int, int]:
    """Return ``(s, core)`` with ``d == s*s*core`` and ``core`` square-free
    (up to the trial-division bound)."""
    s, core = 1, d
    f = 2
    while f * f <= core and f <= _SQUARE_FREE_LIMIT:
        ff = f * f
        while core % ff == 0:
            core //= ff
            s *= f
        f += 1 if f == 2 else 2
    root = math.isqrt(core)
    if root * root == core:
        s, core = s * root, 1
    return s, core


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


Operand = Union["QuadExpr", int, Fraction]


@dataclass(frozen=True, eq=False)
class QuadExpr:
    """The real number ``(p + q*sqrt(d)) / r`` in canonical form.

    Build instances with :func:`make`; the constructor does not normalize.
    A value is irrational exactly when ``q != 0``.
    """

    p: int
    q: int
    d: int
    r: int

    # -- predicates -----------------------------------------------------
    @property
    def is_irrational(self) -> bool:
        return self.q != 0

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def require_irrational(self, what: str = "slope") -> QuadExpr:
        if self.q == 0:
            raise NotIrrational(f"{what} {self} is rational")
        return self

    def sign(self) -> int:
        p, q, d = self.p, self.q, self.d
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0 or (p > 0) == (q > 0):
            return 1 if q > 0 else -1
        lhs, rhs = p * p, q * q * d
        if p > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    # -- conversions ----------------------------------------------------
    def conjugate(self) -> QuadExpr:
        return make(self.p, -self.q, self.d, self.r)

    def to_fraction(self) -> Fraction:
        if self.q:
            raise NotIrrational(f"{self} is irrational")
        return Fraction(self.p, self.r)

    def __float__(self) -> float:
        # display only; never used for decisions
        return (self.p + self.q * math.sqrt(self.d)) / self.r

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "d": self.d, "r": self.r}

    @classmethod
    def from_dict(cls, data: dict) -> QuadExpr:
        return make(int(data["p"]), int(data["q"]), int(data["d"]), int(data["r"]))

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p) if self.r == 1 else f"{self.p}/{self.r}"
        op = "+" if self.q > 0 else "-"
        return f"({self.p}{op}{abs(self.q)}*sqrt({self.d}))/{self.r}"

    def __repr__(self) -> str:
        return f"QuadExpr({self.p}, {self.q}, {self.d}, {self.r})"

    # -- arithmetic -----------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = _coerce(other)
        if not isinstance(other, QuadExpr):
            return NotImplemented
        return (self.p, self.q, self.d, self.r) == (other.p, other.q, other.d, other.r)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.d, self.r))

    def __add__(self, other: Operand) -> QuadExpr:
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other: Operand) -> QuadExpr:
        return sub(self, other)

    def __rsub__(self, other: Operand) -> QuadExpr:
        return sub(other, self)

    def __mul__(self, other: Operand) -> QuadExpr:
        return mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other: Operand) -> QuadExpr:
        return div(self, other)

    def __rtruediv__(self, other: Operand) -> QuadExpr:
        return div(other, self)

    def __neg__(self) -> QuadExpr:
        return make(-self.p, -self.q, self.d, self.r)

    def inverse(self) -> QuadExpr:
        return div(1, self)

    def __lt__(self, other: Operand) -> bool:
        return compare(self, other) is Ordering.LESS

    def __le__(self, other: Operand) -> bool:
        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other: Operand) -> bool:
        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other: Operand) -> bool:
        return compare(self, other) is not Ordering.LESS

    def floor_mul(self, n: int) -> int:
        return floor_mul(self, n)


def make(p: int, q: int, d: int, r: int) -> QuadExpr:
    """Canonical :class:`QuadExpr` equal to ``(p + q*sqrt(d)) / r``.

    Square factors are pulled out of ``d``; a perfect-square radicand folds
    into the rational part.  ``gcd(p, q, r) == 1`` and ``r > 0`` afterwards.
    """
    p, q, d, r = int(p), int(q), int(d), int(r)
    if r == 0:
        raise ZeroDenominator("denominator must be nonzero")
    if d < 0:
        raise NegativeRadicand(f"radicand {d} is negative")
    if q == 0 or d == 0:
        q, d = 0, 0
    else:
        s, d = _split_square(d)
        q *= s
        if d == 1:
            p, q, d = p + q, 0, 0
    if r < 0:
        p, q, r = -p, -q, -r
    g = math.gcd(math.gcd(p, q), r)
    if g > 1:
        p, q, r = p // g, q // g, r // g
    return QuadExpr(p, q, d, r)


def rational(num: int, den: int = 1) -> QuadExpr:
    return make(num, 0, 0, den)


def _coerce(x: Operand) -> QuadExpr:
    if isinstance(x, QuadExpr):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a field element")
    if isinstance(x, int):
        return QuadExpr(x, 0, 0, 1)
    if isinstance(x, Fraction):
        return QuadExpr(x.numerator, 0, 0, x.denominator)
    raise TypeError(f"cannot use {type(x).__name__} as a field element")


def _common_radicand(x: QuadExpr, y: QuadExpr) -> int:
    if x.d == y.d or y.d == 0:
        return x.d
    if x.d == 0:
        return y.d
    raise RadicandMismatch(f"sqrt({x.d}) and sqrt({y.d}) live in different fields")


def add(x: Operand, y: Operand) -> QuadExpr:
    x, y = _coerce(x), _coerce(y)
    d = _common_radicand(x, y)
    return make(x.p * y.r + y.p * x.r, x.q * y.r + y.q * x.r, d, x.r * y.r)


def sub(x: Operand, y: Operand) -> QuadExpr:
    y = _coerce(y)
    return add(x, QuadExpr(-y.p, -y.q, y.d, y.r))


def mul(x: Operand, y: Operand) -> QuadExpr:
    x, y = _coerce(x), _coerce(y)
    d = _common_radicand(x, y)
    return make(x.p * y.p + x.q * y.q * d, x.p * y.q + x.q * y.p, d, x.r * y.r)


def div(x: Operand, y: Operand) -> QuadExpr:
    x, y = _coerce(x), _coerce(y)
    d = _common_radicand(x, y)
    if y.p == 0 and y.q == 0:
        raise DivisionByZero(f"division of {x} by zero")
    # r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
    norm = y.p * y.p - y.q * y.q * d
    inv = make(y.r * y.p, -y.r * y.q, d, norm)
    return mul(x, inv)


def compare(x: Operand, y: Operand) -> Ordering:
    """Exact ordering of two field elements (sign analysis plus squaring)."""
    return Ordering(sub(x, y).sign())


def floor_mul(x: QuadExpr, n: int) -> int:
    """Exact ``floor(n * x)`` for a positive integer ``n``."""
    if n < 1:
        raise NonPositiveN(f"n must be >= 1, got {n}")
    X = n * x.p
    if x.q == 0:
        return X // x.r
    nq = n * x.q
    # n^2 q^2 d is never a perfect square, so frac(|nq| sqrt d) is in (0, 1)
    s = math.isqrt(nq * nq * x.d)
    if nq > 0:
        return (X + s) // x.r
    return (X - s - 1) // x.r


PHI = make(1, 1, 5, 2)

_INT = r"(-?\d+)"
_PATTERNS = [
    (re.compile(rf"\(\s*{_INT}\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*{_INT}"), "full"),
    (re.compile(rf"\(\s*{_INT}\s*\)\s*/\s*{_INT}"), "paren_ratio"),
    (re.compile(r"sqrt\(\s*(\d+)\s*\)"), "sqrt"),
    (re.compile(r"phi"), "phi"),
    (re.compile(rf"{_INT}\s*/\s*{_INT}"), "ratio"),
    (re.compile(_INT), "int"),
]


def parse_slope(text: str, *, require_irrational: bool = False) -> QuadExpr:
    """Parse a slope expression such as ``"(187+2*sqrt(13))/113"``,
    ``"sqrt(3)"``, ``"phi"``, ``"3/2"`` or ``"7"``."""
    s = text.strip()
    for pattern, kind in _PATTERNS:
        m = pattern.fullmatch(s)
        if m is None:
            continue
        try:
            if kind == "full":
                p, op, q, d, r = m.groups()
                value = make(int(p), int(q) if op == "+" else -int(q), int(d), int(r))
            elif kind == "paren_ratio":
                value = make(int(m.group(1)), 0, 0, int(m.group(2)))
            elif kind == "sqrt":
                value = make(0, 1, int(m.group(1)), 1)
            elif kind == "phi":
                value = PHI
            elif kind == "ratio":
                value = make(int(m.group(1)), 0, 0, int(m.group(2)))
            else:
                value = make(int(m.group(1)), 0, 0, 1)
        except ZeroDenominator as exc:
            raise SlopeParse(f"bad slope {text!r}: {exc}") from None
        if require_irrational and value.is_rational:
            raise SlopeParse(f"slope {text!r} is rational; an irrational slope is required")
        return value
    raise SlopeParse(f"cannot parse slope expression {text!r}")
