"""Beatty and Sturmian sequences, complementary pairs, repetition profiles
and the sortjoin operator."""

from __future__ import annotations

import heapq
import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    InvariantViolation,
    NonPositiveN,
    NonPositiveSlope,
    NotComplementary,
    NotIrrational,
    SlopeOutOfRange,
)
from .exact import QuadExpr, floor_mul, rational

__all__ = [
    "BeattySeq",
    "ComplementaryPair",
    "RepetitionProfile",
    "beatty_term",
    "beatty_prefix",
    "beatty_upto",
    "complement_slope",
    "orient_pair",
    "pair_from_slope",
    "is_complementary_prefix",
    "sturmian_char",
    "indicator",
    "char_prefix_sum",
    "band_k",
    "repetition_profile",
    "peel",
    "sortjoin",
    "power",
    "nonneg_power",
    "heavy_light_slopes",
]


def beatty_prefix(slope: QuadExpr, N: int) -> list[int]:
    """``[floor(n * slope) for n in 1..N]`` computed in one tight loop."""
    p, q, d, r = slope.p, slope.q, slope.d, slope.r
    isqrt = math.isqrt
    if q == 0:
        return [n * p // r for n in range(1, N + 1)]
    qqd = q * q * d
    if q > 0:
        return [(n * p + isqrt(n * n * qqd)) // r for n in range(1, N + 1)]
    return [(n * p - isqrt(n * n * qqd) - 1) // r for n in range(1, N + 1)]


def beatty_upto(slope: QuadExpr, M: int) -> list[int]:
    """All terms ``floor(n * slope) <= M`` (slope > 0)."""
    if M < 1:
        return []
    count = floor_mul(slope.inverse(), M + 1)
    while count > 0 and floor_mul(slope, count) > M:
        count -= 1  # only reachable for rational slopes
    return beatty_prefix(slope, count)


def beatty_term(slope: QuadExpr, n: int) -> int:
    if slope.sign() <= 0:
        raise NonPositiveSlope(f"slope {slope} must be positive")
    return floor_mul(slope, n)


@dataclass(frozen=True)
class BeattySeq:
    """The sequence ``b_n = floor(n * slope)``, ``n >= 1``.

    Rational slopes are refused unless ``allow_rational`` is set; those are
    for oracles and degenerate tests only.  ``cache_size`` bounds the number
    of memoized terms (0 disables caching).
    """

    slope: QuadExpr
    allow_rational: bool = False
    cache_size: int = 0
    _cache: list = field(default_factory=list, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.slope.sign() <= 0:
            raise NonPositiveSlope(f"slope {self.slope} must be positive")
        if self.slope.is_rational and not self.allow_rational:
            raise NotIrrational(f"slope {self.slope} is rational")

    def term(self, n: int) -> int:
        if n < 1:
            raise NonPositiveN(f"n must be >= 1, got {n}")
        if n <= len(self._cache):
            return self._cache[n - 1]
        if n <= self.cache_size:
            self._cache.extend(beatty_prefix(self.slope, n)[len(self._cache):])
            return self._cache[n - 1]
        return floor_mul(self.slope, n)

    __getitem__ = term

    def prefix(self, N: int) -> list[int]:
        """A fresh list with the first ``N`` terms."""
        if N <= len(self._cache):
            return self._cache[:N]
        return beatty_prefix(self.slope, N)

    def upto(self, M: int) -> list[int]:
        return beatty_upto(self.slope, M)

    def __iter__(self) -> Iterator[int]:
        for n in itertools.count(1):
            yield floor_mul(self.slope, n)


@dataclass(frozen=True)
class ComplementaryPair:
    """Slopes ``1 < alpha < 2 < beta`` with ``1/alpha + 1/beta == 1``.

    ``strict=False`` skips validation; it exists so negative controls can
    feed deliberately broken pairs through the verification code.
    """

    alpha: QuadExpr
    beta: QuadExpr
    strict: bool = field(default=True, compare=False)

    def __post_init__(self):
        if not self.strict:
            return
        self.alpha.require_irrational("alpha")
        self.beta.require_irrational("beta")
        if self.alpha.inverse() + self.beta.inverse() != 1:
            raise NotComplementary(f"1/{self.alpha} + 1/{self.beta} != 1")
        if not (1 < self.alpha < 2 < self.beta):
            raise SlopeOutOfRange(f"need 1 < alpha < 2 < beta, got {self.alpha}, {self.beta}")

    @property
    def A(self) -> BeattySeq:
        return BeattySeq(self.alpha, allow_rational=not self.strict)

    @property
    def B(self) -> BeattySeq:
        return BeattySeq(self.beta, allow_rational=not self.strict)


def complement_slope(alpha: QuadExpr) -> QuadExpr:
    """``beta = alpha / (alpha - 1)``, so that ``1/alpha + 1/beta = 1``."""
    alpha.require_irrational("alpha")
    if alpha <= 1:
        raise SlopeOutOfRange(f"alpha = {alpha} must exceed 1")
    return alpha / (alpha - 1)


def orient_pair(x: QuadExpr, y: QuadExpr) -> ComplementaryPair:
    x.require_irrational()
    y.require_irrational()
    if x.d != y.d or x.inverse() + y.inverse() != 1:
        raise NotComplementary(f"{x} and {y} are not complementary slopes")
    alpha, beta = (x, y) if x < y else (y, x)
    if not alpha < 2:
        raise InvariantViolation(f"smaller complementary slope {alpha} is not below 2")
    return ComplementaryPair(alpha, beta)


def pair_from_slope(x: QuadExpr) -> ComplementaryPair:
    """The complementary pair containing ``x`` (either orientation)."""
    return orient_pair(x, complement_slope(x))


def is_complementary_prefix(A: BeattySeq, B: BeattySeq, M: int) -> bool:
    """True iff the terms ``<= M`` of A and B partition ``{1, ..., M}``."""
    if M < 1:
        raise NonPositiveN(f"M must be >= 1, got {M}")
    seen = bytearray(M + 1)
    for seq in (A, B):
        for t in seq.upto(M):
            if t < 1 or seen[t]:
                return False
            seen[t] = 1
    return seen.count(1) == M


def _require_unit_interval(alpha: QuadExpr) -> None:
    if not (0 < alpha < 1):
        raise SlopeOutOfRange(f"need 0 < alpha < 1, got {alpha}")


def sturmian_char(alpha: QuadExpr, n: int) -> int:
    """``f(n) = floor(alpha (n+1)) - floor(alpha n)``, which is 0 or 1."""
    _require_unit_interval(alpha)
    return floor_mul(alpha, n + 1) - floor_mul(alpha, n)


def indicator(beta: QuadExpr, n: int) -> int:
    """1 iff ``n`` is a term of the Beatty sequence of ``beta > 1``,
    read off the Sturmian word of slope ``1/beta``."""
    beta.require_irrational("beta")
    if not beta > 1:
        raise SlopeOutOfRange(f"need beta > 1, got {beta}")
    return sturmian_char(beta.inverse(), n)


def char_prefix_sum(alpha: QuadExpr, m: int) -> int:
    _require_unit_interval(alpha)
    total = sum(sturmian_char(alpha, n) for n in range(1, m + 1))
    closed = floor_mul(alpha, m + 1)
    if total != closed:
        raise InvariantViolation(f"prefix sum {total} != floor({alpha}*{m + 1}) = {closed}")
    return total


def band_k(alpha: QuadExpr) -> int:
    """The ``k`` with ``1/(k+1) < alpha < 1/k`` for irrational ``0 < alpha < 1``."""
    alpha.require_irrational("alpha")
    _require_unit_interval(alpha)
    k = floor_mul(alpha.inverse(), 1)
    if not (rational(1, k + 1) < alpha < rational(1, k)):
        raise InvariantViolation(f"band check failed for {alpha}, k = {k}")
    return k


@dataclass
class RepetitionProfile:
    k: int
    heavy: list[int]
    light: list[int]
    counts: dict[int, int]
    N: int


def repetition_profile(alpha: QuadExpr, N: int) -> RepetitionProfile:
    """Multiplicities of the values of ``floor(alpha n)``, ``n <= N``.

    The largest observed value may be cut off mid-run, so it is left out of
    the heavy/light split.
    """
    k = band_k(alpha)
    counts = dict(Counter(beatty_prefix(alpha, N)))
    top = max(counts)
    heavy, light = [], []
    for value in sorted(counts):
        if value == top:
            continue
        mult = counts[value]
        if mult == k + 1:
            heavy.append(value)
        elif mult == k:
            light.append(value)
        else:
            raise InvariantViolation(f"value {value} repeats {mult} times, band k = {k}")
    return RepetitionProfile(k=k, heavy=heavy, light=light, counts=counts, N=N)


def peel(alpha: QuadExpr) -> QuadExpr:
    """``-1 + 1/(1 - alpha)``: drops the repetition band of ``alpha`` by one."""
    alpha.require_irrational("alpha")
    _require_unit_interval(alpha)
    return -1 + (1 - alpha).inverse()


def nonneg_power(k: int) -> Iterator[int]:
    """The sortjoin of ``k`` copies of the nonnegative integers."""
    if k <= 0:
        return iter(())
    return (v for v in itertools.count() for _ in range(k))


def power(X: Iterable[int], k: int) -> Iterator[int]:
    """The ``k``-fold sortjoin of ``X`` with itself."""
    if k <= 0:
        return iter(())
    return heapq.merge(*itertools.tee(X, k))


def sortjoin(X: Iterable[int], Y: Iterable[int], N: int | None = None) -> list[int]:
    """Merge two nondecreasing sequences keeping repetitions; first ``N``
    terms (all of them when ``N`` is None and both inputs are finite)."""
    merged = heapq.merge(X, Y)
    if N is None:
        return list(merged)
    return list(itertools.islice(merged, N))


def heavy_light_slopes(alpha: QuadExpr, check: int = 200) -> tuple[QuadExpr, QuadExpr]:
    """Slopes of the values repeated ``k+1`` times (heavy) and ``k`` times
    (light) in ``floor(alpha n)``.

    The heavy slope is ``alpha`` peeled ``k`` times; the result is checked
    against the closed form ``alpha / (1 - k alpha)`` and, over the first
    ``check`` indices, against an explicit repetition profile.
    """
    k = band_k(alpha)
    heavy = alpha
    for _ in range(k):
        heavy = peel(heavy)
    if heavy != alpha / (1 - k * alpha) or not heavy > 1:
        raise InvariantViolation(f"peeling {alpha} {k} times gave {heavy}")
    light = heavy / (heavy - 1)
    if check:
        profile = repetition_profile(alpha, check)
        top = max(profile.counts)
        if profile.heavy != beatty_upto(heavy, top - 1):
            raise InvariantViolation(f"heavy values of {alpha} are not Beatty({heavy})")
        raw = beatty_prefix(alpha, check)
        joined = sortjoin(beatty_upto(heavy, raw[-1] + 1), nonneg_power(k), check)
        if joined != raw:
            raise InvariantViolation(f"sortjoin reconstruction failed for {alpha}")
    return heavy, light
