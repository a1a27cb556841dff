"""Derived slopes of a complementary pair and the identity checks built on
them.

For ``1 < alpha < 2`` with complement ``beta``::

    gamma = (2 - alpha)/(alpha - 1)      slope of C (A-members between a_n, b_n)
    rho   = 2 - alpha                    slope of R (B-members between a_n, b_n)
    k     : (2k-1)/k < alpha < (2k+1)/(k+1)
    delta = (2 - alpha)/(k alpha - 2k + 1)   slope of the defining sequence D

Each ``verify_*`` function walks ``n`` over a range and returns a
:class:`VerificationReport` listing mismatches (capped).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import InvariantViolation, SlopeOutOfRange
from .exact import PHI, QuadExpr, floor_mul, make, rational
from .mesalg import between_counts, mes_from_defining
from .sequences import BeattySeq, ComplementaryPair, beatty_prefix, complement_slope, pair_from_slope

__all__ = [
    "SlopeBundle",
    "VerificationReport",
    "DEFAULT_FAILURE_CAP",
    "derived_slopes",
    "frequency_k",
    "defining_slope",
    "slope_from_defining",
    "fixed_point_slope",
    "mex_family_slope",
    "as_pair",
    "verify_decomposition",
    "verify_slope_match",
    "verify_identity_12a",
    "verify_identity_12b",
    "verify_corollary1",
    "verify_wythoff",
    "verify_mex_family",
    "verify_floor_sum",
    "verify_r_differences",
    "verify_c_differences",
    "verify_mes_produces_beatty",
    "IDENTITIES",
]

DEFAULT_FAILURE_CAP = 32


@dataclass(frozen=True)
class SlopeBundle:
    alpha: QuadExpr
    beta: QuadExpr
    gamma: QuadExpr
    rho: QuadExpr
    k: int
    delta: QuadExpr

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_dict(),
            "beta": self.beta.to_dict(),
            "gamma": self.gamma.to_dict(),
            "rho": self.rho.to_dict(),
            "k": self.k,
            "delta": self.delta.to_dict(),
        }


@dataclass
class VerificationReport:
    identity: str
    alpha: QuadExpr | None
    N: int
    start: int = 1
    failures: list[tuple[int, int, int]] = field(default_factory=list)
    elapsed: float = 0.0
    warnings: list[str] = field(default_factory=list)
    aborted: bool = False
    entry: str | None = None

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def range(self) -> tuple[int, int]:
        return (self.start, self.N)

    def to_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "alpha": self.alpha.to_dict() if self.alpha is not None else None,
            "N": self.N,
            "failures": [{"n": n, "lhs": lhs, "rhs": rhs} for n, lhs, rhs in self.failures],
            "elapsed_ms": int(self.elapsed * 1000),
        }
        if self.entry is not None:
            out["entry"] = self.entry
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


def _check(
    identity: str,
    alpha: QuadExpr | None,
    start: int,
    N: int,
    lhs: Sequence[int],
    rhs: Sequence[int],
    t0: float,
    cap: int,
    warnings: list[str] | None = None,
) -> VerificationReport:
    """Compare ``lhs[i]`` with ``rhs[i]`` for ``n = start + i``."""
    report = VerificationReport(identity, alpha, N, start, warnings=list(warnings or []))
    for i, (x, y) in enumerate(zip(lhs, rhs)):
        if x != y:
            report.failures.append((start + i, x, y))
            if len(report.failures) >= cap:
                report.aborted = True
                break
    report.elapsed = time.perf_counter() - t0
    return report


def _floors(x: QuadExpr, ms: Sequence[int]) -> list[int]:
    """``floor(x * m)`` for each positive ``m``."""
    return [floor_mul(x, m) for m in ms]


def frequency_k(alpha: QuadExpr) -> int:
    """The unique ``k >= 1`` with ``(2k-1)/k < alpha < (2k+1)/(k+1)``."""
    alpha.require_irrational("alpha")
    if not (1 < alpha < 2):
        raise SlopeOutOfRange(f"need 1 < alpha < 2, got {alpha}")
    # the band is 1/(k+1) < 2 - alpha < 1/k
    k = floor_mul((2 - alpha).inverse(), 1)
    if not (rational(2 * k - 1, k) < alpha < rational(2 * k + 1, k + 1)):
        raise InvariantViolation(f"frequency band check failed for {alpha}, k = {k}")
    return k


def defining_slope(alpha: QuadExpr, k: int | None = None) -> QuadExpr:
    """``delta = (2 - alpha) / (k alpha - 2k + 1)``."""
    if k is None:
        k = frequency_k(alpha)
    return (2 - alpha) / (k * alpha - 2 * k + 1)


def slope_from_defining(delta: QuadExpr, k: int) -> QuadExpr:
    """``alpha = (2 - delta + 2k delta) / (1 + k delta)``, the slope MES
    produces from the defining slope ``delta`` at frequency ``k``."""
    delta.require_irrational("delta")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    alpha = (2 - delta + 2 * k * delta) / (1 + k * delta)
    if frequency_k(alpha) != k or defining_slope(alpha, k) != delta:
        raise InvariantViolation(f"defining-slope round trip failed for delta = {delta}, k = {k}")
    return alpha


def fixed_point_slope(k: int) -> QuadExpr:
    """``(k - 1 + sqrt(k^2 + 1)) / k``: the slope that defines itself at
    frequency ``k`` (the golden ratio for ``k = 2``)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    alpha = make(k - 1, 1, k * k + 1, k)
    if slope_from_defining(alpha, k) != alpha:
        raise InvariantViolation(f"{alpha} is not a fixed point at k = {k}")
    return alpha


def mex_family_slope(t: int) -> QuadExpr:
    """``(2 - t + sqrt(t^2 + 4)) / 2``: MEX with ``h_n = t n`` yields its
    Beatty sequence."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    return make(2 - t, 1, t * t + 4, 2)


def derived_slopes(alpha: QuadExpr) -> SlopeBundle:
    alpha.require_irrational("alpha")
    if not (1 < alpha < 2):
        raise SlopeOutOfRange(f"need 1 < alpha < 2, got {alpha}")
    beta = complement_slope(alpha)
    gamma = (2 - alpha) / (alpha - 1)
    rho = 2 - alpha
    k = frequency_k(alpha)
    delta = defining_slope(alpha, k)
    identities = {
        "gamma == beta/alpha - 1": gamma == beta / alpha - 1,
        "rho == 1 - alpha/beta": rho == 1 - alpha / beta,
        "gamma == beta - 2": gamma == beta - 2,
        "0 < rho < 1": 0 < rho < 1,
        "delta > 1": delta > 1,
        "alpha from (delta, k)": slope_from_defining(delta, k) == alpha,
    }
    broken = [name for name, holds in identities.items() if not holds]
    if broken:
        raise InvariantViolation(f"slope identities failed for {alpha}: {', '.join(broken)}")
    return SlopeBundle(alpha, beta, gamma, rho, k, delta)


def as_pair(slope: QuadExpr) -> tuple[ComplementaryPair, list[str]]:
    """Complementary pair for ``slope``; a slope above 2 is swapped for its
    complement and a warning is returned."""
    pair = pair_from_slope(slope)
    warnings = []
    if pair.alpha != slope:
        warnings.append(f"slope {slope} exceeds 2; using its complement {pair.alpha}")
    return pair, warnings


def _pair_arg(pair: ComplementaryPair | QuadExpr) -> tuple[ComplementaryPair, list[str]]:
    if isinstance(pair, QuadExpr):
        return as_pair(pair)
    return pair, []


def verify_decomposition(pair, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``b_n - a_n == c_n + r_n + 1`` with ``c_n, r_n`` from membership counts."""
    t0 = time.perf_counter()
    pair, warn = _pair_arg(pair)
    a, b = pair.A.prefix(N), pair.B.prefix(N)
    C, R = between_counts(pair.A, pair.B, N)
    lhs = [y - x for x, y in zip(a, b)]
    rhs = [c + r + 1 for c, r in zip(C, R)]
    return _check("decomposition", pair.alpha, 1, N, lhs, rhs, t0, cap, warn)


def verify_slope_match(pair, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``c_n == floor(n gamma)`` and ``r_n == floor(n rho)``.

    A failure row reports the pair ``(c_n, r_n)`` packed as lhs and the
    slope floors as rhs.
    """
    t0 = time.perf_counter()
    pair, warn = _pair_arg(pair)
    bundle = derived_slopes(pair.alpha)
    C, R = between_counts(pair.A, pair.B, N)
    lhs = list(zip(C, R))
    rhs = list(zip(beatty_prefix(bundle.gamma, N), beatty_prefix(bundle.rho, N)))
    return _check("slope-match", pair.alpha, 1, N, lhs, rhs, t0, cap, warn)


def verify_identity_12a(pair, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``floor((b_{n-1}+1)/beta) - floor(a_n/beta) == floor((2-alpha) n)``
    for ``2 <= n <= N``."""
    t0 = time.perf_counter()
    pair, warn = _pair_arg(pair)
    inv_beta = pair.beta.inverse()
    a, b = pair.A.prefix(N), pair.B.prefix(N)
    lhs = [x - y for x, y in zip(_floors(inv_beta, [v + 1 for v in b[:-1]]), _floors(inv_beta, a[1:]))]
    rhs = beatty_prefix(2 - pair.alpha, N)[1:]
    return _check("identity-12a", pair.alpha, 2, N, lhs, rhs, t0, cap, warn)


def verify_identity_12b(pair, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``floor(b_n/alpha) - floor((a_n+1)/alpha) == floor(n (2-alpha)/(alpha-1))``."""
    t0 = time.perf_counter()
    pair, warn = _pair_arg(pair)
    inv_alpha = pair.alpha.inverse()
    a, b = pair.A.prefix(N), pair.B.prefix(N)
    lhs = [x - y for x, y in zip(_floors(inv_alpha, b), _floors(inv_alpha, [v + 1 for v in a]))]
    rhs = beatty_prefix((2 - pair.alpha) / (pair.alpha - 1), N)
    return _check("identity-12b", pair.alpha, 1, N, lhs, rhs, t0, cap, warn)


def verify_corollary1(alpha: QuadExpr, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``floor(n beta) - floor(n alpha) == floor(n (beta/alpha - 1)) +
    floor(n (1 - alpha/beta)) + 1``.

    The two derived slopes are formed from ``alpha`` and ``beta`` directly,
    not taken from :func:`derived_slopes`.
    """
    t0 = time.perf_counter()
    pair, warn = as_pair(alpha)
    alpha, beta = pair.alpha, pair.beta
    lhs = [y - x for x, y in zip(beatty_prefix(alpha, N), beatty_prefix(beta, N))]
    g = beatty_prefix(beta / alpha - 1, N)
    h = beatty_prefix(1 - alpha / beta, N)
    rhs = [x + y + 1 for x, y in zip(g, h)]
    return _check("corollary1", alpha, 1, N, lhs, rhs, t0, cap, warn)


def verify_wythoff(N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``floor(n phi^2) - floor(n phi) == n``."""
    t0 = time.perf_counter()
    lhs = [y - x for x, y in zip(beatty_prefix(PHI, N), beatty_prefix(PHI * PHI, N))]
    return _check("wythoff", PHI, 1, N, lhs, range(1, N + 1), t0, cap)


def verify_mex_family(t: int, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``floor(n beta) - floor(n alpha) == t n`` for ``alpha = mex_family_slope(t)``."""
    t0 = time.perf_counter()
    alpha = mex_family_slope(t)
    beta = complement_slope(alpha)
    lhs = [y - x for x, y in zip(beatty_prefix(alpha, N), beatty_prefix(beta, N))]
    return _check(f"mex-family-t{t}", alpha, 1, N, lhs, range(t, t * N + 1, t), t0, cap)


def verify_floor_sum(alpha: QuadExpr, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``floor(alpha n) + floor((2 - alpha) n) == 2n - 1``."""
    t0 = time.perf_counter()
    pair, warn = as_pair(alpha)
    alpha = pair.alpha
    lhs = [x + y for x, y in zip(beatty_prefix(alpha, N), beatty_prefix(2 - alpha, N))]
    return _check("floor-sum", alpha, 1, N, lhs, range(1, 2 * N, 2), t0, cap, warn)


def verify_r_differences(pair, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """``r_{n+1} - r_n`` is 0 or 1, and 1 exactly when ``a_{n+1} - a_n == 1``.

    Checked as ``r_{n+1} - r_n == a_{n+1} - a_n - 1`` together with
    ``a_{n+1} - a_n`` in {1, 2}.  Row ``n`` runs over 1..N-1.
    """
    t0 = time.perf_counter()
    pair, warn = _pair_arg(pair)
    a = pair.A.prefix(N)
    _, R = between_counts(pair.A, pair.B, N)
    lhs, rhs = [], []
    for n in range(N - 1):
        dr, da = R[n + 1] - R[n], a[n + 1] - a[n]
        lhs.append(dr if dr in (0, 1) and da in (1, 2) else -1)
        rhs.append(1 if da == 1 else 0)
    return _check("r-differences", pair.alpha, 1, N - 1, lhs, rhs, t0, cap, warn)


def verify_c_differences(pair, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    """With ``q = floor(beta)``: ``c_{n+1} - c_n`` is ``q-2`` or ``q-1``, and
    ``q-2`` exactly when ``b_{n+1} - b_n == q``."""
    t0 = time.perf_counter()
    pair, warn = _pair_arg(pair)
    q = floor_mul(pair.beta, 1)
    b = pair.B.prefix(N)
    C, _ = between_counts(pair.A, pair.B, N)
    lhs, rhs = [], []
    for n in range(N - 1):
        dc, db = C[n + 1] - C[n], b[n + 1] - b[n]
        lhs.append(dc if dc in (q - 2, q - 1) else None)
        rhs.append(q - 2 if db == q else q - 1)
    return _check("c-differences", pair.alpha, 1, N - 1, lhs, rhs, t0, cap, warn)


def verify_mes_produces_beatty(
    delta: QuadExpr, k: int, N: int, cap: int = DEFAULT_FAILURE_CAP
) -> VerificationReport:
    """MES on ``C = Beatty(delta) * Z0^(k-1)`` yields ``Beatty(alpha)`` with
    ``alpha = slope_from_defining(delta, k)``; both A and B are compared."""
    t0 = time.perf_counter()
    alpha = slope_from_defining(delta, k)
    run = mes_from_defining(BeattySeq(delta), k, N)
    lhs = list(zip(run.A, run.B))
    rhs = list(zip(beatty_prefix(alpha, N), beatty_prefix(complement_slope(alpha), N)))
    return _check("mes-produces-beatty", alpha, 1, N, lhs, rhs, t0, cap)


def _mes_for_slope(alpha: QuadExpr, N: int, cap: int = DEFAULT_FAILURE_CAP) -> VerificationReport:
    pair, warn = as_pair(alpha)
    bundle = derived_slopes(pair.alpha)
    report = verify_mes_produces_beatty(bundle.delta, bundle.k, N, cap)
    report.warnings.extend(warn)
    return report


# identity name -> callable(slope, N) used by batteries
IDENTITIES: dict[str, Callable[[QuadExpr, int], VerificationReport]] = {
    "decomposition": verify_decomposition,
    "slope-match": verify_slope_match,
    "identity-12a": verify_identity_12a,
    "identity-12b": verify_identity_12b,
    "corollary1": verify_corollary1,
    "floor-sum": verify_floor_sum,
    "r-differences": verify_r_differences,
    "c-differences": verify_c_differences,
    "mes-produces-beatty": _mes_for_slope,
}
