"""The MEX algorithm, the ``mex_k`` selector and the MES (minimum excluded
with skipping) algorithm.

Both algorithms grow two disjoint sequences A and B.  At step ``n``

* MEX:  ``a_n = mex(A_{n-1} | B_{n-1})`` and ``b_n = a_n + h_n``;
* MES:  ``a_n = mex(A_{n-1} | B_{n-1})`` and ``b_n = mex_{c_n}(A_n | B_{n-1})``.

Every run also records ``c_n`` (free integers skipped between ``a_n`` and
``b_n``) and ``r_n`` (occupied integers between them), so that
``b_n - a_n == c_n + r_n + 1`` holds row by row.
"""

from __future__ import annotations

import bisect
import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, Union

from .errors import Collision, GapTooSmall, InvariantViolation, NegativeSkip, NonPositiveN, SlopeOutOfRange
from .sequences import BeattySeq, ComplementaryPair, nonneg_power, sortjoin

__all__ = [
    "ExclusionState",
    "GapSequence",
    "MESRun",
    "mex",
    "mex_k",
    "run_mex",
    "run_mes",
    "self_defining_rule",
    "golden_c_rule",
    "between_counts",
    "derive_skipping",
    "mes_from_defining",
]

FREE, IN_A, IN_B = 0, 1, 2


def mex(S: Iterable[int]) -> int:
    """Least positive integer not in ``S``."""
    return mex_k(S, 0)


def mex_k(S: Iterable[int], k: int) -> int:
    """The ``(k+1)``-st least positive integer not in ``S``."""
    if k < 0:
        raise NegativeSkip(f"cannot skip {k} integers")
    taken = set(S)
    x = 0
    skipped = -1
    while skipped < k:
        x += 1
        if x not in taken:
            skipped += 1
    return x


class ExclusionState:
    """Occupancy of the positive integers during a MEX/MES run.

    Backed by a growable byte vector tagging each integer FREE, IN_A or
    IN_B.  ``frontier`` is the least free integer.  ``mex_k`` keeps a cursor
    with the number of free integers between the frontier and the cursor,
    so runs whose ``b_n`` increase scan every integer O(1) times.
    ``touches`` counts cell visits.
    """

    def __init__(self, capacity: int = 1024):
        self._owner = bytearray(max(capacity, 2))
        self.frontier = 1
        self._cursor = 1
        self._free_below = 0  # free integers in [frontier, cursor)
        self.touches = 0

    def _grow(self, x: int) -> None:
        size = len(self._owner)
        while size <= x:
            size *= 2
        self._owner.extend(bytes(size - len(self._owner)))

    def owner(self, x: int) -> int:
        return self._owner[x] if x < len(self._owner) else FREE

    def is_occupied(self, x: int) -> bool:
        return self.owner(x) != FREE

    def mark(self, x: int, tag: int) -> None:
        if x < 1:
            raise ValueError(f"cannot mark {x}")
        if x >= len(self._owner):
            self._grow(x)
        if self._owner[x]:
            raise Collision(f"{x} is already assigned")
        self._owner[x] = tag
        if self.frontier <= x < self._cursor:
            self._free_below -= 1
        if x == self.frontier:
            own = self._owner
            f = x + 1
            while f < len(own) and own[f]:
                f += 1
                self.touches += 1
            self.frontier = f
            if self._cursor <= f:
                self._cursor, self._free_below = f, 0

    def mex(self) -> int:
        return self.frontier

    def mex_k(self, k: int) -> int:
        if k < 0:
            raise NegativeSkip(f"cannot skip {k} integers")
        own = self._owner
        p, fb = self._cursor, self._free_below
        while fb > k:
            p -= 1
            self.touches += 1
            if not own[p]:
                fb -= 1
        while True:
            if p >= len(own):
                self._grow(p)
                own = self._owner
            self.touches += 1
            if not own[p]:
                if fb == k:
                    break
                fb += 1
            p += 1
        self._cursor, self._free_below = p, fb
        return p


class GapSequence:
    """The gaps ``h_n`` fed to the MEX algorithm.

    Build one with :meth:`linear`, :meth:`explicit` or :meth:`from_callable`.
    Values are not validated up front; ``run_mex`` rejects ``h_n < 1`` when
    it reaches that step.
    """

    def __init__(self, rule: Callable[[int], int], description: str):
        self._rule = rule
        self.description = description

    @classmethod
    def linear(cls, t: int = 1) -> GapSequence:
        return cls(lambda n: t * n, f"h_n = {t}n")

    @classmethod
    def explicit(cls, values: Sequence[int]) -> GapSequence:
        values = list(values)
        return cls(lambda n: values[n - 1], f"explicit list of {len(values)}")

    @classmethod
    def from_callable(cls, fn: Callable[[int], int], description: str = "callback") -> GapSequence:
        return cls(fn, description)

    def __call__(self, n: int) -> int:
        return self._rule(n)

    def __repr__(self) -> str:
        return f"GapSequence({self.description})"


@dataclass(frozen=True)
class MESRun:
    """Aligned columns of a MEX or MES run (index ``i`` holds step ``i+1``)."""

    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    R: tuple[int, ...]
    touches: int = 0

    @property
    def n(self) -> int:
        return len(self.A)

    def rows(self) -> Iterator[tuple[int, int, int, int, int]]:
        return zip(itertools.count(1), self.A, self.B, self.C, self.R)

    def check(self) -> None:
        """Raise if ``b - a == c + r + 1`` fails on some row or A and B meet."""
        for n, a, b, c, r in self.rows():
            if b - a != c + r + 1:
                raise InvariantViolation(f"row {n}: {b} - {a} != {c} + {r} + 1")
        if any(x >= y for x, y in zip(self.A, self.A[1:])):
            raise InvariantViolation("A is not strictly increasing")
        if set(self.A) & set(self.B):
            raise InvariantViolation("A and B overlap")

    def columns(self) -> dict[str, list[int]]:
        return {"a": list(self.A), "b": list(self.B), "c": list(self.C), "r": list(self.R)}


def _require_n(N: int) -> None:
    if N < 1:
        raise NonPositiveN(f"N must be >= 1, got {N}")


def run_mex(H: GapSequence | Callable[[int], int], N: int) -> MESRun:
    _require_n(N)
    state = ExclusionState()
    A, B, C, R = [], [], [], []
    b_sorted: list[int] = []
    for n in range(1, N + 1):
        a = state.mex()
        state.mark(a, IN_A)
        h = H(n)
        if h < 1:
            raise GapTooSmall(f"h_{n} = {h}; gaps must be at least 1")
        b = a + h
        if state.is_occupied(b):
            raise Collision(f"b_{n} = {b} is already assigned")
        # everything occupied in (a, b) is an earlier b
        r = bisect.bisect_left(b_sorted, b) - bisect.bisect_right(b_sorted, a)
        state.mark(b, IN_B)
        bisect.insort(b_sorted, b)
        A.append(a)
        B.append(b)
        C.append(b - a - 1 - r)
        R.append(r)
    return MESRun(tuple(A), tuple(B), tuple(C), tuple(R), state.touches)


SkipSource = Union[Iterable[int], Callable[[ExclusionState], Iterator[int]]]


def run_mes(C: SkipSource, N: int) -> MESRun:
    """Run MES for ``N`` steps.

    ``C`` is either an iterable of skip counts or a rule: a callable that
    receives the live :class:`ExclusionState` and returns an iterator of
    skip counts (used for self-referential skipping sequences).
    """
    _require_n(N)
    state = ExclusionState()
    skips = C(state) if callable(C) else iter(C)
    A, B, Cs, R = [], [], [], []
    for n in range(1, N + 1):
        a = state.mex()
        state.mark(a, IN_A)
        try:
            c = next(skips)
        except StopIteration:
            raise ValueError(f"skipping sequence ended before step {n}") from None
        if c < 0:
            raise NegativeSkip(f"c_{n} = {c}; skips must be nonnegative")
        b = state.mex_k(c)
        state.mark(b, IN_B)
        A.append(a)
        B.append(b)
        Cs.append(c)
        R.append(b - a - 1 - c)
    return MESRun(tuple(A), tuple(B), tuple(Cs), tuple(R), state.touches)


def self_defining_rule(k: int) -> Callable[[ExclusionState], Iterator[int]]:
    """Skip rule where 0 appears ``k-1`` times and each ``m >= 1`` appears
    ``k`` times if the run has put ``m`` in A, ``k-1`` times otherwise.

    With ``k = 2`` this is the golden-ratio rule.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")

    def rule(state: ExclusionState) -> Iterator[int]:
        for _ in range(k - 1):
            yield 0
        for m in itertools.count(1):
            if m >= state.frontier:
                raise InvariantViolation(f"membership of {m} is not decided yet")
            reps = k if state.owner(m) == IN_A else k - 1
            for _ in range(reps):
                yield m

    return rule


def golden_c_rule(N: int) -> list[int]:
    """First ``N`` skip counts of the self-generated golden skipping sequence."""
    return list(run_mes(self_defining_rule(2), N).C)


def between_counts(A: BeattySeq, B: BeattySeq, N: int) -> tuple[list[int], list[int]]:
    """Brute-force ``c_n`` and ``r_n`` for ``n <= N``: members of A, resp. B,
    strictly between ``a_n`` and ``b_n``, counted on explicit membership
    tables (no slope formulas)."""
    _require_n(N)
    a = A.prefix(N)
    b = B.prefix(N)
    top = max(a[-1], b[-1])
    in_a = bytearray(top + 1)
    in_b = bytearray(top + 1)
    for t in A.upto(top):
        in_a[t] = 1
    for t in B.upto(top):
        in_b[t] = 1
    cum_a = list(itertools.accumulate(in_a))
    cum_b = list(itertools.accumulate(in_b))
    C, R = [], []
    for an, bn in zip(a, b):
        hi = max(bn - 1, an)
        C.append(cum_a[hi] - cum_a[an])
        R.append(cum_b[hi] - cum_b[an])
    return C, R


def derive_skipping(pair: ComplementaryPair, N: int) -> tuple[list[int], list[int]]:
    """Skipping sequence ``C`` and auxiliary sequence ``R`` of a pair.

    ``r_n`` is computed twice, as B-members in ``(a_n, b_n)`` and as the
    size of ``(a_n, b_{n-1}] & B_{n-1}``; the two must agree.
    """
    C, R = between_counts(pair.A, pair.B, N)
    a = pair.A.prefix(N)
    b = pair.B.prefix(N)
    for n in range(1, N + 1):
        if n == 1:
            half_open = 0
        else:
            # b[0:n-1] is B_{n-1}, sorted
            hi = bisect.bisect_right(b, b[n - 2], 0, n - 1)
            lo = bisect.bisect_right(b, a[n - 1], 0, n - 1)
            half_open = max(hi - lo, 0)
        if half_open != R[n - 1]:
            raise InvariantViolation(f"r_{n}: open-interval count {R[n - 1]} != half-open count {half_open}")
    return C, R


def mes_from_defining(D: BeattySeq, k: int, N: int) -> MESRun:
    """MES driven by ``C = D * Z0^(k-1)`` (sortjoin with ``k-1`` copies of
    the nonnegative integers)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if not D.slope > 1:
        raise SlopeOutOfRange(f"defining slope {D.slope} must exceed 1")
    C = sortjoin(iter(D), nonneg_power(k - 1), N)
    if C and C[0] < 0:
        raise InvariantViolation("defining sequence produced a negative skip")
    return run_mes(C, N)
