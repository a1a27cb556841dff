import pytest
from hypothesis import given, settings, strategies as st

from beattymes.errors import Collision, GapTooSmall, NegativeSkip, SlopeOutOfRange
from beattymes.exact import PHI, make
from beattymes.mesalg import (
    IN_A,
    IN_B,
    ExclusionState,
    GapSequence,
    derive_skipping,
    golden_c_rule,
    mes_from_defining,
    mex,
    mex_k,
    run_mes,
    run_mex,
    self_defining_rule,
)
from beattymes.sequences import BeattySeq, beatty_prefix, complement_slope, pair_from_slope

from conftest import SQRT13_ALPHA, SQRT13_DELTA, random_alphas
from oracles import brute_between, naive_mes, naive_mex, naive_mex_k

GOLDEN_C = [0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10]


class TestMex:
    def test_examples(self):
        assert mex({1, 2}) == 3
        assert mex(set()) == 1
        assert mex({2, 5, 7}) == 1

    def test_mex_k_examples(self):
        evens = set(range(2, 200, 2))
        assert mex_k(evens, 3) == 7
        assert mex_k({1, 2, 3, 4, 5}, 1) == 7
        for S in ({1, 2}, {2, 5, 7}, set()):
            assert mex_k(S, 0) == mex(S)

    def test_negative_skip(self):
        with pytest.raises(NegativeSkip):
            mex_k({1}, -1)

    @given(st.sets(st.integers(1, 60)), st.integers(0, 30))
    def test_mex_k_counting(self, S, k):
        m = mex_k(S, k)
        assert m not in S
        assert sum(1 for x in range(1, m) if x not in S) == k


class TestExclusionState:
    def test_frontier_and_collision(self):
        st_ = ExclusionState(capacity=4)
        st_.mark(1, IN_A)
        st_.mark(2, IN_B)
        assert st_.mex() == 3
        st_.mark(10, IN_B)  # grows past capacity
        assert st_.is_occupied(10) and not st_.is_occupied(9)
        with pytest.raises(Collision):
            st_.mark(2, IN_A)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.tuples(st.integers(1, 80), st.integers(0, 12)), max_size=40))
    def test_mex_k_matches_naive(self, ops):
        state, used = ExclusionState(capacity=8), set()
        for x, k in ops:
            assert state.mex_k(k) == naive_mex_k(used, k)
            if x not in used:
                state.mark(x, IN_B)
                used.add(x)
            assert state.mex() == naive_mex_k(used, 0)


class TestRunMex:
    def test_table1(self):
        run = run_mex(GapSequence.linear(1), 5)
        assert run.A == (1, 3, 4, 6, 8)
        assert run.B == (2, 5, 7, 10, 13)
        run.check()

    def test_first_step(self):
        run = run_mex(GapSequence.linear(1), 1)
        assert (run.A, run.B) == ((1,), (2,))

    def test_t2_is_sqrt2_pair(self):
        run = run_mex(GapSequence.linear(2), 4)
        sqrt2 = make(0, 1, 2, 1)
        assert list(run.A) == beatty_prefix(sqrt2, 4) == [1, 2, 4, 5]
        assert list(run.B) == beatty_prefix(complement_slope(sqrt2), 4) == [3, 6, 10, 13]

    def test_matches_naive(self):
        for t in (1, 2, 3):
            run = run_mex(GapSequence.linear(t), 300)
            assert (list(run.A), list(run.B)) == naive_mex(lambda n: t * n, 300)
            run.check()

    def test_gap_too_small(self):
        with pytest.raises(GapTooSmall):
            run_mex(GapSequence.explicit([1, 0]), 2)

    def test_collision(self):
        with pytest.raises(Collision):
            run_mex(GapSequence.explicit([2, 1]), 2)

    def test_callable_gap(self):
        run = run_mex(GapSequence.from_callable(lambda n: n, "identity"), 5)
        assert run.B == (2, 5, 7, 10, 13)


class TestRunMes:
    def test_table2(self):
        run = run_mes([0, 1, 1, 2, 3, 3, 4, 4], 8)
        assert run.A == (1, 3, 4, 6, 8, 9, 11, 12)
        assert run.B[-1] == 20
        assert run.B == (2, 5, 7, 10, 13, 15, 18, 20)
        run.check()

    def test_zero_skips(self):
        run = run_mes([0] * 4, 4)
        assert (run.A, run.B) == ((1, 3, 5, 7), (2, 4, 6, 8))
        assert naive_mes([0] * 4, 4) == ([1, 3, 5, 7], [2, 4, 6, 8])

    def test_golden_rule_table5(self):
        run = run_mes(golden_c_rule(12), 12)
        assert run.A == (1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19)
        assert run.B == (2, 5, 7, 10, 13, 15, 18, 20, 23, 26, 28, 31)
        assert run.C == (0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7)
        assert (run.A[-1], run.B[-1], run.C[-1]) == (19, 31, 7)

    def test_negative_skip(self):
        with pytest.raises(NegativeSkip):
            run_mes([0, -1], 2)

    def test_short_skip_sequence(self):
        with pytest.raises(ValueError):
            run_mes([0, 1], 3)

    @settings(max_examples=200, deadline=None)
    @given(st.lists(st.integers(0, 15), min_size=1, max_size=60))
    def test_matches_naive_and_identity(self, C):
        run = run_mes(C, len(C))
        assert (list(run.A), list(run.B)) == naive_mes(C, len(C))
        run.check()

    def test_adversarial_exponential_skips(self):
        # c_n = 2^n: only the row identity is claimed
        N = 16
        run = run_mes([2**n for n in range(1, N + 1)], N)
        run.check()
        used = set(run.A) | set(run.B)
        assert all(x in used for x in range(1, run.A[-1] + 1))

    def test_touch_bound(self):
        for alpha in (PHI, SQRT13_ALPHA, make(0, 1, 2, 1)):
            pair = pair_from_slope(alpha)
            C, _ = derive_skipping(pair, 5000)
            run = run_mes(C, 5000)
            assert run.touches <= 10 * max(run.B)


class TestGoldenRule:
    def test_prefix(self):
        assert golden_c_rule(17) == GOLDEN_C

    def test_first(self):
        assert golden_c_rule(1) == [0]

    def test_induced_run_is_golden(self):
        run = run_mes(self_defining_rule(2), 500)
        assert list(run.A) == beatty_prefix(PHI, 500)
        assert list(run.B) == beatty_prefix(PHI * PHI, 500)

    def test_rule_structure(self):
        C = golden_c_rule(400)
        A = set(beatty_prefix(PHI, 400))
        counts = {}
        for c in C:
            counts[c] = counts.get(c, 0) + 1
        for c in range(1, C[-1]):
            assert counts[c] == (2 if c in A else 1)


class TestDeriveSkipping:
    def test_golden(self):
        pair = pair_from_slope(PHI)
        C, R = derive_skipping(pair, 4)
        assert (C[3], R[3]) == (2, 1)
        assert 10 - 6 == C[3] + R[3] + 1
        assert (C[0], R[0]) == (0, 0)

    def test_sqrt13(self):
        C, R = derive_skipping(pair_from_slope(SQRT13_ALPHA), 12)
        assert (C[7], R[7]) == (3, 2)

    def test_against_brute_oracle(self):
        for alpha in random_alphas(4, 5) + [PHI]:
            pair = pair_from_slope(alpha)
            N = 400
            A = beatty_prefix(pair.alpha, 3 * N * 10)
            B = beatty_prefix(pair.beta, N)
            assert derive_skipping(pair, N) == brute_between(A, B, N)


class TestDefining:
    def test_sqrt13_table(self):
        run = mes_from_defining(BeattySeq(SQRT13_DELTA), 3, 12)
        assert run.A == (1, 3, 5, 6, 8, 10, 12, 13, 15, 17, 18, 20)
        assert run.B == (2, 4, 7, 9, 11, 14, 16, 19, 21, 23, 26, 28)

    def test_golden_defining(self):
        run = mes_from_defining(BeattySeq(PHI), 2, 12)
        assert run.A == (1, 3, 4, 6, 8, 9, 11, 12, 14, 16, 17, 19)

    def test_k1_skips_are_defining_sequence(self):
        delta = make(0, 1, 2, 1)
        run = mes_from_defining(BeattySeq(delta), 1, 50)
        assert list(run.C) == beatty_prefix(delta, 50)
        assert list(run.A) == beatty_prefix(delta, 50)

    def test_defining_slope_must_exceed_one(self):
        with pytest.raises(SlopeOutOfRange):
            mes_from_defining(BeattySeq(PHI - 1), 2, 5)
