import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from beattymes.errors import (
    DivisionByZero,
    NegativeRadicand,
    NonPositiveN,
    NotIrrational,
    RadicandMismatch,
    SlopeParse,
    ZeroDenominator,
)
from beattymes.exact import (
    PHI,
    Ordering,
    QuadExpr,
    add,
    compare,
    div,
    floor_mul,
    isqrt,
    make,
    mul,
    parse_slope,
    rational,
    sub,
)

from conftest import quads, same_field
from oracles import interval_floor


class TestMake:
    def test_golden_ratio(self):
        phi = make(1, 1, 5, 2)
        assert (phi.p, phi.q, phi.d, phi.r) == (1, 1, 5, 2)
        assert phi.is_irrational

    def test_gcd_reduction(self):
        assert make(3, 0, 0, 6) == QuadExpr(1, 0, 0, 2)

    def test_perfect_square_radicand_folds(self):
        assert make(2, 2, 4, 2) == QuadExpr(3, 0, 0, 1)
        assert make(2, 2, 4, 2).is_rational

    def test_square_factor_extracted(self):
        assert make(0, 1, 8, 2) == make(0, 1, 2, 1)

    def test_negative_denominator_normalized(self):
        x = make(1, 1, 5, -2)
        assert x.r == 2 and (x.p, x.q) == (-1, -1)

    def test_errors(self):
        with pytest.raises(ZeroDenominator):
            make(1, 1, 5, 0)
        with pytest.raises(NegativeRadicand):
            make(1, 1, -5, 2)

    @given(quads())
    def test_idempotent(self, x):
        assert make(x.p, x.q, x.d, x.r) == x
        y = make(x.p, x.q, x.d, x.r)
        assert (y.p, y.q, y.d, y.r) == (x.p, x.q, x.d, x.r)


class TestArithmetic:
    def test_golden_gamma(self):
        phi = PHI
        assert div(sub(2, phi), sub(phi, 1)) == make(-1, 1, 5, 2)
        assert div(sub(2, phi), sub(phi, 1)) == phi.inverse()

    def test_multiplicative_identity(self):
        x = make(187, 2, 13, 113)
        assert mul(x, 1) == x

    def test_sqrt13_delta(self):
        alpha = make(187, 2, 13, 113)
        assert div(sub(2, alpha), sub(mul(3, alpha), 5)) == make(0, 1, 13, 2)

    def test_operators_match_functions(self):
        x, y = make(1, 2, 3, 5), make(-2, 1, 3, 7)
        assert x + y == add(x, y)
        assert x - y == sub(x, y)
        assert x * y == mul(x, y)
        assert x / y == div(x, y)
        assert 1 - x == sub(1, x)
        assert Fraction(1, 3) * x == mul(rational(1, 3), x)

    def test_radicand_mismatch(self):
        with pytest.raises(RadicandMismatch):
            add(make(0, 1, 2, 1), make(0, 1, 3, 1))
        # rational operands mix with any field
        assert add(make(0, 1, 2, 1), rational(1, 2)).d == 2

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            div(PHI, 0)
        with pytest.raises(DivisionByZero):
            div(PHI, sub(PHI, PHI))

    @settings(max_examples=1000, deadline=None)
    @given(same_field())
    def test_field_axioms(self, xyz):
        x, y, z = xyz
        assert x + y == y + x
        assert x * y == y * x
        assert (x + y) + z == x + (y + z)
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        if y.p or y.q:
            assert (x * y) / y == x

    def test_to_fraction(self):
        assert rational(3, 6).to_fraction() == Fraction(1, 2)
        with pytest.raises(NotIrrational):
            PHI.to_fraction()


class TestCompare:
    def test_sqrt13_half_vs_nine_fifths(self):
        # 13/4 > 81/25 by cross multiplication: 325 > 324
        assert 13 * 25 > 81 * 4
        assert compare(make(0, 1, 13, 2), rational(9, 5)) is Ordering.GREATER

    def test_equal(self):
        assert compare(PHI, PHI) is Ordering.EQUAL

    def test_sqrt13_alpha_in_k3_band(self):
        alpha = make(187, 2, 13, 113)
        # (187 + 2 sqrt13)/113 < 7/4  <=>  8 sqrt13 < 791 - 748  <=>  832 < 1849
        assert 64 * 13 < 43 * 43
        assert compare(alpha, rational(7, 4)) is Ordering.LESS
        assert rational(5, 3) < alpha < rational(7, 4)

    @settings(max_examples=300, deadline=None)
    @given(same_field())
    def test_total_order(self, xyz):
        x, y, z = xyz
        assert compare(x, y) == -compare(y, x)
        if compare(x, y) <= 0 and compare(y, z) <= 0:
            assert compare(x, z) <= 0
        assert (compare(x, y) is Ordering.EQUAL) == (x == y)

    @settings(max_examples=200, deadline=None)
    @given(same_field(count=2))
    def test_order_agrees_with_floor_separation(self, xy):
        x, y = xy
        if x == y:
            return
        # some multiple separates the two values, in the direction of compare
        diff = x - y
        n = 1
        while abs(floor_mul(diff, n)) < 2:
            n *= 2
        assert (floor_mul(x, n) > floor_mul(y, n)) == (compare(x, y) is Ordering.GREATER)

    def test_sign_cases(self):
        assert make(3, -1, 5, 1).sign() == 1  # 3 > sqrt5
        assert make(2, -1, 5, 1).sign() == -1
        assert make(-3, 1, 5, 1).sign() == -1
        assert make(-2, 1, 5, 1).sign() == 1
        assert make(0, -1, 5, 1).sign() == -1


class TestFloorMul:
    def test_table_values(self):
        assert floor_mul(PHI, 4) == 6
        assert floor_mul(make(187, 2, 13, 113), 5) == 8

    def test_negative_radical_branch(self):
        x = make(2, -1, 3, 1)
        assert x.q < 0
        assert floor_mul(x, 1) == 0 == interval_floor(2, -1, 3, 1, 1)

    def test_rational(self):
        assert floor_mul(rational(3, 2), 4) == 6
        assert floor_mul(rational(7, 3), 3) == 7

    def test_nonpositive_n(self):
        with pytest.raises(NonPositiveN):
            floor_mul(PHI, 0)

    def test_big_operands(self):
        x = make(1, 997, 999_983, 1009)
        n = 10**7
        assert floor_mul(x, n) == interval_floor(1, 997, 999_983, 1009, n)

    @settings(max_examples=500, deadline=None)
    @given(quads(), st.integers(1, 10**7))
    def test_matches_interval_oracle(self, x, n):
        if x.q == 0:
            return
        assert floor_mul(x, n) == interval_floor(x.p, x.q, x.d, x.r, n)


class TestIsqrt:
    @pytest.mark.parametrize("n, s", [(0, 0), (13, 3), (10**40, 10**20), (10**40 - 1, 10**20 - 1)])
    def test_values(self, n, s):
        assert isqrt(n) == s

    def test_negative(self):
        with pytest.raises(ValueError):
            isqrt(-1)


class TestParse:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("(1+1*sqrt(5))/2", make(1, 1, 5, 2)),
            ("phi", make(1, 1, 5, 2)),
            ("(187+2*sqrt(13))/113", make(187, 2, 13, 113)),
            ("sqrt(3)", make(0, 1, 3, 1)),
            ("(0+1*sqrt(13))/2", make(0, 1, 13, 2)),
            ("(-1-1*sqrt(5))/2", make(-1, -1, 5, 2)),
            ("3/2", rational(3, 2)),
            ("7", rational(7)),
        ],
    )
    def test_grammar(self, text, expected):
        assert parse_slope(text) == expected

    def test_rejects_garbage(self):
        with pytest.raises(SlopeParse):
            parse_slope("1.618")
        with pytest.raises(SlopeParse):
            parse_slope("3/0")

    def test_require_irrational(self):
        with pytest.raises(SlopeParse):
            parse_slope("3/2", require_irrational=True)

    @given(quads())
    def test_str_round_trip(self, x):
        assert parse_slope(str(x)) == x
        assert QuadExpr.from_dict(x.to_dict()) == x

    def test_canonical_text(self):
        assert str(make(0, 1, 13, 2)) == "(0+1*sqrt(13))/2"
        assert str(make(2, -1, 3, 1)) == "(2-1*sqrt(3))/1"


def test_seeded_oracle_sweep():
    rng = random.Random(7)
    for _ in range(300):
        d = rng.choice([2, 3, 5, 6, 7, 10, 13, 999_983])
        x = make(rng.randint(-500, 500), rng.choice([-7, -1, 1, 3]), d, rng.randint(1, 300))
        n = rng.randint(1, 10**6)
        assert floor_mul(x, n) == interval_floor(x.p, x.q, x.d, x.r, n)
