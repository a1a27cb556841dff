import random
import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from beattymes.exact import PHI, make  # noqa: E402
from oracles import is_square, random_quadratic_in  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


SQRT13_ALPHA = make(187, 2, 13, 113)
SQRT13_DELTA = make(0, 1, 13, 2)


@pytest.fixture
def phi():
    return PHI


@pytest.fixture
def sqrt13_alpha():
    return SQRT13_ALPHA


def random_alphas(seed, count, lo=(21, 20), hi=(39, 20), dmax=50):
    """``count`` random irrational slopes in (lo, hi), radicand <= dmax."""
    rng = random.Random(seed)
    return [make(*random_quadratic_in(rng, *lo, *hi, dmax=dmax)) for _ in range(count)]


nonsquare = st.integers(min_value=2, max_value=200).filter(lambda d: not is_square(d))


@st.composite
def quads(draw, d=None, allow_zero=True):
    """Elements of Q(sqrt d) for a drawn (or given) non-square d."""
    radicand = d if d is not None else draw(nonsquare)
    p = draw(st.integers(-10**6, 10**6))
    q = draw(st.integers(-1000, 1000))
    r = draw(st.integers(1, 10**4))
    if not allow_zero and p == 0 and q == 0:
        p = 1
    return make(p, q, radicand, r)


@st.composite
def same_field(draw, count=3, allow_zero=True):
    d = draw(nonsquare)
    return tuple(draw(quads(d=d, allow_zero=allow_zero)) for _ in range(count))
