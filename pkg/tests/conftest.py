import random
import sys
from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from catalyxis import _kernels
from catalyxis.majorization import make_probvec

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def vec(s):
    return make_probvec(s.split(","))


# worked examples
PAIR_SIMPLE = (vec("0.45,0.35,0.12,0.08"), vec("0.56,0.21,0.17,0.06"))
PAIR_TWO_REGIONS = (vec("0.49,0.30,0.13,0.06,0.02"), vec("0.56,0.25,0.10,0.08,0.01"))
PAIR_HIGHER = (vec("0.47,0.38,0.13,0.02"), vec("0.53,0.31,0.15,0.01"))
PAIR_D3 = (vec("0.5,0.4,0.1"), vec("0.6,0.2,0.2"))


def random_probvec(rng: random.Random, d: int, den: int = 100, allow_zero: bool = False):
    """Random vector with entries ``n_i / den``; zeros only if allowed."""
    if allow_zero:
        cuts = sorted(rng.randint(0, den) for _ in range(d - 1))
    else:
        cuts = sorted(rng.sample(range(1, den), d - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [den])]
    return make_probvec([Fraction(x, den) for x in parts])


@st.composite
def probvecs(draw, min_size=1, max_size=6, max_weight=20):
    weights = draw(
        st.lists(st.integers(0, max_weight), min_size=min_size, max_size=max_size).filter(
            lambda w: sum(w) > 0
        )
    )
    total = sum(weights)
    return make_probvec([Fraction(w, total) for w in weights])


@pytest.fixture(params=["numba", "numpy"])
def backend(request):
    prev = _kernels.set_backend(request.param)
    yield request.param
    _kernels.set_backend(prev)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS):
        terminalreporter.write_line(line)
