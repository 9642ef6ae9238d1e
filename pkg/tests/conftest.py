import random
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from metabelian_gs.poly import MPoly
from metabelian_gs.words import enumerate_regular_words

settings.register_profile(
    "default", max_examples=100, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def regular_words(k, max_len=5):
    pool = [w for n in range(1, max_len + 1) for w in enumerate_regular_words(k, n)]
    return st.sampled_from(pool)


def rwords(k, max_len=5):
    pool = [w for n in range(2, max_len + 1) for w in enumerate_regular_words(k, n)]
    return st.sampled_from(pool)


def polys(k, max_len=4, max_terms=4, coeffs=(-3, -2, -1, 1, 2, 3)):
    term = st.tuples(regular_words(k, max_len), st.sampled_from(coeffs))
    return st.lists(term, min_size=0, max_size=max_terms).map(
        lambda ts: MPoly({w: c for w, c in ts}))


def monic_polys(k, max_len=4, max_terms=4):
    return polys(k, max_len, max_terms).filter(bool).map(lambda f: f.make_monic())


def letter_combos(k):
    """Random elements of the span of the letters."""
    term = st.tuples(st.integers(0, k - 1), st.integers(-3, 3))
    return st.lists(term, min_size=1, max_size=k).map(
        lambda ts: MPoly({(g,): c for g, c in ts}))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    report = getattr(mod, "REPORT", None)
    if report:
        terminalreporter.section("acceptance criteria")
        for n in sorted(report):
            terminalreporter.write_line(report[n])
