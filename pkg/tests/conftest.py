from math import gcd

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from numsg.semigroup import minimalize

settings.register_profile(
    "numsg",
    deadline=None,
    derandomize=True,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("numsg")


@st.composite
def semigroups(draw, min_n=2, max_n=4, max_gen=22):
    """Minimal generating systems (sorted) of numerical semigroups."""
    raw = draw(st.lists(st.integers(2, max_gen), min_size=min_n, max_size=max_n, unique=True))
    if gcd(*raw) != 1:
        raw.append(draw(st.sampled_from([p for p in (3, 5, 7, 11, 13) if gcd(p, gcd(*raw)) == 1])))
    gens = tuple(minimalize(raw))
    return gens


@pytest.fixture(scope="session")
def golden():
    """Ideals quoted for small examples, variables in the listed order."""
    return {
        (7, 8, 20): ["x3^2", "x2*x3", "x1^4*x3", "x2^7"],
        (4, 6, 7, 9): ["x2^2", "x2*x3-x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"],
        (12, 18, 21, 27, 8): ["x1^2", "x2^2", "x2*x3-x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"],
        (12, 18, 21, 27, 10): ["x1*x2", "x2^2", "x2*x3-x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2",
                               "x1^3*x3-x4*x5^3", "x1^4-x2*x5^3"],
    }
