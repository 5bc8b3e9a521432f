from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from numsg.poly import Field, Polynomial, degrevlex, format_polynomial, lex, parse_polynomial, weighted

N = 3
monos = st.tuples(*[st.integers(0, 3)] * N)
polys = st.dictionaries(monos, st.integers(-5, 5), max_size=5).map(lambda t: Polynomial(t, N))


@given(polys)
def test_parse_format_round_trip(f):
    assert parse_polynomial(format_polynomial(f), N) == f


@given(polys, polys, polys)
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f - f).is_zero()


def test_parse_examples():
    f = parse_polynomial("x2^2-x1*x4", 4)
    assert f.terms == {(0, 2, 0, 0): 1, (1, 0, 0, 1): Field()(-1)}
    assert f.is_homogeneous() and f.degree() == 2
    assert str(parse_polynomial("x1^3-x4^2", 4).initial_form()) == "-x4^2"


def test_field_arithmetic():
    F = Field(7)
    assert F.inv(3) == 5 and F(-1) == 6 and F(Fraction(1, 2)) == 4
    with pytest.raises(ValueError):
        Field(15)
    Q = Field(0)
    assert Q.inv(3) == Fraction(1, 3)


def test_orders():
    x1x3, x2sq = (1, 0, 1), (0, 2, 0)
    assert degrevlex(N).compare(x2sq, x1x3) > 0
    assert lex(N).compare(x1x3, x2sq) > 0
    # ranking x3 > x2 > x1
    assert lex(N, [2, 1, 0]).compare(x1x3, x2sq) > 0
    assert degrevlex(N, [2, 1, 0]).compare(x1x3, x2sq) < 0
    w = weighted([3, 2, 1], degrevlex(N))
    assert w.compare((1, 0, 0), (0, 1, 0)) > 0
    assert degrevlex(N, [2, 0, 1]).name == "degrevlex(x3>x1>x2)"


@given(st.lists(monos, min_size=2, max_size=8, unique=True))
def test_orders_are_total_and_multiplicative(ms):
    for order in (degrevlex(N), lex(N), degrevlex(N, [1, 2, 0])):
        ranked = sorted(ms, key=order.key)
        shift = (1, 0, 2)
        shifted = sorted((tuple(a + b for a, b in zip(m, shift)) for m in ms), key=order.key)
        assert shifted == [tuple(a + b for a, b in zip(m, shift)) for m in ranked]
