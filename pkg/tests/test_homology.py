from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from numsg.errors import BandTooSmall
from numsg.groebner import Ideal, monomials_of_degree
from numsg.homology import ambient_resolution, betti_table_over_quotient, is_gorenstein_quotient
from numsg.poly import GF, Field, Polynomial, parse_polynomials
from numsg.tangent_cone import initial_ideal

quadric_monomials = st.lists(st.sampled_from(list(monomials_of_degree(3, 2))), min_size=1, max_size=4, unique=True)


def test_polynomial_ring_gives_koszul_complex():
    tab = betti_table_over_quotient(Ideal([], 3, GF), max_i=4)
    assert tab.entries == {(i, i): comb(3, i) for i in range(4)}


def test_truncated_polynomial_ring_is_periodic():
    # K over K[x]/(x^3): beta_{2k} sits in degree 3k, beta_{2k+1} in 3k+1
    I = Ideal(parse_polynomials(["x1^3"], 1), 1)
    tab = betti_table_over_quotient(I, max_i=5, band=3)
    want = {(i, 3 * (i // 2) + i % 2): 1 for i in range(6)}
    assert tab.entries == want
    assert tab.first_off_diagonal() == (2, 3)


@given(quadric_monomials)
def test_quadratic_monomial_ideals_are_linear(monos):
    I = Ideal([Polynomial({m: 1}, 3) for m in monos], 3)
    assert betti_table_over_quotient(I, max_i=4).is_linear()


def test_band_guard():
    tab = betti_table_over_quotient(Ideal([], 2, GF), max_i=2, band=1)
    with pytest.raises(BandTooSmall):
        tab.get(2, 4)
    with pytest.raises(BandTooSmall):
        tab.get(3, 3)


def test_singular_table_for_six_generated_example():
    tab = betti_table_over_quotient(initial_ideal((12, 14, 15, 16, 18, 19)), max_i=4, band=2)
    assert [tab.get(i, i) for i in range(5)] == [1, 6, 24, 84, 276]
    assert tab.get(4, 5) == 1 and tab.off_diagonal() == [(4, 5)]


@pytest.mark.parametrize("p", [32003, 31991])
def test_five_generated_example_over_two_primes(p):
    F = Field(p)
    tab = betti_table_over_quotient(initial_ideal((11, 13, 14, 15, 19), F), max_i=4, band=2, field=F)
    assert [tab.get(i, i) for i in range(5)] == [1, 5, 15, 36, 76]
    assert tab.first_off_diagonal() == (3, 4) and tab.get(3, 4) == 2


def test_render():
    tab = betti_table_over_quotient(Ideal(parse_polynomials(["x1^3"], 1), 1), max_i=3, band=1)
    lines = tab.render().splitlines()
    assert lines[0].split() == ["0", "1", "2", "3"]
    assert lines[1].split() == ["total:", "1", "1", "1", "1"]
    assert lines[2].split() == ["0:", "1", "1", ".", "."]
    assert lines[3].split() == ["1:", ".", ".", "1", "1"]


def test_ambient_resolution_complete_intersection():
    I = Ideal(parse_polynomials(["x1^2", "x2^3"], 2), 2)
    tab = ambient_resolution(I).betti()
    assert tab.entries == {(0, 0): 1, (1, 2): 1, (1, 3): 1, (2, 5): 1}
    assert is_gorenstein_quotient(I)


def test_gorenstein_detection():
    # (x, y)^2 has last Betti number 2
    I = Ideal(parse_polynomials(["x1^2", "x1*x2", "x2^2"], 2), 2)
    assert not is_gorenstein_quotient(I)
    # tangent cone of a symmetric semigroup with e = 5
    assert is_gorenstein_quotient(initial_ideal((5, 11, 13, 12)))
