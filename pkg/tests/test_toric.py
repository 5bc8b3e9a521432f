import pytest
from hypothesis import given

from numsg.groebner import ideal_equal, Ideal
from numsg.poly import parse_polynomials
from numsg.semigroup import from_generators
from numsg.toric import (
    binomial_vanishes,
    critical_exponents,
    factorizations,
    minimal_binomial_generators,
    mu,
    toric_hilbert_value,
    toric_ideal,
)

from conftest import semigroups


@given(semigroups(max_n=4, max_gen=18))
def test_generators_vanish_and_grading(gens):
    I = toric_ideal(gens)
    for g in I.gens:
        assert binomial_vanishes(g, gens)
        assert len(g.terms) == 2
    S = from_generators(gens)
    for h in range(0, 2 * max(gens) + 3):
        assert toric_hilbert_value(I, h) == (1 if h in S else 0)


@given(semigroups(max_n=4, max_gen=18))
def test_minimal_generators_generate(gens):
    I = toric_ideal(gens)
    mins = minimal_binomial_generators(I)
    assert ideal_equal(Ideal(mins, I.nvars, I.field, gens), I)
    assert len(gens) - 1 <= len(mins)


@pytest.mark.parametrize("gens, m", [((6, 10, 15), 2), ((3, 4, 5), 3), ((11, 13, 14, 15, 19), 5),
                                     ((12, 14, 15, 16, 18, 19), 9), ((2, 3), 1)])
def test_mu(gens, m):
    assert mu(toric_ideal(gens)) == m


def test_listed_relations_of_five_generated_example():
    gens = (11, 13, 14, 15, 19)
    want = parse_polynomials(["x1^3-x3*x5", "x2^2-x1*x4", "x3^2-x2*x4", "x4^2-x1*x5", "x5^2-x1*x2*x3"], 5)
    assert ideal_equal(Ideal(want, 5), toric_ideal(gens))


def test_critical_exponents():
    got = critical_exponents((6, 7, 8, 9))
    assert [c for c, _ in got] == [3, 2, 2, 2]
    for (c, r), a in zip(got, (6, 7, 8, 9)):
        others = [b for b in (6, 7, 8, 9) if b != a]
        assert sum(x * b for x, b in zip(r, (6, 7, 8, 9))) == c * a
        assert r[(6, 7, 8, 9).index(a)] == 0
        assert all(not factorizations(others, k * a) for k in range(1, c))


def test_unsorted_generators_keep_variable_order():
    I = toric_ideal((8, 20, 7))
    assert ideal_equal(I, Ideal(parse_polynomials(["x1^5-x2^2", "x3^4-x1*x2"], 3), 3))
