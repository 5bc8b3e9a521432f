from itertools import product
from math import gcd

import pytest
from hypothesis import given

from numsg.errors import EmptyInput, NonCoprime, NonPositive
from numsg.semigroup import enumerate_semigroups, from_generators, in_span, minimalize

from conftest import semigroups


def brute_members(gens, limit):
    seen = {0}
    for h in range(1, limit + 1):
        if any(h - a in seen for a in gens if a <= h):
            seen.add(h)
    return seen


def brute_factorizations(gens, h):
    bounds = [range(h // a + 1) for a in gens]
    return [lam for lam in product(*bounds) if sum(l * a for l, a in zip(lam, gens)) == h]


def test_small_invariants():
    S = from_generators([3, 5, 7])
    assert S.generators == (3, 5, 7)
    assert S.frobenius_number() == 4
    assert S.gaps() == [1, 2, 4]
    assert S.multiplicity == 3 and S.embdim == 3


def test_minimalize_drops_redundant():
    assert minimalize([4, 6, 8, 9, 10]) == [4, 6, 9]
    assert from_generators([6, 7, 8, 9, 12, 13]).generators == (6, 7, 8, 9)


@pytest.mark.parametrize("raw, err", [([], EmptyInput), ([4, 6], NonCoprime), ([0, 3], NonPositive)])
def test_bad_input(raw, err):
    with pytest.raises(err):
        from_generators(raw)


@given(semigroups())
def test_membership_and_frobenius(gens):
    S = from_generators(gens)
    F = S.frobenius_number()
    limit = F + 2 * max(gens)
    members = brute_members(gens, limit)
    assert F not in members
    assert all(h in members for h in range(F + 1, limit + 1))
    assert [h for h in range(limit + 1) if h not in members] == S.gaps()
    assert all((h in S) == (h in members) for h in range(limit + 1))


@given(semigroups())
def test_apery_set(gens):
    S = from_generators(gens)
    e = S.multiplicity
    members = brute_members(gens, S.frobenius_number() + e + 1)
    ap = S.apery_set()
    assert len(ap) == e
    for w in ap:
        assert w in members and (w - e) not in members


@given(semigroups(max_gen=16))
def test_order_matches_factorizations(gens):
    S = from_generators(gens)
    for h in range(0, 3 * max(gens)):
        facts = brute_factorizations(gens, h)
        if not facts:
            continue
        best = max(sum(f) for f in facts)
        assert S.order_of(h) == best
        w = S.order_witness(h)
        assert sum(w) == best and sum(x * a for x, a in zip(w, S.generators)) == h
        assert tuple(w) == max(f for f in facts if sum(f) == best)


@given(semigroups(max_gen=16))
def test_gr_hilbert_function_counts_orders(gens):
    S = from_generators(gens)
    limit = (S.hilbert_stabilization() + 2) * max(gens)
    for i in range(S.hilbert_stabilization() + 2):
        count = sum(1 for h in range(limit + 1) if h in S and S.order_of(h) == i)
        assert S.gr_hilbert_function(i) == count
    # stabilizes at the multiplicity
    assert S.gr_hilbert_function(S.hilbert_stabilization() + 1) == S.multiplicity


@given(semigroups())
def test_symmetry_definitions(gens):
    S = from_generators(gens)
    F = S.frobenius_number()
    gaps = set(S.gaps())
    if F < 0:
        return
    sym = all((F - g) in S for g in gaps)
    assert S.is_symmetric() == sym
    pf = [g for g in gaps if all(g + a in S for a in gens)]
    assert S.pseudo_frobenius() == sorted(pf)
    if F % 2 == 0:
        assert S.is_pseudo_symmetric() == (sorted(pf) == [F // 2, F])


def test_in_span_without_coprimality():
    assert in_span([4, 6], 10) and not in_span([4, 6], 7)


def test_enumerate_semigroups():
    got = list(enumerate_semigroups(2, 7))
    want = [(a, b) for a in range(2, 8) for b in range(a + 1, 8) if gcd(a, b) == 1]
    assert got == want
    assert list(enumerate_semigroups(1, 5)) == [(1,)]
