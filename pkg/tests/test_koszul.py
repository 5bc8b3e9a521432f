import pytest

from numsg.koszul import CERTIFIED, NOT_KOSZUL, UNDECIDED, koszul_verdict
from numsg.poly import Field


@pytest.mark.parametrize("gens, kind", [
    ((1,), "zero-ideal"),
    ((2, 3), "groebner"),
    ((4, 6, 7, 9), "groebner"),
    ((5, 11, 13, 12), "groebner"),
])
def test_certified(gens, kind):
    v = koszul_verdict(gens, max_i=3)
    assert v.status == CERTIFIED and v.certificate["kind"] == kind


def test_gluing_certificate_when_permutations_are_disabled():
    v = koszul_verdict((8, 9, 10, 12), max_i=3, perm_limit=0)
    assert v.status == CERTIFIED and v.certificate["kind"] == "gluing"
    assert v.certificate["l"] == 9


def test_not_quadratic_witness_in_homological_degree_two():
    v = koszul_verdict((7, 8, 20))
    assert v.status == NOT_KOSZUL and v.witness == (2, 5) and v.certificate["value"] == 1


def test_six_generated_counterexample():
    v = koszul_verdict((12, 14, 15, 16, 18, 19), max_i=4)
    assert v.status == NOT_KOSZUL and v.witness == (4, 5)
    assert v.label() == "NotKoszul(beta_4,5=1)"


def test_undecided_below_cutoff():
    v = koszul_verdict((12, 14, 15, 16, 18, 19), max_i=3)
    assert v.status == UNDECIDED and v.cutoff == 3
    assert v.label() == "UndecidedUpTo(3)"


@pytest.mark.parametrize("p", [32003, 31991])
def test_five_generated_refutation(p):
    v = koszul_verdict((11, 13, 14, 15, 19), max_i=4, field=Field(p))
    assert (v.status, v.witness, v.certificate["value"]) == (NOT_KOSZUL, (3, 4), 2)
    assert v.as_dict()["field"] == p
