from itertools import product

from hypothesis import given
from hypothesis import strategies as st

from numsg.linalg import Echelon, left_kernel, rank

P = 3
DIM = 4
vectors = st.lists(st.lists(st.integers(0, P - 1), min_size=DIM, max_size=DIM), min_size=1, max_size=5)


def as_dict(v):
    return {i: c for i, c in enumerate(v) if c}


def brute_rank(vs):
    """log_p of the size of the span, by enumerating all combinations."""
    span = {tuple(sum(c * v[i] for c, v in zip(cs, vs)) % P for i in range(DIM))
            for cs in product(range(P), repeat=len(vs))}
    r = 0
    while P ** r < len(span):
        r += 1
    return r


@given(vectors)
def test_rank_matches_span_size(vs):
    assert rank([as_dict(v) for v in vs], P) == brute_rank(vs)


@given(vectors)
def test_left_kernel(vs):
    ker = left_kernel([as_dict(v) for v in vs], P)
    assert len(ker) == len(vs) - brute_rank(vs)
    for combo in ker:
        total = [sum(c * vs[i][k] for i, c in combo.items()) % P for k in range(DIM)]
        assert total == [0] * DIM and any(combo.values())


@given(vectors, st.lists(st.integers(0, P - 1), min_size=DIM, max_size=DIM))
def test_contains(vs, w):
    ech = Echelon(P)
    for v in vs:
        ech.insert(as_dict(v))
    assert ech.contains(as_dict(w)) == (brute_rank(vs + [w]) == brute_rank(vs))
