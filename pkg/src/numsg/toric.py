"""Toric ideals of numerical semigroups and their minimal binomial data."""

from __future__ import annotations

from typing import Sequence

from .errors import WrongEmbdim
from .groebner import Ideal, buchberger, eliminate
from .poly import GF, Field, Polynomial, degrevlex
from .semigroup import NumericalSemigroup, from_generators, in_span


def generator_list(H) -> list[int]:
    """Generators in variable order: a semigroup gives its sorted minimal
    generators; an explicit sequence is kept as given (after checking
    that it is a minimal system)."""
    if isinstance(H, NumericalSemigroup):
        return list(H.generators)
    gens = [int(a) for a in H]
    if sorted(from_generators(gens).generators) != sorted(gens) or len(set(gens)) != len(gens):
        raise ValueError(f"{gens} is not a minimal generating system")
    return gens


def semigroup_of(H) -> NumericalSemigroup:
    if isinstance(H, NumericalSemigroup):
        return H
    return from_generators(list(H))


def h_degree(m, gens: Sequence[int]) -> int:
    return sum(e * a for e, a in zip(m, gens))


def toric_ideal(H, field: Field = GF) -> Ideal:
    """I_H = ker(x_i -> t^{a_i}), computed by eliminating t.

    The ideal (x_i - t^{a_i}) is homogeneous for deg x_i = a_i, deg t = 1,
    so the elimination runs degree by degree.
    """
    gens = generator_list(H)
    n = len(gens)
    if n == 1:
        return Ideal([], 1, field, gens)
    t = n
    polys = []
    for i, a in enumerate(gens):
        xi = tuple(1 if k == i else 0 for k in range(n + 1))
        ta = tuple(a if k == t else 0 for k in range(n + 1))
        polys.append(Polynomial({xi: 1, ta: -1}, n + 1, field, _clean=False))
    big = Ideal(polys, n + 1, field)
    elim = eliminate(big, [t], weights=list(gens) + [1])
    order = degrevlex(n)
    basis = buchberger(elim.gens, order)
    I = Ideal([_normalize_binomial(g, order) for g in basis], n, field, gens)
    I.seed_gb(order, basis)
    return I


def _normalize_binomial(g: Polynomial, order) -> Polynomial:
    """Leading monomial first with coefficient +1, common factors removed."""
    if len(g.terms) != 2:
        return g.monic(order)
    (m1, _), (m2, _) = g.sorted_terms(order)
    common = tuple(min(a, b) for a, b in zip(m1, m2))
    m1 = tuple(a - c for a, c in zip(m1, common))
    m2 = tuple(a - c for a, c in zip(m2, common))
    return Polynomial({m1: 1, m2: -1}, g.nvars, g.field)


def binomial_vanishes(f: Polynomial, gens: Sequence[int]) -> bool:
    """Substituting x_i -> t^{a_i} kills f."""
    acc: dict = {}
    F = f.field
    for m, c in f.terms.items():
        d = h_degree(m, gens)
        acc[d] = F.add(acc.get(d, 0), c)
    return all(c == 0 for c in acc.values())


def minimal_binomial_generators(I: Ideal, weights: Sequence[int] | None = None) -> list[Polynomial]:
    """A minimal generating subset, chosen greedily by increasing H-degree."""
    weights = weights if weights is not None else I.weights
    if weights is None:
        raise ValueError("minimal_binomial_generators needs the semigroup grading")
    order = degrevlex(I.nvars)
    cands = sorted(I.gb(order) or I.gens,
                   key=lambda g: (h_degree(next(iter(g.terms)), weights), order.key(g.leading_monomial(order))))
    kept: list[Polynomial] = []
    for f in cands:
        if kept and Ideal(kept, I.nvars, I.field).contains(f):
            continue
        kept.append(f)
    # a later element can make an earlier one of the same degree redundant
    changed = True
    while changed:
        changed = False
        for k in range(len(kept) - 1, -1, -1):
            rest = kept[:k] + kept[k + 1:]
            if rest and Ideal(rest, I.nvars, I.field).contains(kept[k]):
                kept = rest
                changed = True
                break
    return kept


def mu(I: Ideal) -> int:
    return len(minimal_binomial_generators(I))


def factorizations(gens: Sequence[int], h: int) -> list[tuple[int, ...]]:
    """All exponent vectors lam with sum lam_i gens_i = h."""
    out: list[tuple[int, ...]] = []

    def rec(k, rest, acc):
        if k == len(gens) - 1:
            if rest % gens[k] == 0:
                out.append(tuple(acc) + (rest // gens[k],))
            return
        for c in range(rest // gens[k] + 1):
            rec(k + 1, rest - c * gens[k], acc + [c])

    if not gens:
        return [()] if h == 0 else []
    rec(0, h, [])
    return out


def critical_exponents(H) -> list[tuple[int, tuple[int, ...]]]:
    """For each i: (c_i, r_i) with c_i minimal such that c_i a_i is a sum of
    the other generators, and r_i a witnessing exponent vector (r_ii = 0).

    Among witnesses, one that is not a pure power is preferred; ties go to
    the lexicographically greatest vector.
    """
    gens = generator_list(H)
    n = len(gens)
    if n < 2:
        raise WrongEmbdim("critical exponents need embedding dimension >= 2")
    out = []
    for i, a in enumerate(gens):
        others = [b for k, b in enumerate(gens) if k != i]
        c = 1
        while not in_span(others, c * a):
            c += 1
        facts = factorizations(others, c * a)
        mixed = [f for f in facts if sum(1 for e in f if e) > 1]
        pick = max(mixed) if mixed else max(facts)
        r = list(pick)
        r.insert(i, 0)
        out.append((c, tuple(r)))
    return out


def critical_binomials(H, field: Field = GF) -> list[Polynomial]:
    """f_i = x_i^{c_i} - m_i built from ``critical_exponents``."""
    gens = generator_list(H)
    n = len(gens)
    out = []
    for i, (c, r) in enumerate(critical_exponents(gens)):
        lhs = tuple(c if k == i else 0 for k in range(n))
        out.append(Polynomial({lhs: 1, r: -1}, n, field))
    return out


def toric_hilbert_value(I: Ideal, h: int) -> int:
    """dim_K (S/I)_h in the semigroup grading: number of standard monomials
    of H-degree h (1 for h in H, 0 otherwise when I = I_H)."""
    gens = I.weights
    order = degrevlex(I.nvars)
    lms = I.leading_monomials(order)
    count = 0
    for m in _monomials_of_weight(gens, h):
        if not any(all(a <= b for a, b in zip(lm, m)) for lm in lms):
            count += 1
    return count


def _monomials_of_weight(gens: Sequence[int], h: int):
    return factorizations(list(gens), h)
