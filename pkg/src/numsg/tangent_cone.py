"""Tangent cones gr_m K[H] = S/I_H* and the predicates built on them.

I* is computed by homogenizing with an extra variable t, saturating with
respect to t under a degree order where t is cheapest, and setting t = 0.
Every result is checked against the Hilbert function of the semigroup
(the number of elements of each order) before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import permutations
from typing import Sequence

from .errors import EmbdimTooLarge, OracleMismatch
from .groebner import (
    Ideal,
    buchberger,
    ideal_quotient_by_variable,
    monomials_of_degree,
    quotient_hilbert_function,
    saturate_by_variable,
)
from .linalg import Echelon
from .poly import GF, Field, Polynomial, TermOrder, degrevlex, lex, mdeg
from .semigroup import NumericalSemigroup
from .toric import generator_list, h_degree, minimal_binomial_generators, semigroup_of, toric_ideal

PERM_LIMIT = 8
# ranks over Q are taken modulo this prime
RATIONAL_PROXY = 2 ** 61 - 1


@dataclass
class StandardBasisResult:
    basis: list[Polynomial]
    initial_ideal: Ideal
    minimal: bool = True
    gens: tuple[int, ...] = ()
    # the whole saturated Groebner basis, dehomogenized
    full_basis: list[Polynomial] = dc_field(default_factory=list)

    def initial_forms(self) -> list[Polynomial]:
        return [f.initial_form() for f in self.basis]


# ------------------------------------------------------------- I* itself


def _homogenize(f: Polynomial) -> Polynomial:
    n = f.nvars
    d = f.initial_degree()
    return Polynomial({m + (mdeg(m) - d,): c for m, c in f.terms.items()}, n + 1, f.field, _clean=True)


def _strip_t(f: Polynomial, value: int) -> Polynomial:
    g = f.evaluate_variable(f.nvars - 1, value)
    return Polynomial({m[:-1]: c for m, c in g.terms.items()}, f.nvars - 1, f.field, _clean=True)


def _homogenized_order(weights: Sequence[int], n: int) -> TermOrder:
    lam = 1 if min(weights) >= 2 else 2
    w = tuple(lam * a - 1 for a in weights) + (1,)
    t = n
    x = tuple(range(n))
    return TermOrder("homog", [("weight", w), ("revlex", (t,)),
                               ("weight", tuple([1] * n) + (0,)), ("revlex", x)])


def standard_basis(I: Ideal, check: bool = True) -> StandardBasisResult:
    """Standard basis of a toric ideal and the ideal of initial forms.

    ``I.weights`` must hold the semigroup degrees of the variables.
    """
    gens = I.weights
    if gens is None:
        raise ValueError("standard_basis needs the semigroup grading of the variables")
    n = I.nvars
    F = I.field
    if I.is_zero():
        Istar = Ideal([], n, F, gens)
        res = StandardBasisResult([], Istar, True, tuple(gens))
    else:
        order = _homogenized_order(gens, n)
        big = Ideal([_homogenize(g) for g in I.gens], n + 1, F)
        sat = saturate_by_variable(big, n, order)
        basis = [_strip_t(g, 1) for g in sat]
        forms = [_strip_t(g, 0) for g in sat]
        dorder = degrevlex(n)
        Istar = Ideal(forms, n, F, gens)
        Istar.seed_gb(dorder, buchberger(forms, dorder))
        keep = _independent_subset(forms, gens)
        res = StandardBasisResult([basis[k] for k in keep], Istar, True, tuple(gens), basis)
    if check:
        oracle_check(semigroup_of(sorted(gens)), res.initial_ideal)
    return res


def oracle_check(H: NumericalSemigroup, Istar: Ideal, extra: int = 2):
    """Hilbert function of S/I* against #{h : ord(h) = d}."""
    top = H.hilbert_stabilization() + extra
    for d in range(top + 1):
        got = quotient_hilbert_function(Istar, None, d) if not Istar.is_zero() else _free_dim(Istar.nvars, d)
        want = H.gr_hilbert_function(d)
        if got != want:
            raise OracleMismatch(f"{H}: dim (S/I*)_{d} = {got}, expected {want}")


def _free_dim(n: int, d: int) -> int:
    from math import comb
    return comb(n + d - 1, d)


@lru_cache(maxsize=512)
def _tangent_cone_cached(gens: tuple[int, ...], p: int) -> StandardBasisResult:
    return standard_basis(toric_ideal(list(gens), Field(p)))


def tangent_cone(H, field: Field = GF) -> StandardBasisResult:
    """Standard basis data for I_H, variables in the order of ``H``."""
    return _tangent_cone_cached(tuple(generator_list(H)), field.p)


def initial_ideal(H, field: Field = GF) -> Ideal:
    return tangent_cone(H, field).initial_ideal


# ----------------------------------------------- minimal generator degrees


@lru_cache(maxsize=256)
def _monomials_by_weight(n: int, d: int, weights: tuple[int, ...]) -> dict:
    out: dict = {}
    for m in monomials_of_degree(n, d):
        out.setdefault(h_degree(m, weights), []).append(m)
    return out


def _bidegree(f: Polynomial, weights) -> tuple[int, int]:
    m = next(iter(f.terms))
    return mdeg(m), h_degree(m, weights)


def _independent_subset(polys: Sequence[Polynomial], weights: Sequence[int] | None) -> list[int]:
    """Indices of a minimal generating subset of the homogeneous ideal
    spanned by ``polys``: in each bidegree, keep the candidates that are
    independent modulo S_1 times the lower-degree part of the ideal."""
    if not polys:
        return []
    n = polys[0].nvars
    p = polys[0].field.p or RATIONAL_PROXY
    weights = tuple(weights) if weights is not None else tuple([0] * n)
    items = sorted(range(len(polys)), key=lambda k: (_bidegree(polys[k], weights), k))
    keep: list[int] = []
    done: dict = {}
    for k in items:
        d, w = _bidegree(polys[k], weights)
        ech = done.get((d, w))
        if ech is None:
            ech = Echelon(p)
            for j in items:
                dj, wj = _bidegree(polys[j], weights)
                if dj >= d:
                    break
                for u in _monomials_by_weight(n, d - dj, weights).get(w - wj, ()):
                    ech.insert(_shift(polys[j], u, p))
            done[(d, w)] = ech
        if ech.insert(_shift(polys[k], None, p))[0]:
            keep.append(k)
    return sorted(keep, key=lambda k: (_bidegree(polys[k], weights), k))


def _shift(f: Polynomial, u, p: int) -> dict:
    if u is None:
        u = (0,) * f.nvars
    return {tuple(a + b for a, b in zip(m, u)): _modp(c, p) for m, c in f.terms.items()}


def _modp(c, p: int) -> int:
    if isinstance(c, int):
        return c % p
    return c.numerator * pow(c.denominator, -1, p) % p


def minimal_generators(Istar: Ideal) -> list[Polynomial]:
    """A minimal homogeneous generating system, taken from the reduced
    degrevlex Groebner basis."""
    if Istar.is_zero():
        return []
    if not Istar.is_homogeneous():
        from .errors import NonHomogeneousInput
        raise NonHomogeneousInput("minimal generators need a homogeneous ideal")
    gb = Istar.gb(degrevlex(Istar.nvars))
    weights = Istar.weights if Istar.weights is not None and all(g.is_homogeneous(Istar.weights) for g in gb) else None
    return [gb[k] for k in _independent_subset(gb, weights)]


def minimal_generators_degrees(Istar: Ideal) -> list[int]:
    return sorted(g.degree() for g in minimal_generators(Istar))


def mu(Istar: Ideal) -> int:
    return len(minimal_generators(Istar))


# ------------------------------------------------------------ predicates


def quadratic_prefilter(H) -> str | None:
    """Necessary conditions for quadraticity; returns a refutation or None."""
    a = sorted(generator_list(H))
    n = len(a)
    if n < 2:
        return None
    e, rest = a[0], a[1:]
    if not any((x + y) % e == 0 for i, x in enumerate(rest) for y in rest[i:]):
        return f"no a_k + a_l divisible by e = {e}"
    from .semigroup import in_span
    for i, x in enumerate(rest):
        others = [y for y in a if y != x]
        if not in_span(others, 2 * x):
            return f"2*{x} is not a sum of the other generators"
    return None


def is_quadratic(H, field: Field = GF, prefilter: bool = True) -> bool:
    gens = generator_list(H)
    if len(gens) == 1:
        return True
    if prefilter and quadratic_prefilter(gens) is not None:
        return False
    return all(d == 2 for d in minimal_generators_degrees(initial_ideal(gens, field)))


def quadratic_gb(Istar: Ideal, order: TermOrder) -> bool:
    return all(g.degree() == 2 for g in Istar.gb(order))


def _quadric_leads(quads: Sequence[Polynomial], order: TermOrder, p: int) -> tuple:
    """Leading monomials of the span of ``quads`` (an echelon form with
    columns sorted by ``order``)."""
    cols = sorted({m for q in quads for m in q.terms}, key=order.key, reverse=True)
    rank = {m: k for k, m in enumerate(cols)}
    ech = Echelon(p)
    for q in quads:
        ech.insert({rank[m]: _modp(c, p) for m, c in q.terms.items()})
    return tuple(sorted(cols[k] for k in ech.pivots))


def is_G_quadratic_permutation_search(H, field: Field = GF, limit: int = PERM_LIMIT,
                                      kinds: Sequence[str] = ("degrevlex", "lex")) -> TermOrder | None:
    """First permutation order (degrevlex, then lex) with an all-quadric
    reduced Groebner basis of I*; None means no permutation witness.

    An order qualifies exactly when the leading monomials of the quadric
    part of I* already give the Hilbert series of I*, so most orders are
    rejected without running Buchberger; a hit is confirmed by a full
    Groebner basis.
    """
    from .groebner import hilbert_numerator

    gens = generator_list(H)
    n = len(gens)
    if n > limit:
        raise EmbdimTooLarge(f"permutation search refused for embdim {n} > {limit}")
    Istar = initial_ideal(gens, field)
    if Istar.is_zero():
        return degrevlex(n)
    quads = minimal_generators(Istar)
    if any(q.degree() != 2 for q in quads):
        return None
    p = field.p or RATIONAL_PROXY
    target = Istar.hilbert_numerator()
    seen: dict = {}
    for kind in kinds:
        make = degrevlex if kind == "degrevlex" else lex
        for perm in permutations(range(n)):
            order = make(n, perm)
            leads = _quadric_leads(quads, order, p)
            ok = seen.get(leads)
            if ok is None:
                ok = seen[leads] = hilbert_numerator(leads, n) == target
            if ok:
                if not quadratic_gb(Istar, order):
                    raise OracleMismatch(f"{gens}: Hilbert test accepted {order.name} but the Groebner basis is not quadratic")
                return order
    return None


def toric_mu(H, field: Field = GF) -> int:
    gens = generator_list(H)
    if len(gens) == 1:
        return 0
    return len(minimal_binomial_generators(toric_ideal(gens, field)))


def is_complete_intersection(H, field: Field = GF) -> bool:
    return toric_mu(H, field) == len(generator_list(H)) - 1


def is_almost_CI(H, field: Field = GF) -> bool:
    return toric_mu(H, field) == len(generator_list(H))


def classify_CI_star(H, field: Field = GF) -> str:
    gens = generator_list(H)
    m = mu(initial_ideal(gens, field))
    n = len(gens)
    if m == n - 1:
        return "CI"
    if m == n:
        return "almostCI"
    return "other"


def is_tangent_cone_CM(H, field: Field = GF) -> bool:
    """x_1 (the variable of the multiplicity) is regular on S/I*."""
    gens = generator_list(H)
    Istar = initial_ideal(gens, field)
    if Istar.is_zero():
        return True
    i = gens.index(min(gens))
    return ideal_quotient_by_variable(Istar, i).contains_ideal(Istar) and \
        Istar.contains_ideal(ideal_quotient_by_variable(Istar, i))


def lifting_criterion_check(I: Ideal, candidates: Sequence[Polynomial], x1: int = 0) -> bool:
    """Mod-x1 lifting test for a standard basis.

    The candidates must generate I, their images under x1 -> 0 must be
    homogeneous with the same degree as the initial forms, and those
    images must generate the ideal (I*, x1)/(x1) with x1 regular on S/I*,
    which is certified by comparing Hilbert functions: the images give
    dim (S/(x1, images))_d summing to the multiplicity.
    """
    candidates = [c for c in candidates if c]
    if not candidates:
        return I.is_zero()
    J = Ideal(candidates, I.nvars, I.field)
    if not (J.contains_ideal(I) and I.contains_ideal(J)):
        return False
    images = []
    for f in candidates:
        g = f.evaluate_variable(x1, 0)
        if g.is_zero():
            return False
        if not g.is_homogeneous() or g.degree() != f.initial_degree():
            return False
        if g != f.initial_form().evaluate_variable(x1, 0):
            return False
        images.append(g)
    if I.weights is None:
        return False
    n = I.nvars
    e = min(I.weights)
    var = Polynomial.var(x1, n, I.field)
    Jbar = Ideal(images + [var], n, I.field)
    # S/(images, x1) is Artinian of length e exactly when the forms
    # f* are a standard basis and x1 is regular on S/I*
    length = 0
    d = 0
    while True:
        h = quotient_hilbert_function(Jbar, None, d)
        if h == 0:
            break
        length += h
        d += 1
        if length > e:
            return False
    return length == e


# ---------------------------------------------------------- bound report


@dataclass
class BoundEntry:
    name: str
    statement: str
    status: str  # satisfied | violated | not-applicable

    def as_dict(self):
        return {"name": self.name, "statement": self.statement, "status": self.status}


def multiplicity_bound_report(H, field: Field = GF) -> list[BoundEntry]:
    gens = generator_list(H)
    S = semigroup_of(gens)
    n, e = len(gens), S.multiplicity
    out: list[BoundEntry] = []
    quad = is_quadratic(gens, field)
    na = "not-applicable"
    if not quad or n < 2:
        for name, st in [("bounds", "n <= e <= 2^(n-1)"),
                         ("minimal_multiplicity", "e = n: linear resolution branch"),
                         ("ci_top", "e = 2^(n-1) iff I* is CI"),
                         ("forbidden", "CM, I* not CI: e <= 2^(n-1) - 2^(n-3)")]:
            out.append(BoundEntry(name, st, na))
        return out
    ok = n <= e <= 2 ** (n - 1)
    out.append(BoundEntry("bounds", "n <= e <= 2^(n-1)", "satisfied" if ok else "violated"))
    if not ok:
        raise OracleMismatch(f"{S}: quadratic with e = {e} outside [{n}, {2 ** (n - 1)}]")
    out.append(BoundEntry("minimal_multiplicity", "e = n: linear resolution branch",
                          "satisfied" if e == n else na))
    ci_star = classify_CI_star(gens, field)
    top = e == 2 ** (n - 1)
    if top != (ci_star == "CI"):
        raise OracleMismatch(f"{S}: e = 2^(n-1) is {top} but I* CI is {ci_star == 'CI'}")
    out.append(BoundEntry("ci_top", "e = 2^(n-1) iff I* is CI", "satisfied"))
    if n >= 3 and ci_star != "CI" and is_tangent_cone_CM(gens, field):
        ok = e <= 2 ** (n - 1) - 2 ** (n - 3)
        out.append(BoundEntry("forbidden", "CM, I* not CI: e <= 2^(n-1) - 2^(n-3)",
                              "satisfied" if ok else "violated"))
        if not ok:
            raise OracleMismatch(f"{S}: forbidden multiplicity {e}")
    else:
        out.append(BoundEntry("forbidden", "CM, I* not CI: e <= 2^(n-1) - 2^(n-3)", na))
    return out
