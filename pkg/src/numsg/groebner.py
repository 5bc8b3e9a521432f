"""Buchberger's algorithm, normal forms, ideals and Hilbert functions.

The engine works on raw ``{monomial: coeff}`` dicts; ``Polynomial`` and
``Ideal`` wrap it.  Pair selection follows the normal strategy (smallest
lcm first) with the Gebauer-Moller update, which covers both Buchberger
criteria.  Ties are broken by the term order and then by insertion index,
so every result is deterministic.
"""

from __future__ import annotations

import heapq
import threading
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .errors import NonHomogeneousInput
from .poly import (
    GF,
    Field,
    Monomial,
    Polynomial,
    TermOrder,
    block,
    coprime,
    degrevlex,
    lex,
    mdiv,
    mdivides,
    mlcm,
    weighted,
)


# ------------------------------------------------------------- kernel


def _lead(terms: dict, order: TermOrder) -> Monomial:
    return max(terms, key=order.key)


def _reduce(terms: dict, basis: list, order: TermOrder, F: Field, full: bool = True) -> dict:
    """Remainder of ``terms`` on division by ``basis``.

    ``basis`` holds ``(lm, lc_inv, terms)`` triples.  With ``full=False``
    only the leading term is reduced (top reduction).
    """
    p = dict(terms)
    rem: dict = {}
    key = order.key
    add, mul = F.add, F.mul
    while p:
        m = max(p, key=key)
        c = p[m]
        for lm, lc_inv, g in basis:
            if all(y <= x for x, y in zip(m, lm)):
                q = mdiv(m, lm)
                factor = mul(c, lc_inv)
                for gm, gc in g.items():
                    t = tuple(a + b for a, b in zip(gm, q))
                    s = add(p.get(t, 0), -mul(factor, gc))
                    if s:
                        p[t] = s
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
            if not full:
                rem.update(p)
                return rem
    return rem


def _spoly(f: dict, lf: Monomial, g: dict, lg: Monomial, F: Field) -> dict:
    L = mlcm(lf, lg)
    qf, qg = mdiv(L, lf), mdiv(L, lg)
    cf, cg = F.inv(f[lf]), F.inv(g[lg])
    out: dict = {}
    for m, c in f.items():
        t = tuple(a + b for a, b in zip(m, qf))
        out[t] = F.mul(c, cf)
    for m, c in g.items():
        t = tuple(a + b for a, b in zip(m, qg))
        s = F.sub(out.get(t, 0), F.mul(c, cg))
        if s:
            out[t] = s
        else:
            out.pop(t, None)
    return out


def buchberger_raw(gens: Sequence[dict], order: TermOrder, F: Field) -> list[dict]:
    """Reduced Groebner basis of the ideal spanned by ``gens`` (dicts)."""
    polys: list[dict] = []
    lms: list[Monomial] = []
    G: list[int] = []
    pairs: list = []
    key = order.key

    def basis_triples():
        return [(lms[i], F.inv(polys[i][lms[i]]), polys[i]) for i in G]

    def update(h: int):
        nonlocal G, pairs
        lh = lms[h]
        C = [g for g in G]
        D = []
        while C:
            g = C.pop(0)
            L = mlcm(lh, lms[g])
            if coprime(lh, lms[g]):
                D.append(g)
                continue
            if any(mdivides(mlcm(lh, lms[q]), L) for q in C) or any(mdivides(mlcm(lh, lms[q]), L) for q in D):
                continue
            D.append(g)
        E = [g for g in D if not coprime(lh, lms[g])]
        kept = []
        for item in pairs:
            _, i, j = item
            L = mlcm(lms[i], lms[j])
            if mdivides(lh, L) and mlcm(lms[i], lh) != L and mlcm(lms[j], lh) != L:
                continue
            kept.append(item)
        for g in E:
            i, j = (g, h)
            kept.append((key(mlcm(lms[i], lms[j])), i, j))
        heapq.heapify(kept)
        pairs = kept
        G = [g for g in G if not mdivides(lh, lms[g])] + [h]

    def add(p: dict):
        polys.append(p)
        lms.append(_lead(p, order))
        update(len(polys) - 1)

    start = []
    for g in gens:
        g = {m: c for m, c in g.items() if c}
        if g:
            start.append(g)
    start.sort(key=lambda g: key(_lead(g, order)))
    for g in start:
        r = _reduce(g, basis_triples(), order, F, full=False) if G else g
        if r:
            add(r)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        s = _spoly(polys[i], lms[i], polys[j], lms[j], F)
        if not s:
            continue
        r = _reduce(s, basis_triples(), order, F, full=False)
        if r:
            add(r)

    return _interreduce([polys[i] for i in G], order, F)


def _interreduce(basis: list[dict], order: TermOrder, F: Field) -> list[dict]:
    key = order.key
    items = [(_lead(p, order), p) for p in basis if p]
    items.sort(key=lambda t: key(t[0]))
    minimal = []
    for lm, p in items:
        if not any(mdivides(lm2, lm) for lm2, _ in minimal):
            minimal.append((lm, p))
    out = []
    for idx, (lm, p) in enumerate(minimal):
        others = [(lm2, F.inv(q[lm2]), q) for k, (lm2, q) in enumerate(minimal) if k != idx]
        r = _reduce(p, others, order, F, full=True)
        inv = F.inv(r[lm])
        out.append({m: F.mul(c, inv) for m, c in r.items()})
    out.sort(key=lambda p: key(_lead(p, order)))
    return out


def _spolys_reduce_to_zero(basis: list[dict], order: TermOrder, F: Field) -> bool:
    triples = [(_lead(p, order), None, p) for p in basis]
    triples = [(lm, F.inv(p[lm]), p) for lm, _, p in triples]
    for a in range(len(triples)):
        for b in range(a + 1, len(triples)):
            la, _, pa = triples[a]
            lb, _, pb = triples[b]
            if coprime(la, lb):
                continue
            s = _spoly(pa, la, pb, lb, F)
            if s and _reduce(s, triples, order, F, full=False):
                return False
    return True


# ---------------------------------------------------------- public API


def _as_dicts(polys: Iterable[Polynomial]) -> list[dict]:
    return [p.terms for p in polys]


def buchberger(gens: Sequence[Polynomial], order: TermOrder) -> list[Polynomial]:
    """Reduced Groebner basis, monic, sorted by increasing leading monomial."""
    gens = list(gens)
    if not gens:
        return []
    n, F = gens[0].nvars, gens[0].field
    return [Polynomial(p, n, F, _clean=True) for p in buchberger_raw(_as_dicts(gens), order, F)]


def is_groebner_basis(basis: Sequence[Polynomial], order: TermOrder) -> bool:
    """Buchberger's criterion: every S-pair reduces to zero."""
    basis = [b for b in basis if b]
    if not basis:
        return True
    return _spolys_reduce_to_zero(_as_dicts(basis), order, basis[0].field)


def normal_form(f: Polynomial, basis: Sequence[Polynomial], order: TermOrder) -> Polynomial:
    F = f.field
    triples = []
    for g in basis:
        if g:
            lm = g.leading_monomial(order)
            triples.append((lm, F.inv(g.terms[lm]), g.terms))
    return Polynomial(_reduce(f.terms, triples, order, F), f.nvars, F, _clean=True)


class Ideal:
    """Generators plus memoized reduced Groebner bases and Hilbert data.

    ``weights`` optionally records a positive grading (for toric ideals
    the semigroup degree of each variable) under which every generator
    is homogeneous.
    """

    def __init__(self, gens: Iterable[Polynomial], nvars: int | None = None,
                 field: Field | None = None, weights: Sequence[int] | None = None):
        gens = [g for g in gens]
        if nvars is None:
            if not gens:
                raise ValueError("nvars needed for an empty generator list")
            nvars = gens[0].nvars
        self.nvars = nvars
        self.field = field or (gens[0].field if gens else GF)
        self.gens: list[Polynomial] = [g for g in gens if g]
        self.weights = tuple(weights) if weights is not None else None
        self._gb: dict = {}
        self._hilb: dict = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return "Ideal(" + ", ".join(map(str, self.gens)) + ")"

    def __reduce__(self):
        return (Ideal, (self.gens, self.nvars, self.field, self.weights))

    def default_order(self) -> TermOrder:
        return degrevlex(self.nvars)

    def gb(self, order: TermOrder | None = None) -> list[Polynomial]:
        order = order or self.default_order()
        with self._lock:
            cached = self._gb.get(order)
        if cached is None:
            cached = buchberger(self.gens, order)
            with self._lock:
                self._gb[order] = cached
        return cached

    def seed_gb(self, order: TermOrder, basis: list[Polynomial]):
        """Record an already reduced Groebner basis for ``order``."""
        with self._lock:
            self._gb[order] = list(basis)

    def is_zero(self) -> bool:
        return not self.gens

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        return all(g.is_homogeneous(weights) for g in self.gens)

    def normal_form(self, f: Polynomial, order: TermOrder | None = None) -> Polynomial:
        order = order or self.default_order()
        return normal_form(f, self.gb(order), order)

    def contains(self, f: Polynomial) -> bool:
        return f.is_zero() or self.normal_form(f).is_zero()

    def __contains__(self, f: Polynomial) -> bool:
        return self.contains(f)

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return ideal_equal(self, other)

    __hash__ = object.__hash__

    def leading_monomials(self, order: TermOrder | None = None) -> list[Monomial]:
        order = order or self.default_order()
        return [g.leading_monomial(order) for g in self.gb(order)]

    def hilbert_numerator(self) -> tuple[int, ...]:
        if not self.is_homogeneous():
            raise NonHomogeneousInput("Hilbert function needs a homogeneous ideal")
        return hilbert_numerator(self.leading_monomials(), self.nvars)

    def hilbert_function(self, d: int) -> int:
        with self._lock:
            if d in self._hilb:
                return self._hilb[d]
        value = hilbert_from_numerator(self.hilbert_numerator(), self.nvars, d)
        with self._lock:
            self._hilb[d] = value
        return value

    def hilbert_series_multiplicity(self) -> tuple[int, int]:
        """(Krull dimension, multiplicity) read off the Hilbert series."""
        return dimension_and_degree(self.hilbert_numerator(), self.nvars)


def ideal_membership(f: Polynomial, I: Ideal) -> bool:
    return I.contains(f)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    if I.nvars != J.nvars:
        return False
    return I.contains_ideal(J) and J.contains_ideal(I)


# --------------------------------------------------------- elimination


def eliminate(I: Ideal, drop: Sequence[int], weights: Sequence[int] | None = None) -> Ideal:
    """Generators of I intersected with the subring on the kept variables.

    The result lives in the smaller ring; kept variables keep their
    relative order.  When ``weights`` is given and every generator is
    homogeneous for it, the elimination order is the weighted degree
    refined by lex on the dropped variables; otherwise the plain block
    order lex(drop) >> degrevlex(rest) is used.
    """
    drop = list(drop)
    keep = [v for v in range(I.nvars) if v not in drop]
    if not drop:
        return Ideal(list(I.gens), I.nvars, I.field, I.weights)
    if not keep:
        return Ideal([], 0, I.field)
    first = lex(I.nvars, drop)
    rest = degrevlex(I.nvars, keep)
    if weights is not None and I.is_homogeneous(weights):
        order = weighted(weights, block(first, rest))
    else:
        order = block(first, rest)
    basis = I.gb(order)
    out = []
    for g in basis:
        if all(all(m[v] == 0 for v in drop) for m in g.terms):
            out.append(Polynomial({tuple(m[v] for v in keep): c for m, c in g.terms.items()},
                                  len(keep), I.field, _clean=True))
    new_weights = None
    if I.weights is not None:
        new_weights = [I.weights[v] for v in keep]
    return Ideal(out, len(keep), I.field, new_weights)


def ideal_quotient_by_variable(I: Ideal, i: int) -> Ideal:
    """(I : x_i)."""
    n = I.nvars
    if I.is_zero():
        return Ideal([], n, I.field, I.weights)
    if I.is_homogeneous():
        # revlex with x_i last: in(I : x_i) = in(I) : x_i
        rank = [v for v in range(n) if v != i] + [i]
        order = degrevlex(n, rank)
        out = []
        for g in I.gb(order):
            if all(m[i] >= 1 for m in g.terms):
                g = Polynomial({m[:i] + (m[i] - 1,) + m[i + 1:]: c for m, c in g.terms.items()},
                               n, I.field, _clean=True)
            out.append(g)
        return Ideal(out, n, I.field, I.weights)
    # general case: I : x_i = (I intersect (x_i)) / x_i
    t = n
    F = I.field
    big = []
    for g in I.gens:
        big.append(g.embed(n + 1).mul_term(tuple(1 if v == t else 0 for v in range(n + 1))))
    xi = Polynomial.var(i, n + 1, F)
    tx = xi.mul_term(tuple(1 if v == t else 0 for v in range(n + 1)))
    big.append(xi - tx)
    inter = eliminate(Ideal(big, n + 1, F), [t])
    out = [Polynomial({m[:i] + (m[i] - 1,) + m[i + 1:]: c for m, c in g.terms.items()}, n, F, _clean=True)
           for g in inter.gens]
    return Ideal(out, n, F, I.weights)


def saturate_by_variable(I: Ideal, i: int, order: TermOrder) -> list[Polynomial]:
    """Groebner basis of (I : x_i^infinity) for I homogeneous w.r.t. a
    positive grading and ``order`` a revlex-type order with x_i as the
    cheapest variable inside each degree (Bayer-Stillman)."""
    out = []
    for g in I.gb(order):
        k = min(m[i] for m in g.terms)
        if k:
            g = Polynomial({m[:i] + (m[i] - k,) + m[i + 1:]: c for m, c in g.terms.items()},
                           g.nvars, g.field, _clean=True)
        out.append(g)
    return out


# ------------------------------------------------------ Hilbert series


def _minimalize_monos(monos: Iterable[Monomial]) -> tuple[Monomial, ...]:
    ms = sorted(set(monos), key=lambda m: (sum(m), m))
    out: list[Monomial] = []
    for m in ms:
        if not any(mdivides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def _poly_sub(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@lru_cache(maxsize=200_000)
def _numerator(gens: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not gens:
        return (1,)
    if len(gens) == 1 or all(coprime(a, b) for k, a in enumerate(gens) for b in gens[k + 1:]):
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return tuple(out)
    n = len(gens[0])
    counts = [sum(1 for g in gens if g[v] > 0) for v in range(n)]
    v = max(range(n), key=lambda u: (counts[u], -u))
    k = min(g[v] for g in gens if g[v] > 0)
    pivot = tuple(k if u == v else 0 for u in range(n))
    # N(M) = N(M + (p)) + t^k N(M : p)
    plus = _minimalize_monos([g for g in gens if g[v] < k] + [pivot])
    colon = _minimalize_monos([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens])
    left = list(_numerator(plus))
    right = [0] * k + list(_numerator(colon))
    n_out = max(len(left), len(right))
    res = [(left[i] if i < len(left) else 0) + (right[i] if i < len(right) else 0) for i in range(n_out)]
    while len(res) > 1 and res[-1] == 0:
        res.pop()
    return tuple(res)


def hilbert_numerator(monos: Iterable[Monomial], nvars: int) -> tuple[int, ...]:
    """Numerator N(t) with HS(S/M) = N(t) / (1-t)^nvars."""
    gens = _minimalize_monos(monos)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    return _numerator(gens)


def hilbert_from_numerator(num: Sequence[int], nvars: int, d: int) -> int:
    if d < 0:
        return 0
    if nvars == 0:
        return num[d] if d < len(num) else 0
    return sum(c * comb(d - k + nvars - 1, nvars - 1) for k, c in enumerate(num) if k <= d)


def monomial_hilbert_function(monos: Iterable[Monomial], nvars: int, d: int) -> int:
    return hilbert_from_numerator(hilbert_numerator(monos, nvars), nvars, d)


def dimension_and_degree(num: Sequence[int], nvars: int) -> tuple[int, int]:
    """Reduce N(t)/(1-t)^n to Q(t)/(1-t)^dim with Q(1) != 0."""
    q = list(num)
    dim = nvars
    while dim > 0 and sum(q) == 0 and any(q):
        # divide by (1 - t)
        out = []
        acc = 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out or [0]
        dim -= 1
    return dim, sum(q)


def quotient_hilbert_function(I: Ideal, order: TermOrder | None, d: int) -> int:
    """dim_K (S/I)_d computed from the initial ideal of a homogeneous I."""
    if not I.is_homogeneous():
        raise NonHomogeneousInput("quotient_hilbert_function needs a homogeneous ideal")
    order = order or I.default_order()
    lms = [g.leading_monomial(order) for g in I.gb(order)]
    return monomial_hilbert_function(lms, I.nvars, d)


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of total degree d in n variables (lex descending)."""
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest
