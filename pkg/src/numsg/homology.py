"""Minimal graded free resolutions by degreewise linear algebra.

The ring is R = S/I with I homogeneous; when I is also homogeneous for
the semigroup weights, every graded piece splits further by weight and
the linear algebra runs block by block.  A resolution is truncated at
homological degree ``max_i`` and to internal degrees j <= i + band.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Callable, Sequence

from .errors import BandTooSmall, OracleMismatch
from .groebner import Ideal, _reduce, monomials_of_degree
from .linalg import Echelon
from .poly import DEFAULT_PRIME, GF, Field, degrevlex, mdeg, mdivides, mmul

DEFAULT_MAX_I = 6
DEFAULT_BAND = 2


# ---------------------------------------------------------------- tables


@dataclass
class BettiTable:
    entries: dict
    max_i: int
    band: int
    field: int = DEFAULT_PRIME

    def get(self, i: int, j: int) -> int:
        if j < i or i < 0:
            return 0
        if i > self.max_i or j > i + self.band:
            raise BandTooSmall(f"beta_{i},{j} lies outside i <= {self.max_i}, j <= i + {self.band}")
        return self.entries.get((i, j), 0)

    def __getitem__(self, ij):
        return self.get(*ij)

    def total(self, i: int) -> int:
        return sum(v for (a, _), v in self.entries.items() if a == i)

    def off_diagonal(self) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.entries.items() if v and k[1] != k[0])

    def first_off_diagonal(self) -> tuple[int, int] | None:
        off = self.off_diagonal()
        return off[0] if off else None

    def is_linear(self) -> bool:
        return not self.off_diagonal()

    def render(self) -> str:
        """Macaulay-style layout: columns i, rows j - i."""
        cols = range(self.max_i + 1)
        rows = range(self.band + 1)
        cells = {(r, i): self.entries.get((i, i + r), 0) for r in rows for i in cols}
        head = ["", *[str(i) for i in cols]]
        tot = ["total:", *[str(self.total(i)) for i in cols]]
        body = [[f"{r}:", *[str(cells[r, i]) if cells[r, i] else "." for i in cols]] for r in rows]
        table = [head, tot, *body]
        width = [max(len(row[k]) for row in table) for k in range(len(head))]
        return "\n".join(" ".join(c.rjust(w) for c, w in zip(row, width)).rstrip() for row in table)

    def as_dict(self) -> dict:
        return {
            "max_i": self.max_i,
            "band": self.band,
            "field": self.field,
            "entries": [[i, j, v] for (i, j), v in sorted(self.entries.items()) if v],
        }


# ------------------------------------------------------------------ ring


class GradedQuotient:
    """R = S/I with normal forms of monomial products in R, cached."""

    def __init__(self, I: Ideal | None, nvars: int, weights: Sequence[int] | None, p: int):
        self.n = nvars
        self.p = p
        self.F = Field(p)
        self.weights = tuple(weights) if weights is not None else (0,) * nvars
        self.order = degrevlex(nvars)
        if I is None or I.is_zero():
            self.basis = []
            self.lms = []
        else:
            J = I if I.field.p == p else Ideal([g.with_field(self.F) for g in I.gens], nvars, self.F, I.weights)
            gb = J.gb(self.order)
            self.lms = [g.leading_monomial(self.order) for g in gb]
            self.basis = [(lm, self.F.inv(g.terms[lm]), g.terms) for g, lm in zip(gb, self.lms)]
        self._std: dict = {}
        self._mul: dict = {}

    def weight(self, m) -> int:
        return sum(a * b for a, b in zip(m, self.weights))

    def is_standard(self, m) -> bool:
        return not any(mdivides(lm, m) for lm in self.lms)

    def standard(self, d: int) -> dict:
        """{weight: sorted standard monomials of degree d and that weight}."""
        out = self._std.get(d)
        if out is None:
            out = {}
            for m in monomials_of_degree(self.n, d):
                if self.is_standard(m):
                    out.setdefault(self.weight(m), []).append(m)
            for v in out.values():
                v.sort()
            self._std[d] = out
        return out

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        return sum(len(v) for v in self.standard(d).values())

    def times(self, a, b) -> dict:
        key = (a, b) if a <= b else (b, a)
        out = self._mul.get(key)
        if out is None:
            m = mmul(a, b)
            if self.is_standard(m):
                out = {m: 1}
            else:
                out = _reduce({m: 1}, self.basis, self.order, self.F)
            self._mul[key] = out
        return out


# ------------------------------------------------------------ resolution


@dataclass
class Resolution:
    ring: GradedQuotient
    max_i: int
    band: int
    # gens[i]: list of (degree, weight, image in F_{i-1} coordinates)
    gens: list = dc_field(default_factory=list)

    def betti(self) -> BettiTable:
        entries = {}
        for i, gl in enumerate(self.gens):
            for d, _, _ in gl:
                entries[(i, d)] = entries.get((i, d), 0) + 1
        return BettiTable(entries, self.max_i, self.band, self.ring.p)


def _act(ring: GradedQuotient, m, vec: dict) -> dict:
    """m . vec for vec in free-module coordinates {(gen, std monomial): c}."""
    p = ring.p
    out: dict = {}
    for (g, u), c in vec.items():
        for v, c2 in ring.times(m, u).items():
            key = (g, v)
            s = (out.get(key, 0) + c * c2) % p
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _block_basis(ring: GradedQuotient, gens: list, j: int, w: int):
    """Basis (g, m) of the (j, w) piece of a free module, gens of degree < j
    first excluded: only generators of degree < j are used."""
    out = []
    for g, (d, wt, _) in enumerate(gens):
        if d >= j:
            continue
        for m in ring.standard(j - d).get(w - wt, ()):
            out.append((g, m))
    return out


def _weights_in_degree(ring: GradedQuotient, gens: list, j: int) -> list[int]:
    ws = set()
    for d, wt, _ in gens:
        if d <= j:
            for w in ring.standard(j - d):
                ws.add(w + wt)
    return sorted(ws)


def resolve(ring: GradedQuotient, first_syzygies: Callable[[int, int], list], first_weights: Callable[[int], list],
            max_i: int, band: int) -> Resolution:
    """Minimal resolution of R/J over R.

    ``first_syzygies(j, w)`` spans J_(j,w) inside F_0 = R (vectors keyed by
    (0, monomial)); ``first_weights(j)`` lists the weights where J_j may be
    nonzero.
    """
    n = ring.n
    res = Resolution(ring, max_i, band)
    res.gens.append([(0, 0, None)])
    # Z[(j, w)]: basis of the cycles of the current step
    Z = {}
    for j in range(0, 2 + band):
        for w in first_weights(j):
            Z[(j, w)] = first_syzygies(j, w)
    unit = [tuple(1 if k == v else 0 for k in range(n)) for v in range(n)]
    for i in range(0, max_i):
        new = []
        for j in range(i + 1, i + 2 + band):
            for w in sorted({w for (jj, w) in Z if jj == j}):
                cycles = Z.get((j, w), [])
                if not cycles:
                    continue
                ech = Echelon(ring.p)
                for v, x in enumerate(unit):
                    for z in Z.get((j - 1, w - ring.weights[v]), ()):
                        ech.insert(_act(ring, x, z))
                for z in cycles:
                    if ech.insert(z)[0]:
                        new.append((j, w, z))
        res.gens.append(new)
        if i + 1 == max_i:
            break
        # cycles of d_{i+1} in degrees j <= i + 2 + band
        Z = {}
        for j in range(i + 2, i + 3 + band):
            for w in _weights_in_degree(ring, new, j):
                dom = _block_basis(ring, new, j, w)
                if not dom:
                    continue
                ech = Echelon(ring.p, track=True)
                kern = []
                for idx, (g, m) in enumerate(dom):
                    img = _act(ring, m, new[g][2])
                    independent, combo = ech.insert(img, label=idx)
                    if not independent:
                        kern.append({dom[k]: c for k, c in combo.items()})
                if kern:
                    Z[(j, w)] = kern
    return res


# ------------------------------------------------------------ front ends


def _ring_for(Istar: Ideal, field: Field, weights) -> GradedQuotient:
    if not field.p:
        raise ValueError("resolutions are computed over prime fields only")
    w = weights
    if w is None and Istar.weights is not None and all(g.is_homogeneous(Istar.weights) for g in Istar.gens):
        w = Istar.weights
    return GradedQuotient(Istar, Istar.nvars, w, field.p)


def resolve_residue_field(Istar: Ideal, max_i: int = DEFAULT_MAX_I, band: int = DEFAULT_BAND,
                          field: Field = GF, weights: Sequence[int] | None = None) -> Resolution:
    ring = _ring_for(Istar, field, weights)

    def pieces(j, w):
        if j == 0:
            return []
        return [{(0, m): 1} for m in ring.standard(j).get(w, ())]

    def ws(j):
        return sorted(ring.standard(j)) if j > 0 else []

    res = resolve(ring, pieces, ws, max_i, band)
    _euler_check(res, lambda d: 1 if d == 0 else 0, complete_first=True)
    return res


def betti_table_over_quotient(Istar: Ideal, max_i: int = DEFAULT_MAX_I, band: int = DEFAULT_BAND,
                              field: Field = GF, weights: Sequence[int] | None = None) -> BettiTable:
    """Graded Betti numbers of K over S/Istar."""
    return resolve_residue_field(Istar, max_i, band, field, weights).betti()


def ambient_resolution(Istar: Ideal, band: int | None = None, field: Field = GF,
                       weights: Sequence[int] | None = None) -> Resolution:
    """Resolution of S/Istar over S (finite, length <= nvars)."""
    n = Istar.nvars
    F = Field(field.p)
    w = weights
    if w is None and Istar.weights is not None and all(g.is_homogeneous(Istar.weights) for g in Istar.gens):
        w = Istar.weights
    ring = GradedQuotient(None, n, w, F.p)
    J = Istar if Istar.field.p == F.p else Ideal([g.with_field(F) for g in Istar.gens], n, F, Istar.weights)
    order = degrevlex(n)
    gb = J.gb(order)
    lms = [g.leading_monomial(order) for g in gb]
    triples = [(lm, F.inv(g.terms[lm]), g.terms) for g, lm in zip(gb, lms)]
    if band is None:
        band = 2 * max((mdeg(m) for m in lms), default=1)

    def pieces(j, wt):
        out = []
        for m in ring.standard(j).get(wt, ()):
            if any(mdivides(lm, m) for lm in lms):
                nf = _reduce({m: 1}, triples, order, F)
                vec = {(0, m): 1}
                for u, c in nf.items():
                    vec[(0, u)] = (vec.get((0, u), 0) - c) % F.p
                out.append(vec)
        return out

    def ws(j):
        return sorted(ring.standard(j))

    res = resolve(ring, pieces, ws, n, band)

    def target(d):
        return sum(1 for m in monomials_of_degree(n, d) if not any(mdivides(lm, m) for lm in lms))

    _euler_check(res, target, complete_first=False)
    return res


def _euler_check(res: Resolution, target: Callable[[int], int], complete_first: bool):
    """sum_i (-1)^i sum_j beta_ij dim R_{d-j} = dim (R/J)_d where every
    contributing beta is inside the computed range."""
    ring = res.ring
    table = res.betti()
    top = res.band + (2 if complete_first else 1)
    top = min(top, res.max_i)
    for d in range(top + 1):
        total = 0
        for (i, j), b in table.entries.items():
            if j <= d:
                total += (-1) ** i * b * ring.dim(d - j)
        if total != target(d):
            raise OracleMismatch(f"Euler characteristic fails in degree {d}: {total} != {target(d)}")


def is_gorenstein_quotient(Istar: Ideal, field: Field = GF) -> bool:
    """Last total Betti number of S/Istar over S equals 1.  This means
    Gorenstein only for Cohen-Macaulay quotients; callers test CM first."""
    res = ambient_resolution(Istar, field=field)
    tab = res.betti()
    last = max((i for (i, _), v in tab.entries.items() if v), default=0)
    return tab.total(last) == 1


def koszul_complex_ranks(n: int, max_i: int) -> dict:
    return {(i, i): comb(n, i) for i in range(min(n, max_i) + 1)}
