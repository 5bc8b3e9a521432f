"""Gluings of numerical semigroups.

Variable convention for a simple gluing H = <cL, l>: the generators of L
keep their order and l becomes the last variable.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import gcd
from typing import Sequence

from .errors import HypothesisFailed, IllegalParameters, IsGenerator, NotCoprime, NotInSemigroup, OracleMismatch
from .groebner import Ideal, ideal_equal
from .poly import GF, Field, Polynomial
from .semigroup import from_generators
from .tangent_cone import initial_ideal, is_quadratic
from .toric import generator_list, toric_ideal


# ------------------------------------------------------------------ trees


@dataclass(frozen=True)
class GluingTree:
    """kind is 'N', 'atomic', 'simple' or 'pair'."""

    kind: str
    gens: tuple[int, ...]
    children: tuple["GluingTree", ...] = ()
    c: tuple[int, ...] = ()
    l: int | None = None

    @classmethod
    def leaf_N(cls) -> "GluingTree":
        return cls("N", (1,))

    @classmethod
    def atomic(cls, gens: Sequence[int]) -> "GluingTree":
        return cls("atomic", tuple(gens))

    def compose(self) -> tuple[int, ...]:
        """Generators obtained by evaluating the tree, in variable order."""
        if self.kind in ("N", "atomic"):
            return self.gens
        if self.kind == "simple":
            (child,), (c,) = self.children, self.c
            return tuple(c * a for a in child.compose()) + (self.l,)
        (h1, h2), (c1, c2) = self.children, self.c
        return tuple(c1 * a for a in h1.compose()) + tuple(c2 * a for a in h2.compose())

    def depth(self) -> int:
        return 1 + max((ch.depth() for ch in self.children), default=0)

    def as_dict(self) -> dict:
        out: dict = {"kind": self.kind, "generators": list(self.gens)}
        if self.kind == "simple":
            out.update(c=self.c[0], l=self.l, child=self.children[0].as_dict())
        elif self.kind == "pair":
            out.update(c1=self.c[0], c2=self.c[1],
                       left=self.children[0].as_dict(), right=self.children[1].as_dict())
        return out


# ------------------------------------------------------------ constructors


def _check_glue(L: Sequence[int], c: int, l: int):
    if c <= 1:
        raise IllegalParameters(f"gluing factor c = {c} must exceed 1")
    if gcd(c, l) != 1:
        raise NotCoprime(f"gcd({c}, {l}) != 1")
    S = from_generators(list(L))
    if l not in S:
        raise NotInSemigroup(f"{l} is not in {S!r}")
    if l in S.generators:
        raise IsGenerator(f"{l} is a minimal generator of {S!r}")


def simple_glue(L, c: int, l: int) -> tuple[int, ...]:
    """Generators of <cL, l> in variable order (c*G(L) then l)."""
    gens = generator_list(L)
    _check_glue(gens, c, l)
    out = tuple(c * a for a in gens) + (l,)
    if len(from_generators(list(out)).generators) != len(out):
        raise OracleMismatch(f"gluing {out} lost a generator")
    return out


def quadratic_glue(L, l: int) -> tuple[int, ...]:
    if l % 2 == 0:
        raise NotCoprime(f"quadratic gluing needs an odd l, got {l}")
    return simple_glue(L, 2, l)


def ord_in(L, l: int) -> int:
    gens = generator_list(L)
    return from_generators(gens).order_of(l)


def gluing_relation(L, c: int, l: int, field: Field = GF) -> Polynomial:
    """f = x_n^c - x^lambda with lambda a maximal-length factorization of
    l in L (lexicographically greatest among those)."""
    gens = generator_list(L)
    _check_glue(gens, c, l)
    lam = from_generators(gens).order_witness(l, gens)
    n = len(gens) + 1
    return Polynomial({(0,) * (n - 1) + (c,): 1, tuple(lam) + (0,): -1}, n, field)


def tangent_cone_of_gluing(L, c: int, l: int, field: Field = GF, fallback: bool = False) -> Ideal:
    """(I_L* S, f*) when c <= ord_L(l), checked against the direct route.

    Outside the hypothesis there is no formula: HypothesisFailed is raised,
    or with ``fallback`` the direct computation is returned with a warning.
    """
    gens = generator_list(L)
    H = simple_glue(gens, c, l)
    o = ord_in(gens, l)
    direct = initial_ideal(H, field)
    if c > o:
        if fallback:
            warnings.warn(f"c = {c} > ord_L({l}) = {o}: using the direct computation", stacklevel=2)
            return direct
        raise HypothesisFailed(f"c = {c} > ord_L({l}) = {o}")
    n = len(H)
    IL = initial_ideal(gens, field)
    lifted = [g.embed(n) for g in IL.gens]
    fstar = gluing_relation(gens, c, l, field).initial_form()
    formula = Ideal(lifted + [fstar], n, field, H)
    if not ideal_equal(formula, direct):
        raise OracleMismatch(f"I_H* != (I_L* S, f*) for H = <{c}L, {l}>, L = {gens}")
    return formula


def toric_ideal_of_gluing(L, c: int, l: int, field: Field = GF) -> Ideal:
    """(I_L S, f); equal to I_H for every legal gluing."""
    gens = generator_list(L)
    H = simple_glue(gens, c, l)
    n = len(H)
    IL = toric_ideal(gens, field)
    return Ideal([g.embed(n) for g in IL.gens] + [gluing_relation(gens, c, l, field)], n, field, H)


# ------------------------------------------------------------- Delorme


@lru_cache(maxsize=4096)
def _delorme(gens: tuple[int, ...]) -> GluingTree | None:
    n = len(gens)
    if n == 1:
        return GluingTree.leaf_N() if gens == (1,) else None
    first, rest = gens[0], gens[1:]
    for size in range(0, n - 1):
        for extra in combinations(rest, size):
            A = (first,) + extra
            B = tuple(g for g in rest if g not in extra)
            c1, c2 = gcd(*A), gcd(*B)
            if gcd(c1, c2) != 1:
                continue
            H1 = tuple(a // c1 for a in A)
            H2 = tuple(b // c2 for b in B)
            S1, S2 = from_generators(list(H1)), from_generators(list(H2))
            if c1 not in S2 or c1 in S2.generators or c2 not in S1 or c2 in S1.generators:
                continue
            t1 = _delorme(tuple(S1.generators))
            if t1 is None:
                continue
            t2 = _delorme(tuple(S2.generators))
            if t2 is None:
                continue
            return _normalize(gens, t1, t2, c1, c2)
    return None


def _normalize(gens, t1: GluingTree, t2: GluingTree, c1: int, c2: int) -> GluingTree:
    if t1.kind == "N" and t2.kind == "N":
        c, l = min(c1, c2), max(c1, c2)
        return GluingTree("simple", gens, (t1,), (c,), l)
    if t1.kind == "N":
        return GluingTree("simple", gens, (t2,), (c2,), c1)
    if t2.kind == "N":
        return GluingTree("simple", gens, (t1,), (c1,), c2)
    return GluingTree("pair", gens, (t1, t2), (c1, c2))


def delorme_decompose(H) -> GluingTree | None:
    """A gluing tree down to copies of N, or None when K[H] is not a
    complete intersection."""
    gens = tuple(sorted(generator_list(H)))
    return _delorme(gens)


# ------------------------------------------------------ quadratic chains


def _is_glue_base(L: list[int], l: int) -> bool:
    """L minimally generates a numerical semigroup containing l, and l is
    not one of its generators."""
    if gcd(*L) != 1:
        return False
    S = from_generators(L)
    return sorted(S.generators) == sorted(L) and l in S and l not in S.generators


def peel_quadratic_gluings(H) -> list[int] | None:
    """Undo quadratic gluings: the unique odd generator is l, halving the
    rest gives L, and l must lie in L but not in G(L).  Returns
    (l_1, ..., l_{n-1}) from N upwards, or None when some step fails."""
    gens = sorted(generator_list(H))
    chain: list[int] = []
    while gens != [1]:
        odd = [a for a in gens if a % 2]
        if len(odd) != 1:
            return None
        l = odd[0]
        L = [a // 2 for a in gens if a != l]
        if not _is_glue_base(L, l):
            return None
        chain.append(l)
        gens = sorted(L)
    return chain[::-1]


def quadratic_gluing_chain(H, field: Field = GF) -> tuple[list[int] | None, str]:
    gens = generator_list(H)
    if not is_quadratic(gens, field):
        return None, "not quadratic"
    if delorme_decompose(gens) is None:
        return None, "not a complete intersection"
    chain = peel_quadratic_gluings(gens)
    if chain is None:
        raise OracleMismatch(f"{gens} is a quadratic complete intersection but does not peel")
    return chain, "ok"


def compose_chain(chain: Sequence[int]) -> tuple[int, ...]:
    gens: tuple[int, ...] = (1,)
    for l in chain:
        gens = tuple(2 * a for a in gens) + (l,)
    return tuple(sorted(gens))


def chain_tree(chain: Sequence[int]) -> GluingTree:
    tree = GluingTree.leaf_N()
    for l in chain:
        composed = tuple(sorted(tuple(2 * a for a in tree.gens) + (l,)))
        tree = GluingTree("simple", composed, (tree,), (2,), l)
    return tree


def quadratic_decomposition(H) -> tuple[list[int], int] | None:
    """One step: H = <2L, l> with l odd, l in L minus G(L).  Returns (L, l)."""
    gens = sorted(generator_list(H))
    odd = [a for a in gens if a % 2]
    if len(odd) != 1 or len(gens) < 2:
        return None
    l = odd[0]
    L = [a // 2 for a in gens if a != l]
    if not _is_glue_base(L, l):
        return None
    return sorted(L), l


# ----------------------------------------------------------- transfer


@dataclass
class TransferReport:
    L: tuple[int, ...]
    l: int
    H: tuple[int, ...]
    claims: dict = dc_field(default_factory=dict)
    direct: dict = dc_field(default_factory=dict)
    violations: list = dc_field(default_factory=list)

    def as_dict(self) -> dict:
        return {"L": list(self.L), "l": self.l, "H": list(self.H), "claims": self.claims,
                "direct": self.direct, "violations": self.violations}


def transfer_predicates(L, l: int, field: Field = GF, koszul: bool = True, max_i: int = 4) -> TransferReport:
    """Properties of L, the claims they imply for H = <2L, l>, and the
    same properties computed on H directly."""
    from .koszul import koszul_verdict
    from .tangent_cone import classify_CI_star

    gens = generator_list(L)
    H = quadratic_glue(gens, l)
    rep = TransferReport(tuple(gens), l, H)
    quadL = is_quadratic(gens, field)
    ciL = delorme_decompose(gens) is not None
    rep.claims["quadratic"] = quadL
    rep.direct["quadratic"] = is_quadratic(H, field)
    if quadL:
        rep.claims["complete_intersection"] = ciL
        rep.direct["complete_intersection"] = delorme_decompose(H) is not None
        starL = classify_CI_star(gens, field) if len(gens) > 1 else "CI"
        rep.direct["ci_star"] = classify_CI_star(H, field)
        if starL == "almostCI":
            rep.claims["ci_star"] = "almostCI"
        elif starL == "CI":
            rep.claims["ci_star"] = "CI"
        eL = from_generators(gens).multiplicity
        rep.claims["multiplicity"] = 2 * eL
        rep.direct["multiplicity"] = min(H)
        if not 2 * eL < l:
            rep.violations.append(f"e(H) = 2e(L) = {2 * eL} is not < l = {l}")
    if koszul:
        vL = koszul_verdict(gens, max_i=max_i, field=field)
        vH = koszul_verdict(H, max_i=max_i, field=field, use_gluing=False)
        rep.claims["koszul"] = vL.status
        rep.direct["koszul"] = vH.status
        decided = {"KoszulCertified", "NotKoszul"}
        if vL.status in decided and vH.status in decided and vL.status != vH.status:
            rep.violations.append(f"koszul: L {vL.status}, H {vH.status}")
    for key, want in rep.claims.items():
        if key == "koszul":
            continue
        if rep.direct.get(key) != want:
            rep.violations.append(f"{key}: claimed {want}, direct {rep.direct.get(key)}")
    return rep
