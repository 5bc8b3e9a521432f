"""Koszul verdicts for semigroup tangent cones.

A verdict is only ever KoszulCertified with a certificate (a quadric
Groebner basis order, a chain of quadratic gluings, or the zero ideal),
and only ever NotKoszul with a nonzero off-diagonal Betti number.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import OracleMismatch
from .gluing import quadratic_decomposition
from .homology import DEFAULT_BAND, DEFAULT_MAX_I, betti_table_over_quotient
from .poly import GF, Field
from .tangent_cone import PERM_LIMIT, initial_ideal, is_G_quadratic_permutation_search, minimal_generators_degrees
from .toric import generator_list

CERTIFIED = "KoszulCertified"
NOT_KOSZUL = "NotKoszul"
UNDECIDED = "UndecidedUpTo"


@dataclass
class KoszulVerdict:
    status: str
    witness: tuple[int, int] | None = None
    cutoff: int | None = None
    certificate: dict = dc_field(default_factory=dict)
    field: int = GF.p
    band: int = DEFAULT_BAND

    def label(self) -> str:
        if self.status == NOT_KOSZUL:
            i, j = self.witness
            return f"NotKoszul(beta_{i},{j}={self.certificate.get('value')})"
        if self.status == UNDECIDED:
            return f"UndecidedUpTo({self.cutoff})"
        return f"KoszulCertified({self.certificate.get('kind')})"

    def as_dict(self) -> dict:
        return {
            "status": self.status,
            "witness": list(self.witness) if self.witness else None,
            "cutoff": self.cutoff,
            "certificate": self.certificate,
            "field": self.field,
            "band": self.band,
        }


def koszul_verdict(H, max_i: int = DEFAULT_MAX_I, band: int = DEFAULT_BAND, field: Field = GF,
                   perm_limit: int = PERM_LIMIT, use_gluing: bool = True) -> KoszulVerdict:
    gens = generator_list(H)
    n = len(gens)
    base = dict(field=field.p, band=band)
    if n == 1:
        return KoszulVerdict(CERTIFIED, certificate={"kind": "zero-ideal"}, **base)
    Istar = initial_ideal(gens, field)
    degs = minimal_generators_degrees(Istar)
    # (1) a minimal generator of degree d > 2 shows up as beta_{2,d}
    if any(d != 2 for d in degs):
        d = min(x for x in degs if x != 2)
        b = max(band, d - 2)
        tab = betti_table_over_quotient(Istar, 2, b, field)
        v = tab.get(2, d)
        if v != degs.count(d):
            raise OracleMismatch(f"beta_2,{d} = {v} but I* has {degs.count(d)} minimal generators of degree {d}")
        return KoszulVerdict(NOT_KOSZUL, (2, d), 2, {"kind": "betti", "value": v}, field.p, b)
    # (2) quadric Groebner basis after permuting variables
    if n <= perm_limit:
        order = is_G_quadratic_permutation_search(gens, field, limit=perm_limit)
        if order is not None:
            return KoszulVerdict(CERTIFIED, certificate={"kind": "groebner", "order": order.name}, **base)
    # (3) H = <2L, l>: Koszul iff L is
    if use_gluing:
        dec = quadratic_decomposition(gens)
        if dec is not None:
            L, l = dec
            sub = koszul_verdict(L, max_i, band, field, perm_limit, use_gluing)
            if sub.status == CERTIFIED:
                cert = {"kind": "gluing", "L": L, "l": l, "sub": sub.certificate}
                return KoszulVerdict(CERTIFIED, certificate=cert, **base)
    # (4) Betti numbers
    tab = betti_table_over_quotient(Istar, max_i, band, field)
    w = tab.first_off_diagonal()
    if w is not None:
        return KoszulVerdict(NOT_KOSZUL, w, max_i, {"kind": "betti", "value": tab.entries[w]}, field.p, band)
    return KoszulVerdict(UNDECIDED, None, max_i, {"kind": "betti-linear-through", "max_i": max_i}, field.p, band)
