"""Corpus experiments for two open questions.  They log candidates and
never assert anything.

ci_star: among H with e(H) = 2^(n-1) and I_H a complete intersection,
    is I_H* always a complete intersection as well?
forbidden_aci: among quadratic H whose tangent cone is *not* CM and
    whose I_H* is not a complete intersection, does
    e(H) <= 2^(n-1) - 2^(n-3) still hold, and at equality is I_H* an
    almost complete intersection with a degrevlex quadric basis?
"""

from __future__ import annotations

from typing import Iterable

from .gluing import delorme_decompose
from .poly import GF, Field, degrevlex
from .semigroup import enumerate_semigroups
from .tangent_cone import classify_CI_star, initial_ideal, is_quadratic, is_tangent_cone_CM, quadratic_gb

EXPERIMENTS = ("ci-star", "forbidden-aci")


def corpus(max_embdim: int, max_gen: int, min_embdim: int = 2) -> Iterable[tuple[int, ...]]:
    for n in range(min_embdim, max_embdim + 1):
        yield from enumerate_semigroups(n, max_gen)


def ci_star(semigroups: Iterable[tuple[int, ...]], field: Field = GF) -> dict:
    examined, rows = 0, []
    for g in semigroups:
        n = len(g)
        if n < 2 or g[0] != 2 ** (n - 1) or delorme_decompose(g) is None:
            continue
        examined += 1
        star = classify_CI_star(g, field)
        if star != "CI":
            rows.append({"generators": list(g), "ci_star": star, "quadratic": is_quadratic(g, field)})
    return {"experiment": "ci-star", "examined": examined, "candidates": rows}


def forbidden_aci(semigroups: Iterable[tuple[int, ...]], field: Field = GF) -> dict:
    examined, rows = 0, []
    for g in semigroups:
        n = len(g)
        if n < 3 or not is_quadratic(g, field):
            continue
        star = classify_CI_star(g, field)
        if star == "CI" or is_tangent_cone_CM(g, field):
            continue
        examined += 1
        e, bound = g[0], 2 ** (n - 1) - 2 ** (n - 3)
        reasons = []
        if e > bound and e != 2 ** (n - 1):
            reasons.append("multiplicity above bound")
        if e == bound:
            if star != "almostCI":
                reasons.append("equality but not almost CI")
            if not quadratic_gb(initial_ideal(g, field), degrevlex(n, list(range(n - 1, -1, -1)))):
                reasons.append("equality but no degrevlex quadric basis")
        if reasons:
            rows.append({"generators": list(g), "e": e, "ci_star": star, "reasons": reasons})
    return {"experiment": "forbidden-aci", "examined": examined, "candidates": rows}


def run_experiment(name: str, max_embdim: int, max_gen: int, field: Field = GF) -> dict:
    if name not in EXPERIMENTS:
        raise ValueError(f"unknown experiment {name!r}; choose from {', '.join(EXPERIMENTS)}")
    fn = ci_star if name == "ci-star" else forbidden_aci
    out = fn(corpus(max_embdim, max_gen), field)
    out["query"] = {"max_embdim": max_embdim, "max_gen": max_gen}
    return out
