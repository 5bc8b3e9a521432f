"""Command line front end.

    numsg analyze 12 14 15 16 18 19 --max-i 5
    numsg glue 4 6 7 9 --c 3 --l 10
    numsg family compound --a 2,2,2 --b 3,5,7
    numsg search --embdim 4 --max-gen 30 --quadratic
    numsg experiment forbidden-aci --max-embdim 5 --max-gen 26

Exit codes: 0 ok, 2 invalid input, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from collections import Counter
from dataclasses import asdict, dataclass
from functools import partial
from importlib import resources
from multiprocessing import Pool
from typing import Sequence

from .errors import EmbdimTooLarge, NumsgError, OracleMismatch
from .experiments import EXPERIMENTS, run_experiment
from .families import (
    BRESINSKY_KEYS,
    FamilyInstance,
    arithmetic_semigroup,
    bresinsky_symmetric,
    classify_3_semigroup,
    classify_arithmetic,
    classify_compound,
    classify_pseudosym_4,
    classify_symmetric_4,
    compound_semigroup,
    coprime_product_semigroup,
    komeda_pseudosymmetric,
    pseudosymmetric_four,
    symmetric_four,
    watanabe,
)
from .gluing import delorme_decompose, gluing_relation, ord_in, peel_quadratic_gluings, simple_glue
from .gluing import tangent_cone_of_gluing
from .groebner import Ideal
from .koszul import koszul_verdict
from .poly import Field, degrevlex, format_polynomial
from .semigroup import enumerate_semigroups, from_generators
from .tangent_cone import (
    PERM_LIMIT,
    classify_CI_star,
    initial_ideal,
    is_G_quadratic_permutation_search,
    is_quadratic,
    is_tangent_cone_CM,
    minimal_generators,
    multiplicity_bound_report,
    toric_mu,
)
from .toric import minimal_binomial_generators, toric_ideal

SCHEMA_VERSION = "numsg-report/1"


@dataclass(frozen=True)
class RunConfig:
    field: int = 32003
    max_i: int = 6
    band: int = 2
    perm_limit: int = PERM_LIMIT
    jobs: int = 1
    timings: bool = False

    @property
    def F(self) -> Field:
        return Field(self.field)


# ---------------------------------------------------------------- reports


def _polys(polys) -> list[str]:
    return sorted(format_polynomial(f) for f in polys)


def _ideal(I: Ideal, toric: bool = False) -> dict:
    order = degrevlex(I.nvars)
    if I.is_zero():
        mins = []
    else:
        mins = minimal_binomial_generators(I) if toric else minimal_generators(I)
    return {"minimal_generators": _polys(mins),
            "groebner_basis": _polys(I.gb(order)), "order": order.name}


def analyze(gens: Sequence[int], cfg: RunConfig) -> dict:
    t0 = time.perf_counter()
    S = from_generators(list(gens))
    g = tuple(S.generators)
    n, F = len(g), cfg.F
    report: dict = {
        "schema": SCHEMA_VERSION,
        "kind": "analysis",
        "generators": list(g),
        "settings": {"field": cfg.field, "max_i": cfg.max_i, "band": cfg.band, "perm_limit": cfg.perm_limit},
        "invariants": {
            "multiplicity": S.multiplicity,
            "embdim": n,
            "frobenius": S.frobenius_number(),
            "genus": S.genus(),
            "pseudo_frobenius": S.pseudo_frobenius(),
            "symmetric": S.is_symmetric(),
            "pseudo_symmetric": S.is_pseudo_symmetric(),
        },
    }
    if n == 1:
        empty = {"minimal_generators": [], "groebner_basis": [], "order": "degrevlex(x1)"}
        report.update(toric_ideal=empty, initial_ideal=empty, quadratic=True,
                      g_quadratic={"order": None, "note": "zero ideal"},
                      complete_intersection={"toric": True, "initial": "CI"}, cohen_macaulay=True,
                      bounds=[], gluing={"delorme": {"kind": "N", "generators": [1]}, "quadratic_chain": []})
    else:
        quad = is_quadratic(g, F)
        report["toric_ideal"] = _ideal(toric_ideal(g, F), toric=True)
        report["initial_ideal"] = _ideal(initial_ideal(g, F))
        report["quadratic"] = quad
        if not quad:
            gq = {"order": None, "note": "not quadratic"}
        else:
            try:
                order = is_G_quadratic_permutation_search(g, F, limit=cfg.perm_limit)
                gq = {"order": order.name if order else None,
                      "note": "witness order" if order else "no lex/degrevlex permutation gives a quadric basis"}
            except EmbdimTooLarge:
                gq = {"order": None, "note": f"embedding dimension above perm limit {cfg.perm_limit}"}
        report["g_quadratic"] = gq
        tree = delorme_decompose(g)
        report["complete_intersection"] = {"toric": toric_mu(g, F) == n - 1, "initial": classify_CI_star(g, F)}
        report["cohen_macaulay"] = is_tangent_cone_CM(g, F)
        report["bounds"] = [b.as_dict() for b in multiplicity_bound_report(g, F)]
        chain = peel_quadratic_gluings(g) if quad and tree is not None else None
        report["gluing"] = {"delorme": tree.as_dict() if tree else None, "quadratic_chain": chain}
    v = koszul_verdict(g, max_i=cfg.max_i, band=cfg.band, field=F, perm_limit=cfg.perm_limit)
    report["koszul"] = {**v.as_dict(), "label": v.label()}
    if cfg.timings:
        report["seconds"] = round(time.perf_counter() - t0, 3)
    return report


def glue(L: Sequence[int], c: int, l: int, cfg: RunConfig) -> dict:
    F = cfg.F
    H = simple_glue(list(L), c, l)
    o = ord_in(list(L), l)
    f = gluing_relation(list(L), c, l, F)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        Istar = tangent_cone_of_gluing(list(L), c, l, F, fallback=True)
    return {
        "schema": SCHEMA_VERSION,
        "kind": "glue",
        "L": sorted(L),
        "c": c,
        "l": l,
        "generators": list(H),
        "ord_L_l": o,
        "relation": format_polynomial(f),
        "formula_applies": c <= o,
        "initial_ideal": _ideal(Istar),
        "quadratic": is_quadratic(H, F),
        "settings": {"field": cfg.field},
    }


# ---------------------------------------------------------------- families


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _family(args, cfg: RunConfig) -> dict:
    F = cfg.F
    name = args.family_name
    verdict: dict
    if name == "arithmetic":
        inst = arithmetic_semigroup(args.a1, args.d, args.n, F)
        verdict = {"class": classify_arithmetic(args.a1, args.d, args.n)}
    elif name == "compound":
        inst = compound_semigroup(_ints(args.a), _ints(args.b), F)
        verdict = {"class": classify_compound(_ints(args.a), _ints(args.b))}
    elif name == "watanabe":
        inst = FamilyInstance("watanabe", watanabe(args.n, args.a), {"n": args.n, "a": args.a})
        verdict = {"class": "Koszul"}
    elif name == "coprime":
        inst = coprime_product_semigroup(_ints(args.a), F)
        verdict = {"class": "NotQuadratic"}
    elif name == "three":
        gens = (4, 2 * args.c, 2 * args.a + args.c)
        inst = FamilyInstance("three", gens, {"a": args.a, "c": args.c})
        verdict = asdict(classify_3_semigroup(gens))
    elif name == "bresinsky":
        alpha = dict(zip(BRESINSKY_KEYS, _ints(args.alpha)))
        inst = bresinsky_symmetric(alpha, field=F)
        verdict = _sym_verdict(inst.gens, F)
    elif name == "symmetric4":
        inst = symmetric_four(args.a, args.b, F)
        verdict = _sym_verdict(inst.gens, F)
    elif name == "komeda":
        inst = komeda_pseudosymmetric(_ints(args.c), args.alpha21, F)
        verdict = asdict(classify_pseudosym_4(inst.gens))
    elif name == "pseudosym4":
        inst = pseudosymmetric_four(args.a, args.b, F)
        verdict = asdict(classify_pseudosym_4(inst.gens))
    else:  # pragma: no cover - argparse restricts choices
        raise NumsgError(f"unknown family {name}")
    verdict.pop("predicted_initial", None)
    out = {
        "schema": SCHEMA_VERSION,
        "kind": "family",
        "family": inst.family,
        "params": inst.params,
        "generators": list(inst.gens),
        "predicted_toric": _polys(inst.toric.gens) if inst.toric else None,
        "predicted_initial": _polys(inst.initial.gens) if inst.initial else None,
        "classifier": verdict,
    }
    out["analysis"] = analyze(inst.gens, cfg)
    return out


def _sym_verdict(gens, F: Field) -> dict:
    from .errors import IsCI

    try:
        v = classify_symmetric_4(gens, F)
    except IsCI:
        return {"quadratic": None, "detail": "complete intersection"}
    return {"quadratic": v.quadratic, "koszul": v.koszul, "params": v.params, "detail": v.detail}


# ------------------------------------------------------------------ search


def _search_row(gens: tuple[int, ...], cfg: RunConfig, koszul: bool) -> dict:
    F = cfg.F
    S = from_generators(list(gens))
    quad = is_quadratic(gens, F)
    row = {"generators": list(gens), "e": S.multiplicity, "quadratic": quad,
           "symmetric": S.is_symmetric(), "pseudo_symmetric": S.is_pseudo_symmetric()}
    if quad and len(gens) > 1:
        row["initial"] = classify_CI_star(gens, F)
    if koszul and quad:
        row["koszul"] = koszul_verdict(gens, max_i=cfg.max_i, band=cfg.band, field=F,
                                       perm_limit=cfg.perm_limit).label()
    return row


def search(embdim: int, max_gen: int, cfg: RunConfig, quadratic: bool = False, koszul: bool = False,
           multiplicity: int | None = None, neither: bool = False) -> dict:
    cands = []
    seen = set()
    for g in enumerate_semigroups(embdim, max_gen):
        if g in seen or (multiplicity is not None and g[0] != multiplicity):
            continue
        seen.add(g)
        cands.append(g)
    work = partial(_search_row, cfg=cfg, koszul=koszul)
    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            rows = pool.map(work, cands, chunksize=16)
    else:
        rows = [work(g) for g in cands]
    if quadratic:
        rows = [r for r in rows if r["quadratic"]]
    if neither:
        rows = [r for r in rows if not r["symmetric"] and not r["pseudo_symmetric"]]
    hist = Counter(r["e"] for r in rows)
    return {
        "schema": SCHEMA_VERSION,
        "kind": "search",
        "query": {"embdim": embdim, "max_gen": max_gen, "quadratic": quadratic, "koszul": koszul,
                  "multiplicity": multiplicity, "neither_symmetric": neither},
        "settings": {"field": cfg.field, "max_i": cfg.max_i, "band": cfg.band},
        "scanned": len(cands),
        "rows": rows,
        "histogram": {str(e): hist[e] for e in sorted(hist)},
    }


# ----------------------------------------------------------------- output


def load_schema() -> dict:
    return json.loads(resources.files("numsg").joinpath("report.schema.json").read_text())


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)


def _text(report: dict) -> str:
    kind = report["kind"]
    lines = []
    if kind == "analysis":
        inv = report["invariants"]
        lines.append(f"H = <{', '.join(map(str, report['generators']))}>  e={inv['multiplicity']} "
                     f"n={inv['embdim']} F={inv['frobenius']} g={inv['genus']}")
        lines.append(f"symmetric={inv['symmetric']} pseudo_symmetric={inv['pseudo_symmetric']}")
        lines.append("I*: " + ", ".join(report["initial_ideal"]["minimal_generators"]))
        lines.append(f"quadratic: {report['quadratic']}  G-quadratic: {report['g_quadratic']['order'] or report['g_quadratic']['note']}")
        ci = report["complete_intersection"]
        lines.append(f"K[H] CI: {ci['toric']}  I*: {ci['initial']}  CM: {report['cohen_macaulay']}")
        lines.append(f"koszul: {report['koszul']['label']}  (field {report['settings']['field']}, "
                     f"max_i {report['settings']['max_i']}, band {report['koszul']['band']})")
    elif kind == "glue":
        lines.append(f"H = <{report['c']}L, {report['l']}> = <{', '.join(map(str, report['generators']))}>")
        lines.append(f"f = {report['relation']}  ord_L(l) = {report['ord_L_l']}  formula applies: {report['formula_applies']}")
        lines.append("I*: " + ", ".join(report["initial_ideal"]["minimal_generators"]))
        lines.append(f"quadratic: {report['quadratic']}")
    elif kind == "family":
        lines.append(f"{report['family']} {json.dumps(report['params'], sort_keys=True)}")
        lines.append(f"classifier: {json.dumps(report['classifier'], sort_keys=True)}")
        lines.append(_text(report["analysis"]))
    elif kind == "experiment":
        for r in report["candidates"]:
            lines.append(json.dumps(r, sort_keys=True))
        lines.append(f"{report['experiment']}: examined {report['examined']}, "
                     f"{len(report['candidates'])} candidates")
    else:
        for r in report["rows"]:
            extra = f" {r['koszul']}" if "koszul" in r else ""
            lines.append(f"{r['generators']} e={r['e']} quadratic={r['quadratic']}{extra}")
        lines.append(f"scanned {report['scanned']}, histogram of e: {report['histogram']}")
    return "\n".join(lines)


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--field", type=int, default=32003, help="prime p of the coefficient field")
    common.add_argument("--max-i", type=int, default=6, help="homological cutoff for Betti numbers")
    common.add_argument("--band", type=int, default=2, help="internal degree band j <= i + band")
    common.add_argument("--perm-limit", type=int, default=PERM_LIMIT)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--timings", action="store_true", help="include wall-clock seconds (not reproducible)")

    p = argparse.ArgumentParser(prog="numsg", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full pipeline on one semigroup")
    a.add_argument("generators", type=int, nargs="+")

    g = sub.add_parser("glue", parents=[common], help="simple gluing <cL, l>")
    g.add_argument("generators", type=int, nargs="+", help="generators of L")
    g.add_argument("--c", type=int, required=True)
    g.add_argument("--l", type=int, required=True)

    f = sub.add_parser("family", parents=[common], help="named families")
    fs = f.add_subparsers(dest="family_name", required=True)
    x = fs.add_parser("arithmetic", parents=[common])
    x.add_argument("--a1", type=int, required=True)
    x.add_argument("--d", type=int, required=True)
    x.add_argument("--n", type=int, required=True)
    x = fs.add_parser("compound", parents=[common])
    x.add_argument("--a", required=True, help="comma separated a_i")
    x.add_argument("--b", required=True, help="comma separated b_i")
    x = fs.add_parser("watanabe", parents=[common])
    x.add_argument("--n", type=int, required=True)
    x.add_argument("--a", type=int, required=True)
    x = fs.add_parser("coprime", parents=[common])
    x.add_argument("--a", required=True, help="comma separated pairwise coprime integers")
    x = fs.add_parser("three", parents=[common], help="<4, 2c, 2a+c>")
    x.add_argument("--a", type=int, required=True)
    x.add_argument("--c", type=int, required=True)
    x = fs.add_parser("bresinsky", parents=[common])
    x.add_argument("--alpha", required=True, help="alpha_ij for ij in " + ",".join(BRESINSKY_KEYS))
    x = fs.add_parser("symmetric4", parents=[common], help="<5, 4a+b, 2a+3b, 3a+2b>")
    x.add_argument("--a", type=int, required=True)
    x.add_argument("--b", type=int, required=True)
    x = fs.add_parser("komeda", parents=[common])
    x.add_argument("--c", required=True, help="c1,c2,c3,c4")
    x.add_argument("--alpha21", type=int, required=True)
    x = fs.add_parser("pseudosym4", parents=[common], help="<5, 3a+b+1, 3b-a-2, a+2b+2>")
    x.add_argument("--a", type=int, required=True)
    x.add_argument("--b", type=int, required=True)

    s = sub.add_parser("search", parents=[common], help="scan semigroups by embedding dimension")
    s.add_argument("--embdim", type=int, required=True)
    s.add_argument("--max-gen", type=int, required=True)
    s.add_argument("--quadratic", action="store_true", help="keep quadratic semigroups only")
    s.add_argument("--koszul", action="store_true", help="add Koszul verdicts for quadratic rows")
    s.add_argument("--multiplicity", type=int, default=None)
    s.add_argument("--neither", action="store_true", help="keep neither symmetric nor pseudo-symmetric")

    x = sub.add_parser("experiment", parents=[common], help="open-question corpus experiments (log only)")
    x.add_argument("name", choices=EXPERIMENTS)
    x.add_argument("--max-embdim", type=int, default=5)
    x.add_argument("--max-gen", type=int, default=26)
    return p


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), ""
    cfg = RunConfig(field=args.field, max_i=args.max_i, band=args.band, perm_limit=args.perm_limit,
                    jobs=args.jobs, timings=args.timings)
    try:
        cfg.F  # rejects a non-prime --field early
        if args.command == "analyze":
            report = analyze(args.generators, cfg)
        elif args.command == "glue":
            report = glue(args.generators, args.c, args.l, cfg)
        elif args.command == "family":
            report = _family(args, cfg)
        elif args.command == "experiment":
            report = {"schema": SCHEMA_VERSION, "kind": "experiment", "settings": {"field": cfg.field},
                      **run_experiment(args.name, args.max_embdim, args.max_gen, cfg.F)}
        else:
            report = search(args.embdim, args.max_gen, cfg, args.quadratic, args.koszul,
                            args.multiplicity, args.neither)
    except OracleMismatch as exc:
        return 3, f"internal consistency failure: {exc}"
    except (NumsgError, ValueError) as exc:
        return 2, f"error: {type(exc).__name__}: {exc}"
    return 0, dumps(report) if args.json else _text(report)


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(argv)
    if out:
        print(out, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
