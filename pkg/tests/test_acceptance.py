"""Acceptance criteria 1-10.

Every test prints one line ``CRITERION k PASS|FAIL <title>: <detail>``
to the terminal, also under output capture.  Run alone with

    pytest tests/test_acceptance.py -v

Criteria 3, 4, 6 and 8 share one exhaustive scan (embedding dimension
at most 5, generators at most 26).
"""

from __future__ import annotations

import json
import os
import random
import subprocess
import sys
from contextlib import contextmanager
from functools import lru_cache
from itertools import product
from math import gcd

import pytest

from numsg.cli import analyze, dumps, RunConfig
from numsg.errors import IllegalParameters, IsCI
from numsg.families import (
    arithmetic_semigroup,
    classify_3_semigroup,
    classify_arithmetic,
    classify_compound,
    classify_pseudosym_4,
    classify_symmetric_4,
    compound_semigroup,
    coprime_product_semigroup,
    eq14_branch,
    pseudosym_mod_x1,
    pseudosymmetric_four,
    symmetric_four,
    tangent_cone_is_gorenstein,
    watanabe,
)
from numsg.gluing import compose_chain, delorme_decompose, peel_quadratic_gluings, tangent_cone_of_gluing
from numsg.gluing import transfer_predicates
from numsg.groebner import Ideal, ideal_equal, quotient_hilbert_function
from numsg.homology import betti_table_over_quotient
from numsg.koszul import CERTIFIED, NOT_KOSZUL, koszul_verdict
from numsg.poly import Field, degrevlex, parse_polynomials
from numsg.semigroup import enumerate_semigroups, from_generators, minimalize
from numsg.tangent_cone import (
    classify_CI_star,
    initial_ideal,
    is_G_quadratic_permutation_search,
    is_quadratic,
    is_tangent_cone_CM,
    lifting_criterion_check,
    mu,
    quadratic_gb,
)
from numsg.toric import toric_ideal

SCAN_EMBDIM, SCAN_MAX_GEN = 5, 26

# H -> None when the Hilbert oracle held, else a description
ORACLE: dict[tuple[int, ...], str | None] = {}


def _emit(line: str, capsys):
    with capsys.disabled():
        print("\n" + line, flush=True)


@contextmanager
def criterion(k: int, title: str, capsys):
    detail: dict = {}
    try:
        yield detail
    except BaseException as exc:
        _emit(f"CRITERION {k} FAIL {title}: {type(exc).__name__}: {str(exc)[:300]}", capsys)
        raise
    _emit(f"CRITERION {k} PASS {title}: {detail.get('summary', '')}", capsys)


def touch(gens, field: Field | None = None) -> Ideal:
    """I* of H, with the Hilbert-function oracle recorded for criterion 8."""
    field = field or Field()
    Istar = initial_ideal(gens, field)
    key = tuple(gens)
    if key not in ORACLE:
        S = from_generators(list(gens))
        bad = None
        for d in range(S.hilbert_stabilization() + 3):
            got = quotient_hilbert_function(Istar, None, d) if not Istar.is_zero() else None
            want = S.gr_hilbert_function(d)
            if got is not None and got != want:
                bad = f"degree {d}: {got} != {want}"
                break
        ORACLE[key] = bad
    return Istar


def quadratic(gens, prefilter: bool = True) -> bool:
    if len(gens) > 1 and (not prefilter or is_quadratic(gens)):
        touch(gens)
    return is_quadratic(gens, prefilter=prefilter)


@lru_cache(maxsize=1)
def scan() -> tuple[tuple[int, ...], ...]:
    return tuple(g for n in range(1, SCAN_EMBDIM + 1) for g in enumerate_semigroups(n, SCAN_MAX_GEN))


@lru_cache(maxsize=1)
def scan_quadratic() -> tuple[tuple[int, ...], ...]:
    return tuple(g for g in scan() if quadratic(g))


# ---------------------------------------------------------------- 1


def test_criterion_01_counterexample(capsys):
    with criterion(1, "beta_4,5 = 1 for <12,14,15,16,18,19>", capsys) as d:
        H = (12, 14, 15, 16, 18, 19)
        assert quadratic(H)
        tab = betti_table_over_quotient(touch(H), max_i=4, band=2)
        assert tab.get(4, 5) == 1
        assert tab.first_off_diagonal() == (4, 5)
        d["summary"] = f"quadratic, beta_4,5 = {tab.get(4, 5)}"


# ---------------------------------------------------------------- 2

GOLDEN = {
    (7, 8, 20): ["x3^2", "x2*x3", "x1^4*x3", "x2^7"],
    (4, 6, 7, 9): ["x2^2", "x2*x3-x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"],
    (12, 18, 21, 27, 8): ["x1^2", "x2^2", "x2*x3-x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2"],
    (12, 18, 21, 27, 10): ["x1*x2", "x2^2", "x2*x3-x1*x4", "x3^2", "x2*x4", "x3*x4", "x4^2",
                           "x1^3*x3-x4*x5^3", "x1^4-x2*x5^3"],
}
TORIC_GOLDEN = {
    (11, 13, 14, 15, 19): ["x1^3-x3*x5", "x2^2-x1*x4", "x3^2-x2*x4", "x4^2-x1*x5", "x5^2-x1*x2*x3"],
}


def test_criterion_02_printed_ideals(capsys):
    with criterion(2, "printed ideals", capsys) as d:
        for gens, polys in GOLDEN.items():
            want = Ideal(parse_polynomials(polys, len(gens)), len(gens))
            assert ideal_equal(touch(gens), want), gens
        for gens, polys in TORIC_GOLDEN.items():
            want = Ideal(parse_polynomials(polys, len(gens)), len(gens))
            assert ideal_equal(toric_ideal(gens), want), gens
            touch(gens)
        d["summary"] = f"{len(GOLDEN)} tangent cones and {len(TORIC_GOLDEN)} toric ideal equal"


# ---------------------------------------------------------------- 3


@pytest.mark.slow
def test_criterion_03_bounds(capsys):
    with criterion(3, "n <= e <= 2^(n-1) on the scan", capsys) as d:
        violations = []
        low = top = 0
        for g in scan_quadratic():
            n, e = len(g), g[0]
            if not n <= e <= 2 ** (n - 1):
                violations.append((g, "range"))
                continue
            if n == 1:
                continue
            if e == n:
                low += 1
                if is_G_quadratic_permutation_search(g) is None:
                    violations.append((g, "no permutation witness"))
            if e == 2 ** (n - 1):
                top += 1
                if delorme_decompose(g) is None or mu(touch(g)) != n - 1:
                    violations.append((g, "top multiplicity but not CI"))
        assert not violations, violations[:10]
        d["summary"] = (f"{len(scan())} semigroups, {len(scan_quadratic())} quadratic, "
                        f"{low} with e = n, {top} with e = 2^(n-1), 0 violations")


# ---------------------------------------------------------------- 4


@pytest.mark.slow
def test_criterion_04_forbidden_multiplicities(capsys):
    with criterion(4, "CM and I* not CI: e <= 2^(n-1) - 2^(n-3)", capsys) as d:
        violations = []
        checked = equal = 0
        for g in scan_quadratic():
            n, e = len(g), g[0]
            if n < 3 or classify_CI_star(g) == "CI" or not is_tangent_cone_CM(g):
                continue
            checked += 1
            bound = 2 ** (n - 1) - 2 ** (n - 3)
            if e > bound:
                violations.append((g, "above bound"))
            elif e == bound:
                equal += 1
                Istar = touch(g)
                if classify_CI_star(g) != "almostCI":
                    violations.append((g, "equality case not almost CI"))
                if not quadratic_gb(Istar, degrevlex(n, list(range(n - 1, -1, -1)))):
                    violations.append((g, "no degrevlex(x_n > ... > x_1) quadric basis"))
        assert (6, 7, 8, 9) in scan_quadratic()
        assert not violations, violations[:10]
        d["summary"] = f"{checked} CM non-CI quadratic semigroups, {equal} equality cases, 0 violations"


# ---------------------------------------------------------------- 5


def _random_gluings(count: int, seed: int = 20240):
    rng = random.Random(seed)
    pool = [g for g in scan_quadratic() if len(g) <= 4 and max(g) <= 15]
    seen = set()
    while len(seen) < count:
        if rng.random() < 0.5:
            L = rng.choice(pool)
        else:
            n = rng.choice([1, 2, 3, 3, 4])
            if n == 1:
                L = (1,)
            else:
                raw = rng.sample(range(2, 16), n)
                if gcd(*raw) != 1:
                    continue
                L = tuple(minimalize(raw))
        S = from_generators(list(L))
        odd = [h for h in range(3, 4 * max(L) + 3) if h % 2 and h in S and h not in S.generators]
        if not odd:
            continue
        case = (L, rng.choice(odd))
        if case not in seen:
            seen.add(case)
            yield case


def test_criterion_05_gluing_transfer(capsys):
    with criterion(5, "quadratic gluing transfer", capsys) as d:
        violations = []
        quad = decided = 0
        for L, l in _random_gluings(220):
            H = (*[2 * a for a in L], l)
            formula = tangent_cone_of_gluing(L, 2, l)
            if not ideal_equal(formula, touch(H)):
                violations.append((L, l, "I* formula"))
            rep = transfer_predicates(L, l, max_i=4)
            violations += [(L, l, v) for v in rep.violations]
            if rep.claims["quadratic"] != rep.direct["quadratic"]:
                violations.append((L, l, "quadratic"))
            if not (2 * min(L) == min(H) < l):
                violations.append((L, l, "e(H) = 2e(L) < l"))
            quad += rep.direct["quadratic"]
            decided += rep.claims["koszul"] == rep.direct["koszul"] != "UndecidedUpTo"
            if len(L) > 1:
                touch(L)
        assert not violations, violations[:10]
        d["summary"] = f"220 gluings ({quad} quadratic), Koszul status agrees and is decided in {decided}, 0 violations"


# ---------------------------------------------------------------- 6


def _all_chains(gens: tuple[int, ...]) -> list[list[int]]:
    """Every way to peel H = <2L, l> down to N, trying each generator as l."""
    if gens == (1,):
        return [[]]
    out = []
    for l in gens:
        rest = [a for a in gens if a != l]
        if any(a % 2 for a in rest) or gcd(*rest, 2) != 2:
            continue
        L = [a // 2 for a in rest]
        if gcd(*L) != 1:
            continue
        S = from_generators(L)
        if tuple(S.generators) != tuple(sorted(L)) or l not in S or l in S.generators:
            continue
        out += [c + [l] for c in _all_chains(tuple(sorted(L)))]
    return out


@pytest.mark.slow
def test_criterion_06_quadratic_ci_chains(capsys):
    with criterion(6, "quadratic CI iff unique quadratic gluing chain", capsys) as d:
        violations = []
        ci = qci = 0
        for g in scan():
            if delorme_decompose(g) is None:
                continue
            ci += 1
            q = quadratic(g, prefilter=False) if len(g) > 1 else True
            chains = _all_chains(g)
            peeled = peel_quadratic_gluings(g)
            if q != bool(chains) or (peeled is None) == q:
                violations.append((g, "equivalence"))
            if chains:
                qci += 1
                if len(chains) != 1 or chains[0] != peeled or compose_chain(peeled) != g:
                    violations.append((g, "uniqueness or recomposition"))
        for n in range(1, 6):
            for a in (1, 3, 5):
                W = watanabe(n, a)
                chain = peel_quadratic_gluings(W)
                if chain is None or compose_chain(chain) != tuple(sorted(W)) or min(W) != 2 ** n:
                    violations.append((W, "Watanabe"))
                if not quadratic(W) or delorme_decompose(W) is None:
                    violations.append((W, "Watanabe not quadratic CI"))
        assert not violations, violations[:10]
        d["summary"] = f"{ci} CI semigroups, {qci} quadratic with a unique chain; W_n(a) for n <= 5, a in 1,3,5 ok"


# ---------------------------------------------------------------- 7


def _arithmetic_grid(bad):
    k = 0
    for n in range(3, 7):
        for a1 in range(n, 31):
            for dd in range(1, 8):
                if gcd(a1, dd) != 1:
                    continue
                k += 1
                inst = arithmetic_semigroup(a1, dd, n)
                touch(inst.gens)
                closed = classify_arithmetic(a1, dd, n) != "NotQuadratic"
                if closed != quadratic(inst.gens):
                    bad.append(("arithmetic", a1, dd, n))
                elif closed and is_G_quadratic_permutation_search(inst.gens) is None:
                    bad.append(("arithmetic witness", a1, dd, n))
    return k


def _compound_grid(bad):
    pairs = [(a, b) for a in range(2, 8) for b in range(a + 1, 8)]
    k = 0
    for n in range(1, 5):
        for combo in product(pairs, repeat=n):
            a, b = [p[0] for p in combo], [p[1] for p in combo]
            try:
                inst = compound_semigroup(a, b)
            except IllegalParameters:
                continue
            k += 1
            touch(inst.gens)
            if (classify_compound(a, b) == "Koszul") != quadratic(inst.gens):
                bad.append(("compound", a, b))
    return k


def _coprime_grid(bad):
    k = 0
    for r in (3, 4):
        for c in product(range(2, 12), repeat=r):
            if list(c) != sorted(c, reverse=True) or len(set(c)) != r:
                continue
            if any(gcd(x, y) != 1 for i, x in enumerate(c) for y in c[i + 1:]):
                continue
            inst = coprime_product_semigroup(c)
            touch(inst.gens)
            k += 1
            if delorme_decompose(inst.gens) is None or quadratic(inst.gens):
                bad.append(("coprime", c))
    return k


def _three_grid(bad):
    k = 0
    for g in enumerate_semigroups(3, 40):
        k += 1
        if classify_3_semigroup(g).quadratic != quadratic(g):
            bad.append(("three", g))
    return k


def _symmetric_grid(bad):
    seen = {}
    for a in range(1, 13):
        for b in range(1, 13):
            if (a - b) % 5 == 0:
                continue
            inst = symmetric_four(a, b)
            got = touch(inst.gens)
            if not ideal_equal(inst.initial, got):
                bad.append(("eq14", a, b, eq14_branch(a, b)))
            v = classify_symmetric_4(sorted(inst.gens))
            if not v.quadratic or (v.params["a"], v.params["b"]) != (a, b) or v.detail != eq14_branch(a, b):
                bad.append(("symmetric classifier", a, b))
            if not quadratic(inst.gens) or not quadratic_gb(got, degrevlex(4, [3, 2, 1, 0])):
                bad.append(("symmetric quadric basis", a, b))
            if koszul_verdict(inst.gens, max_i=3).status != CERTIFIED:
                bad.append(("symmetric Koszul", a, b))
            if not tangent_cone_is_gorenstein(inst.gens):
                bad.append(("symmetric Gorenstein", a, b))
            key = tuple(sorted(inst.gens))
            if key in seen:
                bad.append(("not injective", (a, b), seen[key]))
            seen[key] = (a, b)
    negatives = 0
    for g in scan():
        if len(g) != 4 or not from_generators(list(g)).is_symmetric():
            continue
        try:
            v = classify_symmetric_4(g)
        except IsCI:
            continue
        negatives += 1
        if v.quadratic != quadratic(g):
            bad.append(("symmetric scan", g))
    return len(seen), negatives


def _pseudo_grid(bad):
    k = 0
    images = Ideal(pseudosym_mod_x1(), 4)
    for b in range(3, 14):
        for a in range(1, b - 1):
            if (3 * a + b + 1) % 5 == 0:
                continue
            k += 1
            inst = pseudosymmetric_four(a, b)
            touch(inst.gens)
            fs = inst.relations
            if not lifting_criterion_check(inst.toric, fs):
                bad.append(("lifting", a, b))
            img = Ideal([f.initial_form().evaluate_variable(0, 0) for f in fs], 4)
            if not ideal_equal(img, images):
                bad.append(("mod x1 image", a, b))
            v = classify_pseudosym_4(sorted(inst.gens))
            if not v.quadratic or (v.params["a"], v.params["b"]) != (a, b) or not quadratic(inst.gens):
                bad.append(("pseudo classifier", a, b))
            a2, a3, a4 = inst.gens[1:]
            if (3 * a2 - a3) % 5 or (2 * a2 - a4) % 5:
                bad.append(("congruence", a, b))
    negatives = 0
    for g in scan():
        if len(g) == 4 and from_generators(list(g)).is_pseudo_symmetric():
            negatives += 1
            if classify_pseudosym_4(g).quadratic != quadratic(g):
                bad.append(("pseudo scan", g))
    return k, negatives


@pytest.mark.slow
def test_criterion_07_family_classifiers(capsys):
    with criterion(7, "family classifiers agree with the pipeline", capsys) as d:
        bad: list = []
        counts = {
            "arithmetic": _arithmetic_grid(bad),
            "compound": _compound_grid(bad),
            "coprime": _coprime_grid(bad),
            "three": _three_grid(bad),
        }
        counts["symmetric"], counts["symmetric_scan"] = _symmetric_grid(bad)
        counts["pseudo"], counts["pseudo_scan"] = _pseudo_grid(bad)
        assert not bad, bad[:10]
        d["summary"] = ", ".join(f"{k} {v}" for k, v in counts.items()) + ", 0 disagreements"


# ---------------------------------------------------------------- 8


def test_criterion_08_hilbert_oracle(capsys):
    with criterion(8, "Hilbert function oracle on every touched semigroup", capsys) as d:
        if len(ORACLE) < 10:
            # run alone: cover the quadratic part of the scan
            for g in scan_quadratic():
                if len(g) > 1:
                    touch(g)
        bad = {g: why for g, why in ORACLE.items() if why}
        assert not bad, list(bad.items())[:10]
        d["summary"] = f"{len(ORACLE)} semigroups, 0 mismatches"


# ---------------------------------------------------------------- 9


def test_criterion_09_non_koszul_refutation(capsys):
    with criterion(9, "<11,13,14,15,19> is not Koszul over two primes", capsys) as d:
        H = (11, 13, 14, 15, 19)
        verdicts = []
        for p in (32003, 31991):
            touch(H, Field(p))
            verdicts.append(koszul_verdict(H, max_i=6, field=Field(p)))
        for v in verdicts:
            assert v.status == NOT_KOSZUL and v.witness[0] <= 6
            assert (v.witness, v.certificate["value"]) == ((3, 4), 2)
        assert verdicts[0].label() == verdicts[1].label()
        d["summary"] = f"{verdicts[0].label()} over F_32003 and F_31991"


# ---------------------------------------------------------------- 10

COMMANDS = [
    ["analyze", "12", "14", "15", "16", "18", "19", "--max-i", "4"],
    ["analyze", "11", "13", "14", "15", "19", "--max-i", "4", "--field", "31991"],
    ["glue", "4", "6", "7", "9", "--c", "3", "--l", "10"],
    ["family", "compound", "--a", "2,2,2", "--b", "3,5,7", "--max-i", "3"],
    ["family", "pseudosym4", "--a", "1", "--b", "3", "--max-i", "3"],
    ["search", "--embdim", "3", "--max-gen", "20", "--quadratic", "--koszul", "--max-i", "3"],
]


def test_criterion_10_determinism(capsys):
    with criterion(10, "byte-identical JSON reports", capsys) as d:
        for argv in COMMANDS:
            outs = set()
            for seed in ("0", "1", "12345"):
                env = {**os.environ, "PYTHONHASHSEED": seed}
                proc = subprocess.run([sys.executable, "-m", "numsg", *argv, "--json"], env=env,
                                      capture_output=True, text=True, check=True)
                json.loads(proc.stdout)
                outs.add(proc.stdout)
            assert len(outs) == 1, argv
        cfg = RunConfig(max_i=4)
        first = dumps(analyze((11, 13, 14, 15, 19), cfg))
        assert first == dumps(analyze((11, 13, 14, 15, 19), cfg))
        d["summary"] = f"{len(COMMANDS)} commands x 3 hash seeds identical"


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v", *sys.argv[1:]]))
