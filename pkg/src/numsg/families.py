"""Named families of numerical semigroups with closed-form predictions.

Every constructor returns a ``FamilyInstance`` holding the generators in
the variable order of its formulas, plus the predicted toric ideal and/or
ideal of initial forms.  ``check=True`` compares predictions with the
generic pipeline and raises ``OracleMismatch`` on disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import permutations, product
from math import gcd, prod
from typing import Mapping, Sequence

from .errors import (
    HypothesisFailed,
    IllegalParameters,
    IsCI,
    NotPairwiseCoprime,
    NotPseudoSymmetric,
    NotSymmetric,
    OracleMismatch,
    WrongEmbdim,
)
from .gluing import delorme_decompose, simple_glue
from .groebner import Ideal, ideal_equal, is_groebner_basis
from .poly import GF, Field, Polynomial, degrevlex
from .semigroup import from_generators
from .tangent_cone import initial_ideal, is_quadratic, mu, quadratic_gb, toric_mu
from .toric import critical_exponents, factorizations, generator_list, toric_ideal


@dataclass
class FamilyInstance:
    family: str
    gens: tuple[int, ...]
    params: dict = dc_field(default_factory=dict)
    toric: Ideal | None = None
    initial: Ideal | None = None
    relations: list[Polynomial] = dc_field(default_factory=list)


@dataclass
class FamilyVerdict:
    quadratic: bool
    koszul: bool
    params: dict = dc_field(default_factory=dict)
    detail: str = ""
    predicted_initial: Ideal | None = None


def _mono(n: int, exps: Mapping[int, int]) -> tuple[int, ...]:
    """Exponent vector from {1-based variable index: exponent}."""
    m = [0] * n
    for i, e in exps.items():
        m[i - 1] += e
    return tuple(m)


def _e(*pairs: tuple[int, int]) -> dict[int, int]:
    """Exponent map from (variable, exponent) pairs; repeats add up."""
    out: dict[int, int] = {}
    for i, k in pairs:
        out[i] = out.get(i, 0) + k
    return out


def _binom(n: int, lhs: Mapping[int, int], rhs: Mapping[int, int], field: Field) -> Polynomial:
    return Polynomial({_mono(n, lhs): 1, _mono(n, rhs): -1}, n, field)


def _monomial(n: int, exps: Mapping[int, int], field: Field) -> Polynomial:
    return Polynomial({_mono(n, exps): 1}, n, field)


def _require_minimal(gens: Sequence[int], family: str):
    if gcd(*gens) != 1:
        raise IllegalParameters(f"{family}: generators {list(gens)} are not coprime")
    S = from_generators(list(gens))
    if sorted(S.generators) != sorted(gens) or len(set(gens)) != len(gens):
        raise IllegalParameters(f"{family}: {list(gens)} is not a minimal generating system")


def _check_equal(pred: Ideal, got: Ideal, what: str):
    if not ideal_equal(pred, got):
        raise OracleMismatch(f"{what}: predicted {pred} but computed {got}")


# ------------------------------------------------------------ arithmetic


def patil_data(a1: int, n: int) -> tuple[int, int]:
    """(a, b) with a1 = a(n-1) + b and 1 <= b <= n-1."""
    a = (a1 - 1) // (n - 1)
    return a, a1 - a * (n - 1)


def arithmetic_semigroup(a1: int, d: int, n: int, field: Field = GF, check: bool = True) -> FamilyInstance:
    if n < 3 or d < 1 or a1 < n or gcd(a1, d) != 1:
        raise IllegalParameters(f"arithmetic: need n >= 3, d >= 1, a1 >= n, gcd(a1, d) = 1; got {(a1, d, n)}")
    gens = tuple(a1 + k * d for k in range(n))
    a, b = patil_data(a1, n)
    quads = [_binom(n, _e((i, 1), (j + 1, 1)), _e((i + 1, 1), (j, 1)), field)
             for i in range(1, n) for j in range(i + 1, n)]
    tails = [_binom(n, _e((n, a), (b + i, 1)), _e((1, a + d), (i, 1)), field) for i in range(1, n - b + 1)]
    tail_forms = [_monomial(n, _e((n, a), (b + i, 1)), field) for i in range(1, n - b + 1)]
    inst = FamilyInstance("arithmetic", gens, {"a1": a1, "d": d, "n": n, "a": a, "b": b},
                          Ideal(quads + tails, n, field, gens), Ideal(quads + tail_forms, n, field, gens))
    if check:
        _check_equal(inst.toric, toric_ideal(gens, field), f"arithmetic {gens} toric ideal")
        got = initial_ideal(gens, field)
        _check_equal(inst.initial, got, f"arithmetic {gens} initial ideal")
        order = degrevlex(n)
        if not is_groebner_basis(inst.initial.gens, order):
            raise OracleMismatch(f"arithmetic {gens}: predicted generators are not a degrevlex Groebner basis")
        if len(got.gb(order)) != mu(got):
            raise OracleMismatch(f"arithmetic {gens}: reduced Groebner basis is not a minimal generating set")
    return inst


def classify_arithmetic(a1: int, d: int, n: int) -> str:
    if n < 3 or d < 1 or a1 < n or gcd(a1, d) != 1:
        raise IllegalParameters(f"arithmetic: illegal parameters {(a1, d, n)}")
    return "Koszul+GQuadratic" if n <= a1 <= 2 * n - 2 else "NotQuadratic"


# -------------------------------------------------------------- compound


def compound_semigroup(a: Sequence[int], b: Sequence[int], field: Field = GF, check: bool = True) -> FamilyInstance:
    a, b = list(a), list(b)
    n = len(a)
    if n < 1 or len(b) != n:
        raise IllegalParameters("compound: a and b must be nonempty and of equal length")
    for i in range(n):
        if not 2 <= a[i] < b[i]:
            raise IllegalParameters(f"compound: need 2 <= a_i < b_i, got a={a}, b={b}")
        if gcd(a[i], prod(b[i:])) != 1:
            raise IllegalParameters(f"compound: gcd(a_{i + 1}, b_{i + 1}...b_n) != 1")
    gens = tuple(prod(b[:i]) * prod(a[i:]) for i in range(n + 1))
    # the gcd condition above does not exclude a common factor of a_i and
    # b_j for j < i, which divides every q_k
    _require_minimal(gens, "compound")
    m = n + 1
    rel = [_binom(m, {i + 1: b[i]}, {i + 2: a[i]}, field) for i in range(n)]
    forms = [_monomial(m, {i + 2: a[i]}, field) for i in range(n)]
    inst = FamilyInstance("compound", gens, {"a": a, "b": b},
                          Ideal(rel, m, field, gens), Ideal(forms, m, field, gens), rel)
    if check:
        _check_equal(inst.toric, toric_ideal(gens, field), f"compound {gens} toric ideal")
        _check_equal(inst.initial, initial_ideal(gens, field), f"compound {gens} initial ideal")
    return inst


def classify_compound(a: Sequence[int], b: Sequence[int]) -> str:
    return "Koszul" if all(x == 2 for x in a) else "NotQuadratic"


# ------------------------------------------------------------- Watanabe


def watanabe(n: int, a: int) -> tuple[int, ...]:
    """W_n(a) = <2^n, 2^n + a, 2^n + 2a, ..., 2^n + 2^(n-1) a>, built by
    the recursion W_n = <2 W_(n-1), 2^n + a> and checked against that
    closed form."""
    if n < 1 or a <= 0 or a % 2 == 0:
        raise IllegalParameters(f"Watanabe: need n >= 1 and a odd positive, got n={n}, a={a}")
    gens: tuple[int, ...] = (2, 2 + a)
    for k in range(2, n + 1):
        gens = simple_glue(gens, 2, 2 ** k + a)
    closed = sorted([2 ** n] + [2 ** n + 2 ** k * a for k in range(n)])
    if sorted(gens) != closed:
        raise OracleMismatch(f"W_{n}({a}): recursion gives {sorted(gens)}, closed form {closed}")
    return gens


# ------------------------------------------------- pairwise coprime P/a_i


def coprime_product_semigroup(a: Sequence[int], field: Field = GF, check: bool = True) -> FamilyInstance:
    a = sorted(a, reverse=True)
    n = len(a)
    if n <= 2 or any(x < 2 for x in a):
        raise IllegalParameters(f"coprime product: need n > 2 integers >= 2, got {a}")
    if any(gcd(x, y) != 1 for i, x in enumerate(a) for y in a[i + 1:]):
        raise NotPairwiseCoprime(f"{a} are not pairwise coprime")
    P = prod(a)
    gens = tuple(P // x for x in a)
    rel = [_binom(n, {i + 1: a[i]}, {i + 2: a[i + 1]}, field) for i in range(n - 1)]
    forms = [_monomial(n, {i + 1: a[i]}, field) for i in range(1, n)]
    inst = FamilyInstance("coprime_product", gens, {"a": a},
                          Ideal(rel, n, field, gens), Ideal(forms, n, field, gens), rel)
    if check:
        _check_equal(inst.toric, toric_ideal(gens, field), f"coprime product {gens} toric ideal")
        _check_equal(inst.initial, initial_ideal(gens, field), f"coprime product {gens} initial ideal")
        if delorme_decompose(gens) is None:
            raise OracleMismatch(f"{gens} should be a complete intersection")
        if is_quadratic(gens, field):
            raise OracleMismatch(f"{gens} should not be quadratic")
    return inst


# ------------------------------------------------------- embedding dim 3


def classify_3_semigroup(H) -> FamilyVerdict:
    gens = sorted(generator_list(H))
    if len(gens) != 3:
        raise WrongEmbdim(f"expected embedding dimension 3, got {len(gens)}")
    e = gens[0]
    if e == 3:
        return FamilyVerdict(True, True, {"e": 3}, "minimal multiplicity")
    if e == 4:
        even = [g for g in gens[1:] if g % 2 == 0]
        odd = [g for g in gens[1:] if g % 2]
        if len(even) == 1 and len(odd) == 1:
            c = even[0] // 2
            a2 = odd[0] - c
            if c > 1 and c % 2 and a2 > 0 and a2 % 2 == 0:
                return FamilyVerdict(True, True, {"a": a2 // 2, "c": c}, "<4, 2c, 2a+c>")
    return FamilyVerdict(False, False, {"e": e}, "not of the form e = 3 or <4, 2c, 2a+c>")


# ------------------------------------------- special almost intersections


def special_aci_relations(H, field: Field = GF, limit: int = 256) -> list[Polynomial] | None:
    """Relations x_i^{c_i} - m_i, no m_i a pure power, generating I_H;
    None when no such choice exists (all witness choices are tried, up to
    ``limit`` combinations)."""
    gens = generator_list(H)
    n = len(gens)
    if n < 3:
        raise WrongEmbdim("special almost complete intersections need embedding dimension >= 3")
    I = toric_ideal(gens, field)
    if toric_mu(gens, field) != n:
        return None
    choices = []
    for i, (c, _) in enumerate(critical_exponents(gens)):
        others = [b for k, b in enumerate(gens) if k != i]
        mixed = [f for f in factorizations(others, c * gens[i]) if sum(1 for x in f if x) > 1]
        if not mixed:
            return None
        opts = []
        for f in sorted(mixed, reverse=True):
            r = list(f)
            r.insert(i, 0)
            lhs = tuple(c if k == i else 0 for k in range(n))
            opts.append(Polynomial({lhs: 1, tuple(r): -1}, n, field))
        choices.append(opts)
    for k, combo in enumerate(product(*choices)):
        if k >= limit:
            break
        if len(set(combo)) != n:
            continue
        J = Ideal(list(combo), n, field, gens)
        if J.contains_ideal(I):
            return list(combo)
    return None


def special_ACI_detect(H, field: Field = GF) -> bool:
    return special_aci_relations(H, field) is not None


def special_ACI_multiplicity_law(H, field: Field = GF) -> dict:
    """Both sides of: {f_i*} is a degrevlex(x_n > ... > x_1) Groebner basis
    of I* iff e = 2^(n-1) - 2^(n-3)."""
    gens = generator_list(H)
    if not is_quadratic(gens, field):
        raise HypothesisFailed(f"{gens} is not quadratic")
    rel = special_aci_relations(gens, field)
    if rel is None:
        raise HypothesisFailed(f"{gens} is not a special almost complete intersection")
    n = len(gens)
    order = degrevlex(n, list(range(n - 1, -1, -1)))
    forms = [f.initial_form() for f in rel]
    Istar = initial_ideal(gens, field)
    lhs = is_groebner_basis(forms, order) and ideal_equal(Ideal(forms, n, field), Istar)
    rhs = min(gens) == 2 ** (n - 1) - 2 ** (n - 3)
    if lhs != rhs or quadratic_gb(Istar, order) != rhs:
        raise OracleMismatch(f"{gens}: Groebner side {lhs}, multiplicity side {rhs}")
    return {"groebner": lhs, "multiplicity": rhs, "order": order.name}


# ------------------------------------------------- symmetric, embdim 4


BRESINSKY_KEYS = ("21", "31", "32", "42", "13", "43", "14", "24")


def bresinsky_symmetric(alpha: Mapping[str, int], c: Sequence[int] | None = None,
                        field: Field = GF, check: bool = True) -> FamilyInstance:
    al = {k: int(alpha[k]) for k in BRESINSKY_KEYS}
    c1, c2 = al["21"] + al["31"], al["32"] + al["42"]
    c3, c4 = al["13"] + al["43"], al["14"] + al["24"]
    cs = (c1, c2, c3, c4)
    if c is not None and tuple(c) != cs:
        raise IllegalParameters(f"Bresinsky: c = {tuple(c)} does not match the alpha sums {cs}")
    for k, v in al.items():
        if not 0 < v < cs[int(k[1]) - 1]:
            raise IllegalParameters(f"Bresinsky: need 0 < alpha_{k} < c_{k[1]}")
    a1 = c2 * c3 * al["14"] + al["32"] * al["13"] * al["24"]
    a2 = c3 * c4 * al["21"] + al["31"] * al["43"] * al["24"]
    a3 = c1 * c4 * al["32"] + al["14"] * al["42"] * al["31"]
    a4 = c1 * c2 * al["43"] + al["42"] * al["21"] * al["13"]
    gens = (a1, a2, a3, a4)
    _require_minimal(gens, "Bresinsky")
    rel = [
        _binom(4, {1: c1}, {3: al["13"], 4: al["14"]}, field),
        _binom(4, {2: c2}, {1: al["21"], 4: al["24"]}, field),
        _binom(4, {3: c3}, {1: al["31"], 2: al["32"]}, field),
        _binom(4, {4: c4}, {2: al["42"], 3: al["43"]}, field),
        _binom(4, {3: al["43"], 1: al["21"]}, {2: al["32"], 4: al["14"]}, field),
    ]
    inst = FamilyInstance("bresinsky", gens, {"alpha": al, "c": list(cs)}, Ideal(rel, 4, field, gens), None, rel)
    if check:
        if not from_generators(list(gens)).is_symmetric():
            raise OracleMismatch(f"Bresinsky {gens} is not symmetric")
        _check_equal(inst.toric, toric_ideal(gens, field), f"Bresinsky {gens} toric ideal")
    return inst


def symmetric_four(a: int, b: int, field: Field = GF, check: bool = True) -> FamilyInstance:
    """<5, 4a+b, 2a+3b, 3a+2b> via Bresinsky's formulas with c2=c3=c4=2."""
    if a <= 0 or b <= 0 or (a - b) % 5 == 0:
        raise IllegalParameters(f"symmetric family: need a, b > 0 and 5 not dividing a - b, got {(a, b)}")
    alpha = dict.fromkeys(BRESINSKY_KEYS, 1)
    alpha["21"], alpha["31"] = a, b
    inst = bresinsky_symmetric(alpha, field=field, check=check)
    inst.family = "symmetric4"
    inst.params = {"a": a, "b": b}
    inst.initial = _eq14(a, b, field, inst.gens)
    return inst


def _eq14(a: int, b: int, field: Field, gens) -> Ideal:
    def P(*terms):
        return Polynomial({_mono(4, e): c for e, c in terms}, 4, field)

    x3x4 = P(({3: 1, 4: 1}, 1))
    x4sq = P(({4: 2}, 1), ({2: 1, 3: 1}, -1))
    if a != 1 and b != 1:
        polys = [x3x4, P(({2: 2}, 1)), P(({3: 2}, 1)), x4sq, P(({2: 1, 4: 1}, 1))]
    elif a == 1:
        polys = [x3x4, P(({2: 2}, 1), ({1: 1, 4: 1}, -1)), P(({3: 2}, 1)), x4sq,
                 P(({3: 1, 1: 1}, 1), ({2: 1, 4: 1}, -1))]
    else:
        polys = [x3x4, P(({2: 2}, 1)), P(({3: 2}, 1), ({1: 1, 2: 1}, -1)), x4sq, P(({2: 1, 4: 1}, 1))]
    return Ideal(polys, 4, field, gens)


def eq14_branch(a: int, b: int) -> str:
    if a != 1 and b != 1:
        return "a!=1,b!=1"
    return "a=1" if a == 1 else "b=1"


def _match_symmetric(gens: Sequence[int]) -> list[tuple[int, int, tuple[int, ...]]]:
    """All (a, b, ordered generators) with gens = {5, 4a+b, 2a+3b, 3a+2b}."""
    s = sorted(gens)
    if s[0] != 5:
        return []
    out = []
    for u, v, w in permutations(s[1:]):
        # 4a + b = u, 2a + 3b = v
        if (3 * u - v) % 10 or (2 * v - u) % 5:
            continue
        a, b = (3 * u - v) // 10, (2 * v - u) // 5
        if a > 0 and b > 0 and 3 * a + 2 * b == w and (a - b) % 5:
            out.append((a, b, (5, u, v, w)))
    return sorted(set(out))


def classify_symmetric_4(H, field: Field = GF) -> FamilyVerdict:
    gens = generator_list(H)
    if len(gens) != 4:
        raise WrongEmbdim(f"expected embedding dimension 4, got {len(gens)}")
    S = from_generators(gens)
    if not S.is_symmetric():
        raise NotSymmetric(f"{S} is not symmetric")
    if delorme_decompose(gens) is not None:
        raise IsCI(f"{S} is a complete intersection")
    matches = _match_symmetric(gens)
    if len(matches) > 1:
        raise OracleMismatch(f"{S}: parametrization not unique: {matches}")
    if S.multiplicity != 5 or not matches:
        return FamilyVerdict(False, False, {"e": S.multiplicity}, "e != 5")
    a, b, ordered = matches[0]
    return FamilyVerdict(True, True, {"a": a, "b": b, "generators": list(ordered)},
                         eq14_branch(a, b), _eq14(a, b, field, ordered))


# ------------------------------------------- pseudo-symmetric, embdim 4


def komeda_pseudosymmetric(c: Sequence[int], alpha21: int, field: Field = GF, check: bool = True) -> FamilyInstance:
    c1, c2, c3, c4 = (int(x) for x in c)
    if min(c1, c2, c3, c4) <= 1 or not 0 < alpha21 < c1 - 1:
        raise IllegalParameters(f"Komeda: need c_i > 1 and 0 < alpha21 < c1 - 1, got c={list(c)}, alpha21={alpha21}")
    al = alpha21
    a1 = c2 * c3 * (c4 - 1) + 1
    a2 = al * c3 * c4 + (c1 - al - 1) * (c3 - 1) + c3
    a3 = c1 * c4 + (c1 - al - 1) * (c2 - 1) * (c4 - 1) - c4 + 1
    a4 = c1 * c2 * (c3 - 1) + al * (c2 - 1) + c2
    gens = (a1, a2, a3, a4)
    _require_minimal(gens, "Komeda")
    rel = [
        _binom(4, {1: c1}, {3: 1, 4: c4 - 1}, field),
        _binom(4, {2: c2}, {1: al, 4: 1}, field),
        _binom(4, {3: c3}, {1: c1 - al - 1, 2: 1}, field),
        _binom(4, {4: c4}, {1: 1, 2: c2 - 1, 3: c3 - 1}, field),
        _binom(4, {3: c3 - 1, 1: al + 1}, {2: 1, 4: c4 - 1}, field),
    ]
    inst = FamilyInstance("komeda", gens, {"c": [c1, c2, c3, c4], "alpha21": al}, Ideal(rel, 4, field, gens), None, rel)
    if check:
        if not from_generators(list(gens)).is_pseudo_symmetric():
            raise OracleMismatch(f"Komeda {gens} is not pseudo-symmetric")
        _check_equal(inst.toric, toric_ideal(gens, field), f"Komeda {gens} toric ideal")
    return inst


def pseudosymmetric_four(a: int, b: int, field: Field = GF, check: bool = True) -> FamilyInstance:
    """<5, 3a+b+1, 3b-a-2, a+2b+2> via Komeda's formulas with c2=c3=c4=2."""
    if not 0 < a < b - 1 or (3 * a + b + 1) % 5 == 0:
        raise IllegalParameters(f"pseudo-symmetric family: need 0 < a < b-1 and 5 not dividing 3a+b+1, got {(a, b)}")
    inst = komeda_pseudosymmetric((b, 2, 2, 2), a, field, check)
    inst.family = "pseudosym4"
    inst.params = {"a": a, "b": b}
    return inst


PSEUDOSYM_MOD_X1 = ((3, 4), (2, 2), (3, 3), (4, 4), (2, 4))


def pseudosym_mod_x1(field: Field = GF) -> list[Polynomial]:
    """(x3x4, x2^2, x3^2, x4^2, x2x4) in K[x1..x4]."""
    return [_monomial(4, _e((i, 1), (j, 1)), field) for i, j in PSEUDOSYM_MOD_X1]


def _match_pseudosymmetric(gens: Sequence[int]) -> list[tuple[int, int, tuple[int, ...]]]:
    s = sorted(gens)
    if s[0] != 5:
        return []
    out = []
    for u, v, w in permutations(s[1:]):
        # 3a + b + 1 = u, 3b - a - 2 = v
        if (3 * u - v - 5) % 10:
            continue
        a = (3 * u - v - 5) // 10
        b = u - 1 - 3 * a
        if 0 < a < b - 1 and a + 2 * b + 2 == w and (3 * a + b + 1) % 5:
            out.append((a, b, (5, u, v, w)))
    return sorted(set(out))


def classify_pseudosym_4(H) -> FamilyVerdict:
    gens = generator_list(H)
    if len(gens) != 4:
        raise WrongEmbdim(f"expected embedding dimension 4, got {len(gens)}")
    S = from_generators(gens)
    if not S.is_pseudo_symmetric():
        raise NotPseudoSymmetric(f"{S} is not pseudo-symmetric")
    matches = _match_pseudosymmetric(gens)
    if len(matches) > 1:
        raise OracleMismatch(f"{S}: parametrization not unique: {matches}")
    if not matches:
        return FamilyVerdict(False, False, {"e": S.multiplicity}, "not of the form <5, 3a+b+1, 3b-a-2, a+2b+2>")
    a, b, ordered = matches[0]
    return FamilyVerdict(True, True, {"a": a, "b": b, "generators": list(ordered)}, "pseudo-symmetric e = 5")


# ------------------------------------------------------------ Gorenstein


def tangent_cone_is_gorenstein(H, field: Field = GF) -> bool:
    """CM (x1 regular) and last total Betti number of S/I* over S is 1."""
    from .homology import is_gorenstein_quotient
    from .tangent_cone import is_tangent_cone_CM

    gens = generator_list(H)
    if not is_tangent_cone_CM(gens, field):
        return False
    return is_gorenstein_quotient(initial_ideal(gens, field), field)


# ---------------------------------------------------- almost CI chain


def aci_chain(n: int) -> tuple[int, ...]:
    """H_4 = <6,7,8,9>, H_(k+4) = <2 H_(k+3), 3^(k+2)>; returns H_n."""
    if n < 4:
        raise IllegalParameters("the chain starts at embedding dimension 4")
    gens: tuple[int, ...] = (6, 7, 8, 9)
    for k in range(1, n - 3):
        gens = simple_glue(gens, 2, 3 ** (k + 2))
    return gens
