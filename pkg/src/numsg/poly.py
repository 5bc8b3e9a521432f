"""Exact multivariate polynomials over F_p or Q, term orders, initial forms.

Monomials are plain tuples of exponents.  A ``Polynomial`` wraps a dict
``{exponent tuple: coefficient}`` with no zero coefficients.  Coefficients
are ints reduced mod p for a prime field and ``Fraction`` for Q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import ZeroPolynomial

DEFAULT_PRIME = 32003
SECOND_PRIME = 31991

Monomial = tuple


# ---------------------------------------------------------------- fields


@dataclass(frozen=True)
class Field:
    """F_p for a prime p, or Q when ``p == 0``."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __call__(self, c):
        if self.p:
            if isinstance(c, Fraction):
                return c.numerator * pow(c.denominator, -1, self.p) % self.p
            return int(c) % self.p
        return Fraction(c)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return a * b % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p) if self.p else 1 / Fraction(a)

    def one(self):
        return 1 if self.p else Fraction(1)

    def symmetric(self, a):
        """Representative of a in (-p/2, p/2] for display."""
        if self.p and a > self.p // 2:
            return a - self.p
        return a

    def __str__(self):
        return f"GF({self.p})" if self.p else "QQ"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


GF = Field()


# ------------------------------------------------------------ monomials


def mdeg(m: Monomial) -> int:
    return sum(m)


def mmul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mdiv(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mdivides(b: Monomial, a: Monomial) -> bool:
    """True iff b divides a."""
    return all(y <= x for x, y in zip(a, b))


def mlcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mgcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


def mone(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


# ---------------------------------------------------------- term orders


class TermOrder:
    """A global monomial order built from weight, lex and revlex blocks.

    The sort key is the concatenation of the block keys; a larger key is a
    larger monomial.  ``('weight', w)`` contributes ``w . m``,
    ``('lex', vars)`` the exponents of ``vars`` (first = largest variable),
    ``('revlex', vars)`` the negated exponents of ``vars`` read from the
    smallest variable up.
    """

    __slots__ = ("name", "blocks", "_cache")

    def __init__(self, name: str, blocks: Sequence[tuple[str, tuple]]):
        self.name = name
        self.blocks = tuple((kind, tuple(data)) for kind, data in blocks)
        self._cache: dict = {}

    def key(self, m: Monomial) -> tuple:
        k = self._cache.get(m)
        if k is None:
            parts = []
            for kind, data in self.blocks:
                if kind == "weight":
                    parts.append(sum(w * e for w, e in zip(data, m)))
                elif kind == "lex":
                    parts.extend(m[v] for v in data)
                else:
                    parts.extend(-m[v] for v in reversed(data))
            k = tuple(parts)
            if len(self._cache) < 500_000:
                self._cache[m] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self):
        return f"TermOrder({self.name})"

    def __reduce__(self):
        return (TermOrder, (self.name, self.blocks))


def _ranking(n: int, perm: Sequence[int] | None) -> tuple[int, ...]:
    ranking = tuple(range(n)) if perm is None else tuple(perm)
    if len(set(ranking)) != len(ranking) or any(not 0 <= v < n for v in ranking):
        raise ValueError(f"bad variable ranking {perm}")
    return ranking


def _ranking_name(ranking: Sequence[int]) -> str:
    return ">".join(f"x{v + 1}" for v in ranking)


def lex(n: int, perm: Sequence[int] | None = None) -> TermOrder:
    """Lex with ``perm[0] > perm[1] > ...`` (default x1 > x2 > ...)."""
    r = _ranking(n, perm)
    return TermOrder(f"lex({_ranking_name(r)})", [("lex", r)])


def degrevlex(n: int, perm: Sequence[int] | None = None) -> TermOrder:
    """Degree reverse lex with ``perm[0] > perm[1] > ...``."""
    r = _ranking(n, perm)
    w = tuple(1 if v in r else 0 for v in range(n))
    return TermOrder(f"degrevlex({_ranking_name(r)})", [("weight", w), ("revlex", r)])


def weighted(weights: Sequence[int], tie: TermOrder, name: str | None = None) -> TermOrder:
    """Compare by the weight vector first, then by ``tie``."""
    return TermOrder(name or f"weighted({list(weights)};{tie.name})",
                     [("weight", tuple(weights))] + list(tie.blocks))


def block(first: TermOrder, second: TermOrder) -> TermOrder:
    """Block order: ``first`` decides, ``second`` breaks ties."""
    return TermOrder(f"block({first.name};{second.name})", list(first.blocks) + list(second.blocks))


# ----------------------------------------------------------- polynomials


class Polynomial:
    """Immutable sparse polynomial in ``nvars`` variables over ``field``."""

    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms: Mapping[Monomial, object], nvars: int, field: Field = GF, _clean=False):
        if _clean:
            self.terms = dict(terms)
        else:
            cleaned = {}
            for m, c in terms.items():
                m = tuple(m)
                if len(m) != nvars or any(e < 0 for e in m):
                    raise ValueError(f"bad exponent vector {m} for {nvars} variables")
                cleaned[m] = field.add(cleaned.get(m, field(0)), field(c))
            self.terms = {m: c for m, c in cleaned.items() if c}
        self.nvars = nvars
        self.field = field

    # construction helpers
    @classmethod
    def zero(cls, n: int, field: Field = GF) -> "Polynomial":
        return cls({}, n, field, _clean=True)

    @classmethod
    def monomial(cls, m: Monomial, n: int | None = None, field: Field = GF, coeff=1) -> "Polynomial":
        n = len(m) if n is None else n
        return cls({tuple(m): coeff}, n, field)

    @classmethod
    def binomial(cls, a: Monomial, b: Monomial, field: Field = GF) -> "Polynomial":
        """x^a - x^b."""
        return cls({tuple(a): 1, tuple(b): -1}, len(a), field) if tuple(a) != tuple(b) else cls.zero(len(a), field)

    @classmethod
    def var(cls, i: int, n: int, field: Field = GF) -> "Polynomial":
        return cls.monomial(variable(n, i), n, field)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __reduce__(self):
        return (Polynomial, (self.terms, self.nvars, self.field, True))

    # arithmetic
    def _like(self, terms) -> "Polynomial":
        return Polynomial(terms, self.nvars, self.field, _clean=True)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        F = self.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, 0), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return self._like(out)

    def __neg__(self) -> "Polynomial":
        return self._like({m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        return self._like({m: self.field.mul(a, c) for m, a in self.terms.items()})

    def mul_term(self, mono: Monomial, c=1) -> "Polynomial":
        c = self.field(c)
        if not c:
            return Polynomial.zero(self.nvars, self.field)
        F = self.field
        return self._like({mmul(m, mono): F.mul(a, c) for m, a in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        F = self.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mmul(m1, m2)
                s = F.add(out.get(m, 0), F.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial.monomial(mone(self.nvars), self.nvars, self.field)
        for _ in range(k):
            out = out * self
        return out

    # degrees and forms
    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("degree of zero polynomial")
        return max(mdeg(m) for m in self.terms)

    def initial_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("initial degree of zero polynomial")
        return min(mdeg(m) for m in self.terms)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        if weights is None:
            degs = {mdeg(m) for m in self.terms}
        else:
            degs = {sum(w * e for w, e in zip(weights, m)) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_part(self, d: int) -> "Polynomial":
        return self._like({m: c for m, c in self.terms.items() if mdeg(m) == d})

    def initial_form(self) -> "Polynomial":
        return initial_form(self)

    def leading_monomial(self, order: TermOrder) -> Monomial:
        if not self.terms:
            raise ZeroPolynomial("leading monomial of zero polynomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: TermOrder):
        return self.terms[self.leading_monomial(order)]

    def leading_term(self, order: TermOrder) -> tuple[object, Monomial]:
        m = self.leading_monomial(order)
        return self.terms[m], m

    def monic(self, order: TermOrder) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.leading_coefficient(order)))

    def sorted_terms(self, order: TermOrder) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def substitute_monomial_map(self, images: Sequence[Monomial], nvars: int) -> "Polynomial":
        """Apply x_i -> (monomial images[i]) into a ring with ``nvars`` variables."""
        F = self.field
        out: dict = {}
        for m, c in self.terms.items():
            img = mone(nvars)
            for e, im in zip(m, images):
                if e:
                    img = tuple(x + e * y for x, y in zip(img, im))
            s = F.add(out.get(img, 0), c)
            if s:
                out[img] = s
            else:
                out.pop(img, None)
        return Polynomial(out, nvars, F, _clean=True)

    def evaluate_variable(self, i: int, value) -> "Polynomial":
        """Substitute x_i -> value (a constant), keeping the ring."""
        F = self.field
        value = F(value)
        out: dict = {}
        for m, c in self.terms.items():
            e = m[i]
            if e and not value:
                continue
            coeff = F.mul(c, pow(value, e, F.p) if F.p else value ** e) if e else c
            mm = m[:i] + (0,) + m[i + 1:]
            s = F.add(out.get(mm, 0), coeff)
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        return self._like(out)

    def permute(self, perm: Sequence[int]) -> "Polynomial":
        """Rename variable x_i to x_{perm[i]}."""
        out = {}
        for m, c in self.terms.items():
            mm = [0] * self.nvars
            for i, e in enumerate(m):
                mm[perm[i]] = e
            out[tuple(mm)] = c
        return self._like(out)

    def embed(self, nvars: int, positions: Sequence[int] | None = None) -> "Polynomial":
        """View as a polynomial in a larger ring; x_i goes to x_{positions[i]}."""
        positions = list(range(self.nvars)) if positions is None else list(positions)
        out = {}
        for m, c in self.terms.items():
            mm = [0] * nvars
            for i, e in enumerate(m):
                mm[positions[i]] = e
            out[tuple(mm)] = c
        return Polynomial(out, nvars, self.field, _clean=True)

    def with_field(self, field: Field) -> "Polynomial":
        return Polynomial({m: (self.field.symmetric(c) if self.field.p else c) for m, c in self.terms.items()},
                          self.nvars, field)

    # text
    def to_str(self, order: TermOrder | None = None, names: Sequence[str] | None = None) -> str:
        return format_polynomial(self, order, names)

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


def initial_form(f: Polynomial) -> Polynomial:
    """Homogeneous component of least total degree."""
    if f.is_zero():
        raise ZeroPolynomial("initial form of zero polynomial")
    return f.homogeneous_part(f.initial_degree())


def leading_term(f: Polynomial, order: TermOrder) -> tuple[object, Monomial]:
    return f.leading_term(order)


def compare(m1: Monomial, m2: Monomial, order: TermOrder) -> int:
    return order.compare(tuple(m1), tuple(m2))


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder) -> Polynomial:
    """(L/lt f) f - (L/lt g) g with L the lcm of the leading monomials."""
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomial("S-polynomial of zero polynomial")
    F = f.field
    cf, mf = f.leading_term(order)
    cg, mg = g.leading_term(order)
    L = mlcm(mf, mg)
    return f.mul_term(mdiv(L, mf), F.inv(cf)) - g.mul_term(mdiv(L, mg), F.inv(cg))


# -------------------------------------------------------------- text io


def default_names(n: int) -> list[str]:
    return [f"x{i + 1}" for i in range(n)]


def format_monomial(m: Monomial, names: Sequence[str] | None = None) -> str:
    names = names or default_names(len(m))
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


def format_polynomial(f: Polynomial, order: TermOrder | None = None, names: Sequence[str] | None = None) -> str:
    if f.is_zero():
        return "0"
    order = order or degrevlex(f.nvars)
    out = []
    for m, c in f.sorted_terms(order):
        c = f.field.symmetric(c)
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        mono = format_monomial(m, names)
        if mono == "1":
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += sign + body
    return text


_TERM = re.compile(r"([+-]?)([^+-]+)")
_FACTOR = re.compile(r"^(?:([A-Za-z_]\w*?)(\d+)|([A-Za-z_]\w*)\((\d+)\))(?:\^(\d+))?$")


def parse_polynomial(text: str, nvars: int, field: Field = GF) -> Polynomial:
    """Parse ``x2^2-x1*x4`` style text (also Singular's ``x(2)^2``)."""
    s = text.replace(" ", "").replace("**", "^")
    if not s or s == "0":
        return Polynomial.zero(nvars, field)
    terms: dict = {}
    for sign, body in _TERM.findall(s):
        coeff: object = Fraction(1)
        expo = [0] * nvars
        for factor in body.split("*"):
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
                continue
            mt = _FACTOR.match(factor)
            if not mt:
                raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
            idx = int(mt.group(2) or mt.group(4)) - 1
            if not 0 <= idx < nvars:
                raise ValueError(f"variable index out of range in {factor!r}")
            expo[idx] += int(mt.group(5) or 1)
        if sign == "-":
            coeff = -coeff
        m = tuple(expo)
        terms[m] = terms.get(m, 0) + coeff
    return Polynomial(terms, nvars, field)


def parse_polynomials(texts: Iterable[str], nvars: int, field: Field = GF) -> list[Polynomial]:
    return [parse_polynomial(t, nvars, field) for t in texts]
