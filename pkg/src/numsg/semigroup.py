"""Numerical semigroups: membership, Frobenius data, order function.

Membership is answered from the Apery set with respect to the multiplicity,
computed once by a shortest-path pass over residues.  The order function
``ord(h)`` (maximal length of a factorization) is a dynamic program whose
table grows on demand.
"""

from __future__ import annotations

import heapq
import threading
from functools import reduce
from math import gcd
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import EmptyInput, NonCoprime, NonPositive, NotInSemigroup


def _span_table(gens: Sequence[int], limit: int) -> list[bool]:
    """table[h] is True iff h in <gens> for 0 <= h <= limit."""
    table = [False] * (limit + 1)
    table[0] = True
    for h in range(1, limit + 1):
        for a in gens:
            if a <= h and table[h - a]:
                table[h] = True
                break
    return table


def in_span(gens: Iterable[int], h: int) -> bool:
    """True iff h is a non-negative integer combination of ``gens``.

    ``gens`` need not generate a numerical semigroup (gcd may exceed 1).
    """
    gens = [a for a in gens if a > 0]
    if h < 0:
        return False
    if h == 0:
        return True
    if not gens:
        return False
    return _span_table(gens, h)[h]


def minimalize(raw: Iterable[int]) -> list[int]:
    """Drop redundant generators, testing the largest candidates first."""
    gens = sorted(set(raw))
    changed = True
    while changed:
        changed = False
        for a in sorted(gens, reverse=True):
            rest = [b for b in gens if b != a]
            if rest and in_span(rest, a):
                gens = rest
                changed = True
                break
    return gens


class NumericalSemigroup:
    """A numerical semigroup given by its minimal generators.

    Instances are immutable apart from internal memo tables, which are
    guarded by a lock so that one object can be shared between threads.
    """

    __slots__ = ("generators", "_lock", "_apery", "_ord", "_ord_max")

    def __init__(self, generators: Sequence[int]):
        self.generators: tuple[int, ...] = tuple(generators)
        self._lock = threading.Lock()
        self._apery: list[int] | None = None
        self._ord: list[int] = [0]
        self._ord_max = 0

    @classmethod
    def from_generators(cls, raw: Sequence[int]) -> "NumericalSemigroup":
        raw = list(raw)
        if not raw:
            raise EmptyInput("no generators given")
        if any(a <= 0 for a in raw):
            raise NonPositive(f"generators must be positive: {raw}")
        if reduce(gcd, raw) != 1:
            raise NonCoprime(f"gcd of {raw} is {reduce(gcd, raw)}")
        return cls(minimalize(raw))

    # -- basic invariants -------------------------------------------------

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embdim(self) -> int:
        return len(self.generators)

    def is_N(self) -> bool:
        return self.generators == (1,)

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "<" + ",".join(map(str, self.generators)) + ">"

    def __reduce__(self):
        return (NumericalSemigroup, (self.generators,))

    # -- membership -------------------------------------------------------

    def _apery_mult(self) -> list[int]:
        with self._lock:
            if self._apery is None:
                self._apery = _apery_dijkstra(self.generators)
            return self._apery

    def __contains__(self, h: int) -> bool:
        if h < 0:
            return False
        ap = self._apery_mult()
        return h >= ap[h % self.multiplicity]

    def contains(self, h: int) -> bool:
        return h in self

    def frobenius_number(self) -> int:
        """Largest integer not in H; -1 for H = N."""
        return max(self._apery_mult()) - self.multiplicity

    def conductor(self) -> int:
        return self.frobenius_number() + 1

    def gaps(self) -> list[int]:
        return [h for h in range(1, self.frobenius_number() + 1) if h not in self]

    def genus(self) -> int:
        return len(self.gaps())

    def apery_set(self, n: int | None = None) -> list[int]:
        """Least element of H in each residue class mod n, indexed by residue."""
        if n is None:
            n = self.multiplicity
        if n <= 0 or n not in self:
            raise NotInSemigroup(f"{n} is not a nonzero element of {self!r}")
        if n == self.multiplicity:
            return list(self._apery_mult())
        out = [-1] * n
        found = 0
        h = 0
        while found < n:
            if h in self and out[h % n] < 0:
                out[h % n] = h
                found += 1
            h += 1
        return out

    def pseudo_frobenius(self) -> list[int]:
        if self.is_N():
            return [-1]
        return [f for f in self.gaps() if all((f + a) in self for a in self.generators)]

    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def is_symmetric(self) -> bool:
        return self.pseudo_frobenius() == [self.frobenius_number()]

    def is_pseudo_symmetric(self) -> bool:
        g = self.frobenius_number()
        return g % 2 == 0 and g > 0 and self.pseudo_frobenius() == [g // 2, g]

    # -- order function ---------------------------------------------------

    def _extend_ord(self, limit: int) -> list[int]:
        with self._lock:
            table = self._ord
            for h in range(len(table), limit + 1):
                best = -1
                for a in self.generators:
                    if a > h:
                        break
                    prev = table[h - a]
                    if prev >= 0 and prev + 1 > best:
                        best = prev + 1
                table.append(best)
            return table

    def order_of(self, h: int) -> int:
        """Maximal length of a factorization of h into minimal generators."""
        if h < 0 or h not in self:
            raise NotInSemigroup(f"{h} is not in {self!r}")
        return self._extend_ord(h)[h]

    def order_table(self, limit: int) -> list[int]:
        """ord(h) for h = 0..limit with -1 marking non-members."""
        return self._extend_ord(limit)[: limit + 1]

    def gr_hilbert_function(self, i: int) -> int:
        """#{h in H : ord(h) = i}, the Hilbert function of gr_m K[H]."""
        if i < 0:
            return 0
        if i == 0:
            return 1
        lo, hi = i * self.generators[0], i * self.generators[-1]
        table = self._extend_ord(hi)
        return sum(1 for h in range(lo, hi + 1) if table[h] == i)

    def elements_of_order(self, i: int) -> list[int]:
        if i == 0:
            return [0]
        lo, hi = i * self.generators[0], i * self.generators[-1]
        table = self._extend_ord(hi)
        return [h for h in range(lo, hi + 1) if table[h] == i]

    def hilbert_stabilization(self) -> int:
        """First i with gr_hilbert_function(i) = e(H); constant from there on.

        In a one-dimensional Cohen-Macaulay ring the value e forces
        m^{i+1} = t^e m^i, so the function stays at e afterwards.
        """
        e = self.multiplicity
        i = 0
        while self.gr_hilbert_function(i) != e:
            i += 1
        return i

    def order_witness(self, h: int, gens: Sequence[int] | None = None) -> tuple[int, ...]:
        """Exponent vector of a maximal-length factorization of h.

        Among all maximal-length factorizations the lexicographically
        greatest vector (lambda_1, lambda_2, ...) is returned.
        """
        gens = tuple(self.generators if gens is None else gens)
        target = self.order_of(h)
        best = _suffix_orders(gens, h)
        lam = []
        rest = h
        need = target
        for k, a in enumerate(gens):
            if k == len(gens) - 1:
                if rest % a:
                    raise AssertionError("witness extraction failed")
                lam.append(rest // a)
                break
            for c in range(rest // a, -1, -1):
                r = best[k + 1].get(rest - c * a, -1)
                if r >= 0 and c + r == need:
                    lam.append(c)
                    rest -= c * a
                    need -= c
                    break
        return tuple(lam)


def _suffix_orders(gens: Sequence[int], h: int) -> list[dict[int, int]]:
    """best[k][v] = max factorization length of v using gens[k:], v <= h."""
    m = len(gens)
    best: list[dict[int, int]] = [dict() for _ in range(m + 1)]
    best[m] = {0: 0}
    for k in range(m - 1, -1, -1):
        a = gens[k]
        table = [-1] * (h + 1)
        for v, length in best[k + 1].items():
            table[v] = length
        for v in range(a, h + 1):
            if table[v - a] >= 0 and table[v - a] + 1 > table[v]:
                table[v] = table[v - a] + 1
        best[k] = {v: length for v, length in enumerate(table) if length >= 0}
    return best


def _apery_dijkstra(gens: Sequence[int]) -> list[int]:
    e = gens[0]
    dist = [None] * e
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d != dist[r]:
            continue
        for a in gens[1:]:
            nd = d + a
            nr = nd % e
            if dist[nr] is None or nd < dist[nr]:
                dist[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return dist


def from_generators(raw: Sequence[int]) -> NumericalSemigroup:
    return NumericalSemigroup.from_generators(raw)


N = NumericalSemigroup((1,))


def enumerate_semigroups(embdim: int, max_gen: int) -> Iterator[tuple[int, ...]]:
    """Sorted minimal generating systems of numerical semigroups with
    ``embdim`` generators, all at most ``max_gen``, in lex order."""
    if embdim == 1:
        if max_gen >= 1:
            yield (1,)
        return
    for c in combinations(range(2, max_gen + 1), embdim):
        if c[0] < embdim or gcd(*c) != 1:
            continue
        if tuple(minimalize(c)) == c:
            yield c
