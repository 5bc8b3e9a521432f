"""Sparse incremental row echelon form over F_p.

Vectors are dicts ``{column key: coeff}``; column keys only need a total
order.  Graded pieces in this package are small and very sparse, so dict
rows beat dense arrays here.
"""

from __future__ import annotations


class Echelon:
    """Row space under construction.

    ``insert`` reduces a vector against the pivots found so far and keeps it
    when it is independent.  With ``track=True`` each stored row remembers
    which inserted vectors it combines, and ``insert`` returns that
    combination for vectors that reduce to zero (a kernel element).
    """

    __slots__ = ("p", "pivots", "track", "_count")

    def __init__(self, p: int, track: bool = False):
        self.p = p
        self.pivots: dict = {}
        self.track = track
        self._count = 0

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, vec: dict, combo: dict | None):
        p = self.p
        vec = {k: c % p for k, c in vec.items() if c % p}
        pivots = self.pivots
        while vec:
            lead = min(vec)
            row = pivots.get(lead)
            if row is None:
                return vec, lead, combo
            prow, pcombo = row
            factor = vec[lead]
            for k, c in prow.items():
                s = (vec.get(k, 0) - factor * c) % p
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
            if combo is not None:
                for k, c in pcombo.items():
                    s = (combo.get(k, 0) - factor * c) % p
                    if s:
                        combo[k] = s
                    else:
                        combo.pop(k, None)
        return vec, None, combo

    def insert(self, vec: dict, label=None):
        """Add ``vec``; returns (independent: bool, kernel combo or None)."""
        p = self.p
        if self.track:
            tag = self._count if label is None else label
            combo = {tag: 1}
        else:
            combo = None
        self._count += 1
        rest, lead, combo = self._reduce(dict(vec), combo)
        if lead is None:
            return False, combo
        inv = pow(rest[lead], -1, p)
        rest = {k: c * inv % p for k, c in rest.items()}
        if combo is not None:
            combo = {k: c * inv % p for k, c in combo.items()}
        self.pivots[lead] = (rest, combo)
        return True, None

    def contains(self, vec: dict) -> bool:
        rest, lead, _ = self._reduce(dict(vec), None)
        return lead is None


def rank(vectors, p: int) -> int:
    ech = Echelon(p)
    for v in vectors:
        ech.insert(v)
    return ech.rank


def left_kernel(rows: list[dict], p: int) -> list[dict]:
    """Basis of {c : sum_i c_i rows[i] = 0}, as dicts over row indices."""
    ech = Echelon(p, track=True)
    out = []
    for i, r in enumerate(rows):
        independent, combo = ech.insert(r, label=i)
        if not independent:
            out.append(combo)
    return out
