"""Aloff-Wallach spaces W(p1, p2) = SU(3) / circle with weights (p1, p2, -p1-p2).

Only homotopy-level invariants live here: the order of H^4, Kruggel's
homotopy criterion, and a canonical representative under the 12 weight
symmetries (permute the three weights, negate all of them).

>>> homotopy_equivalent(WeightPair(1, 9), WeightPair(5, 6))
False
>>> canonical_form(WeightPair(9, 1))
WeightPair(p1=1, p2=9)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import gcd

from .errors import OrbitkitError


@dataclass(frozen=True, order=True)
class WeightPair:
    p1: int
    p2: int

    def __post_init__(self):
        if gcd(self.p1, self.p2) != 1:
            raise OrbitkitError(
                f"weights ({self.p1}, {self.p2}) must be coprime and not both zero")

    @property
    def weights(self) -> tuple[int, int, int]:
        return (self.p1, self.p2, -self.p1 - self.p2)

    @property
    def degenerate(self) -> bool:
        """True when one of the three weights vanishes."""
        return self.p1 * self.p2 * (self.p1 + self.p2) == 0

    def __iter__(self):
        return iter((self.p1, self.p2))

    def __str__(self):
        return f"W({self.p1},{self.p2})"


def aw_order(w: WeightPair) -> int:
    """Order of H^4(W; Z), namely p1^2 + p1 p2 + p2^2."""
    return w.p1 * w.p1 + w.p1 * w.p2 + w.p2 * w.p2


def kruggel_residue(w: WeightPair) -> int:
    """p1 p2 (p1 + p2) reduced mod aw_order(w)."""
    return (w.p1 * w.p2 * (w.p1 + w.p2)) % aw_order(w)


def homotopy_equivalent(w: WeightPair, v: WeightPair) -> bool:
    """Kruggel's criterion: equal H^4 orders and matching residues up to sign."""
    n = aw_order(w)
    if aw_order(v) != n:
        return False
    s = w.p1 * w.p2 * (w.p1 + w.p2)
    t = v.p1 * v.p2 * (v.p1 + v.p2)
    return (s - t) % n == 0 or (s + t) % n == 0


def symmetry_orbit(w: WeightPair) -> set[WeightPair]:
    """All pairs naming the same space: ordered pairs of the three weights, +/-."""
    out = set()
    for a, b, _ in permutations(w.weights):
        out.add(WeightPair(a, b))
        out.add(WeightPair(-a, -b))
    return out


def canonical_key(w: WeightPair):
    """Total order used to pick representatives: |p1| + |p2| first."""
    # ties on |a|+|b| are broken toward pairs with no negative entry
    return (abs(w.p1) + abs(w.p2), w.p1 < 0 or w.p2 < 0, w.p1, w.p2)


def canonical_form(w: WeightPair) -> WeightPair:
    """Least element of the symmetry orbit; always satisfies 0 <= p1 <= p2."""
    return min(symmetry_orbit(w), key=canonical_key)
