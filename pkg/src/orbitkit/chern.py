"""Chern classes of circle embeddings z -> diag(z^p1, ..., z^pn) into U(n) or SU(n).

Classes live in H*(CP^m; Z) = Z[x]/x^(m+1), so a total Chern class is just
its list of integer coefficients sigma_0, ..., sigma_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Literal

from .aw import WeightPair, aw_order
from .errors import OrbitkitError

GroupKind = Literal["U", "SU"]


@dataclass(frozen=True)
class WeightVector:
    weights: tuple[int, ...]
    group_kind: GroupKind = "U"

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(p) for p in self.weights))
        if not self.weights:
            raise OrbitkitError("need at least one weight")
        if self.group_kind not in ("U", "SU"):
            raise OrbitkitError(f"group kind must be 'U' or 'SU', got {self.group_kind!r}")
        if self.group_kind == "SU" and sum(self.weights) != 0:
            raise OrbitkitError(f"SU({self.n}) weights must sum to 0: {self.weights}")
        if reduce(gcd, self.weights, 0) != 1:
            raise OrbitkitError(
                f"weights {self.weights} have a common factor; the circle map is not injective")

    @property
    def n(self) -> int:
        return len(self.weights)

    @classmethod
    def from_pair(cls, w: WeightPair) -> WeightVector:
        """The SU(3) weights (p1, p2, -p1-p2) of an Aloff-Wallach circle."""
        return cls(w.weights, "SU")


def elementary_symmetric(values) -> list[int]:
    """[e_0, e_1, ..., e_n], read off prod (1 + v t)."""
    coeffs = [1]
    for v in values:
        coeffs = [a + v * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs


def chern_classes(p: WeightVector) -> list[int]:
    return elementary_symmetric(p.weights)


def bundles_isomorphic(p: WeightVector, q: WeightVector, m: int) -> bool:
    """Whether the two associated bundles over CP^m have equal Chern classes.

    Classes of degree above m vanish in H*(CP^m), so only sigma_1 ..
    sigma_min(n, m) are compared.
    """
    if m < 1:
        raise OrbitkitError(f"base dimension m must be >= 1, got {m}")
    if p.n != q.n or p.group_kind != q.group_kind:
        raise OrbitkitError(
            f"cannot compare {p.group_kind}({p.n}) with {q.group_kind}({q.n}) weights")
    cp, cq = chern_classes(p), chern_classes(q)
    top = min(p.n, m)
    return cp[1:top + 1] == cq[1:top + 1]


def m13_exists(w: WeightPair, v: WeightPair) -> bool:
    """Existence of the 13-dimensional SU(3)-manifold with orbits W(w), W(v)."""
    return aw_order(w) == aw_order(v)
