"""Admissible boundary components of orbit spaces with isolated non-principal orbits.

A non-principal orbit contributes a boundary component P = L \\ S^r of
dimension c - 1, where c is the cohomogeneity:

======  ====================================  ==========================
dim P   singular                              exceptional
======  ====================================  ==========================
4k      HP(k) [SU(2)], CP(2k) [U(1)]          RP(4k) [finite]
4k+2    CP(2k+1) [U(1)], X(k) [N_SU(2)U(1)]   RP(4k+2) [finite]
2k+1    none                                  L \\ S^(2k+1) [finite]
======  ====================================  ==========================

Odd-dimensional sphere quotients depend on the unspecified group L and are
carried symbolically, flagged as undetermined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

from .cobordism import Atom, CobordismSpace, bounds, cobordant
from .errors import OrbitkitError

OrbitKind = Literal["singular", "exceptional"]

U1 = "U(1)"
NORMALIZER = "N_SU(2)U(1)"
SU2 = "SU(2)"
FINITE = "finite"

_KIND_ORDER = ("RP", "CP", "HP", "X", "SQ")


@dataclass(frozen=True)
class BoundaryComponent:
    """One row of the boundary table.

    ``atom`` is None for a symbolic sphere quotient L \\ S^dim.
    """

    dimension: int
    orbit_kind: OrbitKind
    slice_group: str
    atom: Optional[Atom] = None

    @property
    def symbolic(self) -> bool:
        return self.atom is None

    @property
    def label(self) -> str:
        return str(self.atom) if self.atom else f"L\\S^{self.dimension}"

    def space(self) -> CobordismSpace:
        if self.atom is None:
            raise OrbitkitError(f"{self.label} has no cobordism class without L")
        return CobordismSpace.of(self.atom)

    def sort_key(self):
        if self.atom is None:
            return (_KIND_ORDER.index("SQ"), self.dimension, self.slice_group)
        return (_KIND_ORDER.index(self.atom.kind), self.atom.n, self.slice_group)

    def __str__(self):
        return f"{self.label} [{self.slice_group}]"


def _check_cohomogeneity(c: int):
    if c < 2:
        raise OrbitkitError(f"cohomogeneity must be >= 2, got {c}")


def possible_boundaries(c: int, kind: str = "both") -> list[BoundaryComponent]:
    """Boundary components of dimension c - 1 allowed by the table."""
    _check_cohomogeneity(c)
    if kind not in ("singular", "exceptional", "both"):
        raise OrbitkitError(f"kind must be singular, exceptional or both, got {kind!r}")
    d = c - 1
    out = []
    if d % 4 == 0:
        k = d // 4
        out += [BoundaryComponent(d, "singular", SU2, Atom("HP", k)),
                BoundaryComponent(d, "singular", U1, Atom("CP", 2 * k)),
                BoundaryComponent(d, "exceptional", FINITE, Atom("RP", d))]
    elif d % 4 == 2:
        k = (d - 2) // 4
        out += [BoundaryComponent(d, "singular", U1, Atom("CP", 2 * k + 1)),
                BoundaryComponent(d, "singular", NORMALIZER, Atom("X", k)),
                BoundaryComponent(d, "exceptional", FINITE, Atom("RP", d))]
    else:
        out.append(BoundaryComponent(d, "exceptional", FINITE))
    if kind != "both":
        out = [b for b in out if b.orbit_kind == kind]
    return sorted(out, key=BoundaryComponent.sort_key)


def unique_orbit_boundaries(c: int) -> list[BoundaryComponent]:
    """Components that can be the whole boundary, i.e. a single non-principal orbit.

    Evaluable components are kept iff they bound; symbolic sphere quotients
    are kept and remain undetermined (``symbolic`` is True).
    """
    return [b for b in possible_boundaries(c, "both")
            if b.symbolic or bounds(b.space())]


@dataclass(frozen=True)
class Pairing:
    first: BoundaryComponent
    second: BoundaryComponent

    @property
    def determined(self) -> bool:
        return not (self.first.symbolic or self.second.symbolic)

    def __str__(self):
        return f"{self.first} | {self.second}"


def two_orbit_pairings(c: int) -> list[Pairing]:
    """Unordered pairs (P1, P2) whose disjoint union bounds."""
    comps = possible_boundaries(c, "both")
    out = []
    for i, p in enumerate(comps):
        for q in comps[i:]:
            if p.symbolic or q.symbolic or cobordant(p.space(), q.space()):
                out.append(Pairing(p, q))
    return out


@dataclass(frozen=True)
class OrbitCountRule:
    """Which counts m of non-principal orbits are known to be realizable."""

    asserted: bool
    minimum: Optional[int] = None
    even_only: bool = False

    def allows(self, m: int) -> Optional[bool]:
        """True/False when the rule covers m; None when nothing is asserted."""
        if not self.asserted:
            return None
        return m >= self.minimum and (not self.even_only or m % 2 == 0)

    def __str__(self):
        if not self.asserted:
            return "not asserted"
        return f"all even m >= {self.minimum}" if self.even_only else f"all m >= {self.minimum}"


def achievable_orbit_counts(c: int, kind: str) -> OrbitCountRule:
    _check_cohomogeneity(c)
    if kind not in ("singular", "exceptional"):
        raise OrbitkitError(f"kind must be singular or exceptional, got {kind!r}")
    if kind == "singular" and c % 4 == 3:
        return OrbitCountRule(True, 1)
    if kind == "exceptional" and c % 2 == 0:
        return OrbitCountRule(True, 1)
    if kind == "singular" and c % 4 == 1:
        return OrbitCountRule(True, 2, even_only=True)
    return OrbitCountRule(False)
