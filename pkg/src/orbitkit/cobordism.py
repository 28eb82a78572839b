"""Stiefel-Whitney numbers and unoriented cobordism of projective-type spaces.

A space is a disjoint union of products of atoms ``RP(n)``, ``CP(n)``,
``HP(n)`` and ``X(k)``; ``X(k)`` is CP^(2k+1) divided by the free
quaternionic involution, of dimension 4k+2. Mod-2 cohomology of every
evaluable factor is a truncated polynomial ring, and SW numbers are read off
the top monomial of the product ring.

``HP(n)`` and ``X(k)`` are not given ring presentations. Since SW numbers are
cobordism invariants they are evaluated through known representatives::

    HP(n) ~ CP(n) x CP(n)
    X(k)  ~ RP(2) x HP(k) ~ RP(2) x CP(k) x CP(k)

``X(1)`` additionally has its direct ring Z2[x, u]/(x^3, u^2) with
w = 1 + x + x^2, selected by ``direct_x3=True``.

>>> bounds(parse_space("RP(3)"))
True
>>> cobordant(parse_space("HP(1)"), parse_space("CP(1)*CP(1)"))
True
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from .errors import OrbitkitError

ATOM_KINDS = ("RP", "CP", "HP", "X")


@dataclass(frozen=True)
class Atom:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ATOM_KINDS:
            raise OrbitkitError(f"unknown atom kind {self.kind!r}")
        if self.kind == "X":
            if self.n < 0:
                raise OrbitkitError(f"X(k) needs k >= 0, got {self.n}")
        elif self.n < 1:
            raise OrbitkitError(f"{self.kind}(n) needs n >= 1, got {self.n}")

    @property
    def dim(self) -> int:
        if self.kind == "X":
            return 4 * self.n + 2
        return {"RP": 1, "CP": 2, "HP": 4}[self.kind] * self.n

    def sort_key(self):
        return (ATOM_KINDS.index(self.kind), self.n)

    def __str__(self):
        return f"{self.kind}({self.n})"


Component = tuple  # tuple[Atom, ...]: a product of atoms


@dataclass(frozen=True)
class CobordismSpace:
    """Disjoint union of product components of equal dimension."""

    components: tuple[Component, ...]

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)
        if not comps or any(not c for c in comps):
            raise OrbitkitError("a space needs at least one nonempty component")
        dims = {sum(a.dim for a in c) for c in comps}
        if len(dims) != 1:
            raise OrbitkitError(f"components have different dimensions {sorted(dims)}")

    @classmethod
    def of(cls, *atoms: Atom) -> CobordismSpace:
        """A single product component."""
        return cls((tuple(atoms),))

    @property
    def dim(self) -> int:
        return sum(a.dim for a in self.components[0])

    def __add__(self, other: CobordismSpace) -> CobordismSpace:
        return CobordismSpace(self.components + other.components)

    def __mul__(self, other: CobordismSpace) -> CobordismSpace:
        return CobordismSpace(tuple(a + b for a in self.components for b in other.components))

    def __str__(self):
        return " + ".join("*".join(str(a) for a in c) for c in self.components)


# -- truncated polynomial rings over F2 ------------------------------------

@dataclass(frozen=True)
class TruncatedRing:
    """F2[g_1, ..., g_r] / (g_i^bound_i) with deg g_i = degrees[i]."""

    degrees: tuple[int, ...]
    bounds: tuple[int, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if len(self.degrees) != len(self.bounds):
            raise OrbitkitError("degrees and bounds differ in length")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"g{i}" for i in range(len(self.degrees))))

    @property
    def top_monomial(self) -> tuple[int, ...]:
        return tuple(b - 1 for b in self.bounds)

    @property
    def top_degree(self) -> int:
        return self.degree(self.top_monomial)

    def degree(self, mono: Sequence[int]) -> int:
        return sum(d * e for d, e in zip(self.degrees, mono))

    def tensor(self, other: TruncatedRing) -> TruncatedRing:
        return TruncatedRing(self.degrees + other.degrees, self.bounds + other.bounds,
                             self.names + other.names)

    def one(self) -> GradedF2Element:
        return GradedF2Element(self, frozenset([(0,) * len(self.degrees)]))

    def zero(self) -> GradedF2Element:
        return GradedF2Element(self, frozenset())


@dataclass(frozen=True)
class GradedF2Element:
    """Sparse F2 combination of monomials; only coefficient-1 terms are stored."""

    ring: TruncatedRing
    terms: frozenset

    def __post_init__(self):
        for mono in self.terms:
            if any(e >= b or e < 0 for e, b in zip(mono, self.ring.bounds)):
                raise OrbitkitError(f"monomial {mono} violates the truncation")

    def __add__(self, other: GradedF2Element) -> GradedF2Element:
        self._check(other)
        return GradedF2Element(self.ring, self.terms ^ other.terms)

    def __mul__(self, other: GradedF2Element) -> GradedF2Element:
        self._check(other)
        bounds = self.ring.bounds
        acc = set()
        for m1 in self.terms:
            for m2 in other.terms:
                mono = tuple(a + b for a, b in zip(m1, m2))
                if all(e < b for e, b in zip(mono, bounds)):
                    acc ^= {mono}
        return GradedF2Element(self.ring, frozenset(acc))

    def _check(self, other):
        if self.ring != other.ring:
            raise OrbitkitError("elements of different rings")

    def tensor(self, other: GradedF2Element) -> GradedF2Element:
        return GradedF2Element(self.ring.tensor(other.ring),
                               frozenset(a + b for a in self.terms for b in other.terms))

    def part(self, degree: int) -> GradedF2Element:
        """Homogeneous component of the given degree."""
        return GradedF2Element(
            self.ring, frozenset(m for m in self.terms if self.ring.degree(m) == degree))

    def top_coefficient(self) -> int:
        """Pairing with the fundamental class: the coefficient of the top monomial."""
        return int(self.ring.top_monomial in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"

        def fmt(mono):
            factors = [n if e == 1 else f"{n}^{e}"
                       for n, e in zip(self.ring.names, mono) if e]
            return "*".join(factors) or "1"

        ordered = sorted(self.terms, key=lambda m: (self.ring.degree(m), m))
        return " + ".join(fmt(m) for m in ordered)


def _projective_class(dim_gen: int, n: int, name: str) -> GradedF2Element:
    # w = (1 + x)^(n+1) truncated at x^(n+1)
    ring = TruncatedRing((dim_gen,), (n + 1,), (name,))
    return GradedF2Element(ring, frozenset((k,) for k in range(n + 1) if comb(n + 1, k) % 2))


def _x3_direct_class() -> GradedF2Element:
    ring = TruncatedRing((1, 4), (3, 2), ("x", "u"))
    return GradedF2Element(ring, frozenset([(0, 0), (1, 0), (2, 0)]))


def substitute(atom: Atom) -> tuple[Atom, ...]:
    """Cobordant product of RP/CP atoms used to evaluate ``atom``."""
    if atom.kind in ("RP", "CP"):
        return (atom,)
    if atom.kind == "HP":
        return (Atom("CP", atom.n), Atom("CP", atom.n))
    if atom.n == 0:
        return (Atom("RP", 2),)
    return (Atom("RP", 2), Atom("CP", atom.n), Atom("CP", atom.n))


def total_sw_class(component: Sequence[Atom], direct_x3: bool = False) -> GradedF2Element:
    """Total SW class of a product, in the tensor product of the factor rings.

    HP and X factors are replaced by their cobordant substitutes first, so
    the ring is that of the substitute product. With ``direct_x3`` an
    ``X(1)`` factor uses its own ring Z2[x, u]/(x^3, u^2) instead.
    """
    total = None
    for atom in component:
        if direct_x3 and atom == Atom("X", 1):
            pieces = [_x3_direct_class()]
        else:
            pieces = [_projective_class(1 if a.kind == "RP" else 2, a.n,
                                        "a" if a.kind == "RP" else "c")
                      for a in substitute(atom)]
        for w in pieces:
            total = w if total is None else total.tensor(w)
    if total is None:
        raise OrbitkitError("empty product")
    return total


# -- partitions and SW numbers ---------------------------------------------

@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(p < 1 for p in self.parts):
            raise OrbitkitError(f"partition parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise OrbitkitError(f"partition parts must be non-increasing: {self.parts}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in lexicographically decreasing order."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _component_numbers(component: tuple, direct_x3: bool) -> dict[tuple[int, ...], int]:
    w = total_sw_class(component, direct_x3)
    dim = w.ring.top_degree
    classes = [w.part(j) for j in range(dim + 1)]
    out = {}
    for parts in partitions(dim):
        prod = w.ring.one()
        for j in parts:
            prod = prod * classes[j]
            if not prod:
                break
        out[parts] = prod.top_coefficient()
    return out


@lru_cache(maxsize=1024)
def sw_numbers(space: CobordismSpace, direct_x3: bool = False) -> dict[tuple[int, ...], int]:
    """Every SW number of ``space``, keyed by partition, in partition order.

    Memoized; callers must treat the returned dict as read-only.
    """
    total = None
    for comp in space.components:
        nums = _component_numbers(comp, direct_x3)
        total = nums if total is None else {k: total[k] ^ nums[k] for k in total}
    return total


def sw_number(space: CobordismSpace, partition: Partition | Sequence[int],
              direct_x3: bool = False) -> int:
    """The mod-2 number <w_I, [space]> for a partition I of dim(space)."""
    if not isinstance(partition, Partition):
        partition = Partition(tuple(partition))
    if partition.weight != space.dim:
        raise OrbitkitError(
            f"partition {partition} has weight {partition.weight}, "
            f"space {space} has dimension {space.dim}")
    return sw_numbers(space, direct_x3)[partition.parts]


def bounds(space: CobordismSpace) -> bool:
    """Whether every SW number vanishes, i.e. the space is a boundary."""
    return not any(sw_numbers(space).values())


def cobordant(s1: CobordismSpace, s2: CobordismSpace) -> bool:
    if s1.dim != s2.dim:
        raise OrbitkitError(f"dimensions differ: {s1.dim} vs {s2.dim}")
    return sw_numbers(s1) == sw_numbers(s2)


# -- space expressions -------------------------------------------------------

class SpaceSyntaxError(OrbitkitError):
    """Parse failure in a space expression; ``offset`` is a byte offset."""

    def __init__(self, message: str, text: str, pos: int):
        self.offset = len(text[:pos].encode("utf-8"))
        self.text = text
        super().__init__(f"{message} at byte {self.offset}")


_TOKEN = re.compile(r"\s*(?:(?P<atom>(?P<kind>RP|CP|HP|X)\s*\(\s*(?P<n>\d+)\s*\))|(?P<op>[*+]))")


def parse_space(text: str) -> CobordismSpace:
    """Parse ``RP(2)*CP(2) + HP(1)``: ``*`` builds products, ``+`` disjoint unions."""
    pos = 0
    components: list[list[Atom]] = [[]]
    expect_atom = True
    while True:
        rest = text[pos:]
        if not rest.strip():
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            skip = len(rest) - len(rest.lstrip())
            raise SpaceSyntaxError("unexpected input", text, pos + skip)
        start = m.start("atom") if m.group("atom") else m.start("op")
        if expect_atom:
            if not m.group("atom"):
                raise SpaceSyntaxError("expected RP(n), CP(n), HP(n) or X(k)", text, start)
            try:
                atom = Atom(m.group("kind"), int(m.group("n")))
            except OrbitkitError as exc:
                raise SpaceSyntaxError(str(exc), text, start) from None
            components[-1].append(atom)
        else:
            if not m.group("op"):
                raise SpaceSyntaxError("expected '*' or '+'", text, start)
            if m.group("op") == "+":
                components.append([])
        expect_atom = not expect_atom
        pos = m.end()
    if expect_atom:
        raise SpaceSyntaxError("expression ended where an atom was expected", text, len(text))
    try:
        return CobordismSpace(tuple(tuple(c) for c in components))
    except OrbitkitError as exc:
        raise SpaceSyntaxError(str(exc), text, 0) from None
