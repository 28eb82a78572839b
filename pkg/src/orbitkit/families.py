"""Infinite families of SU(3)-manifolds with two Aloff-Wallach singular orbits.

M11 (cohomogeneity 3) exists for every pair of orbits. Members are told apart
by ``dim H^4(M) (x) Z/l``, which the Mayer-Vietoris sequence

    0 -> Z -> H^4(M) -> Z/order1 + Z/order2 -> 0

pins to an interval ``[d, d+1]``, with d the dimension of the torsion
quotient tensored with Z/l. Two members with disjoint intervals at some prime
are not homotopy equivalent, and the separating prime plus both intervals are
kept as a certificate. The group H^4(M11) itself is not computed; the
extension is not determined by the sequence.

Note: the sequence is only derived for orders (r, r r') with r, r' primes
= 1 mod 3. Applying the same shape to arbitrary orbit pairs is this module's
generalization.

M13 (cohomogeneity 5, orbit space the suspension of CP^2) exists iff the two
orbits have equal H^4 order r, and then H^4(M13) is the kernel of the
addition map Z/r + Z/r -> Z/r, which is cyclic of order r.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from sympy import primefactors

from .aw import WeightPair, aw_order, homotopy_equivalent
from .chern import m13_exists
from .errors import OrbitkitError, SearchBoundError
from .fgab import FgAbGroup, IntMatrix, Presentation, hom_kernel, tensor_dim
from .numtheory import (DEFAULT_SIEVE_LIMIT, coprime_representations,
                        primes_1_mod_3, primes_1_mod_3_upto)

Interval = tuple[int, int]


@dataclass(frozen=True)
class M11Instance:
    orbit1: WeightPair
    orbit2: WeightPair

    @property
    def order1(self) -> int:
        return aw_order(self.orbit1)

    @property
    def order2(self) -> int:
        return aw_order(self.orbit2)

    @classmethod
    def from_orders(cls, order1: int, order2: int,
                    scan_limit: Optional[int] = None) -> M11Instance:
        """Instance whose orbits are the preferred representations of the orders."""
        return cls(_representative(order1, scan_limit), _representative(order2, scan_limit))


@dataclass(frozen=True)
class DistinctnessCertificate:
    prime: int
    interval_i: Interval
    interval_j: Interval

    @property
    def valid(self) -> bool:
        return self.interval_i[1] < self.interval_j[0] or self.interval_j[1] < self.interval_i[0]


def _representative(n: int, scan_limit: Optional[int]) -> WeightPair:
    reps = coprime_representations(n, scan_limit)
    if not reps:
        raise SearchBoundError(f"no coprime representation of {n} found")
    return reps[0]


def m11_tensor_bounds(inst: M11Instance, l: int) -> Interval:
    """Bounds ``[d, d+1]`` on dim H^4(M11) (x) Z/l for a prime l."""
    d = tensor_dim(FgAbGroup.from_orders(inst.order1, inst.order2), l)
    return (d, d + 1)


def m11_certified_distinct(a: M11Instance, b: M11Instance) -> Optional[DistinctnessCertificate]:
    """First prime (ascending) dividing one of the four orders that separates a and b.

    None only means this invariant does not separate them.
    """
    orders = (a.order1, a.order2, b.order1, b.order2)
    candidates = sorted({p for o in orders for p in primefactors(o)})
    for l in candidates:
        cert = DistinctnessCertificate(l, m11_tensor_bounds(a, l), m11_tensor_bounds(b, l))
        if cert.valid:
            return cert
    return None


@dataclass
class M11Family:
    instances: list[M11Instance]
    primes: list[int]
    certificates: dict[tuple[int, int], DistinctnessCertificate] = field(default_factory=dict)


def generate_m11_family(m: int, sieve_limit: int = DEFAULT_SIEVE_LIMIT,
                        scan_limit: Optional[int] = None) -> M11Family:
    """m members with orbit orders (r_(2i-1), r_(2i-1) r_(2i)), r_j the primes = 1 mod 3.

    Every pair (i, j), i < j, carries a distinctness certificate.
    """
    if m < 1:
        raise OrbitkitError(f"family size must be >= 1, got {m}")
    primes = primes_1_mod_3(2 * m, 0, sieve_limit)
    instances = []
    for i in range(m):
        r, s = primes[2 * i], primes[2 * i + 1]
        instances.append(M11Instance(_representative(r, scan_limit),
                                     _representative(r * s, scan_limit)))
    family = M11Family(instances, primes)
    for i in range(m):
        for j in range(i + 1, m):
            cert = m11_certified_distinct(instances[i], instances[j])
            if cert is None:
                raise AssertionError(f"members {i} and {j} were not separated")
            family.certificates[(i, j)] = cert
    return family


def h4_m13(w: WeightPair, v: WeightPair) -> FgAbGroup:
    """H^4(M13) as the kernel of the addition map Z/r + Z/r -> Z/r."""
    if not m13_exists(w, v):
        raise OrbitkitError(
            f"no M13 with orbits {w} and {v}: H^4 orders {aw_order(w)} != {aw_order(v)}")
    r = aw_order(w)
    source = Presentation(2, IntMatrix.diagonal([r, r]))
    target = Presentation(1, IntMatrix.from_rows([[r]]))
    return hom_kernel(source, target, IntMatrix.from_rows([[1, 1]]))


@dataclass(frozen=True)
class M13Instance:
    orbit1: WeightPair
    orbit2: WeightPair
    order: int
    h4: FgAbGroup
    non_double: bool

    def __post_init__(self):
        if aw_order(self.orbit1) != self.order or aw_order(self.orbit2) != self.order:
            raise OrbitkitError(f"orbits {self.orbit1}, {self.orbit2} do not share order {self.order}")


def m13_instance(w: WeightPair, v: WeightPair) -> M13Instance:
    """Build and validate the M13 member with orbits W(w), W(v)."""
    h4 = h4_m13(w, v)
    return M13Instance(w, v, aw_order(w), h4, not homotopy_equivalent(w, v))


def _two_prime_orders(count: int, sieve_limit: int) -> list[int]:
    bound = 128
    while True:
        ps = primes_1_mod_3_upto(bound // 7, sieve_limit)
        orders = sorted(p * q for i, p in enumerate(ps) for q in ps[i + 1:] if p * q <= bound)
        if len(orders) >= count:
            return orders[:count]
        if bound // 7 >= sieve_limit:
            raise SearchBoundError(f"sieve limit {sieve_limit} too small for {count} orders")
        bound = min(2 * bound, 7 * sieve_limit)


def generate_m13_family(count: int, sieve_limit: int = DEFAULT_SIEVE_LIMIT,
                        scan_limit: Optional[int] = None) -> list[M13Instance]:
    """Members with strictly increasing orders r = p q, p < q primes = 1 mod 3.

    The two orbits are the two inequivalent representations of r, so the
    member is a non-double whenever Kruggel's test separates them.
    """
    if count < 1:
        raise OrbitkitError(f"count must be >= 1, got {count}")
    out = []
    for r in _two_prime_orders(count, sieve_limit):
        reps = coprime_representations(r, scan_limit)
        if not reps:
            raise SearchBoundError(f"no coprime representation of {r} found")
        out.append(m13_instance(reps[0], reps[1] if len(reps) > 1 else reps[0]))
    return out
