"""Loeschian numbers n = a^2 + ab + b^2 with gcd(a, b) = 1, and primes 1 mod 3."""

from __future__ import annotations

from functools import lru_cache
from math import gcd, isqrt

from sympy import factorint, isprime

from .errors import OrbitkitError, SearchBoundError

DEFAULT_SIEVE_LIMIT = 10**6


def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def loeschian_value(a: int, b: int) -> int:
    if a == 0 and b == 0:
        raise OrbitkitError("(0, 0) gives the degenerate value 0")
    return a * a + a * b + b * b


def is_representable_coprime(n: int) -> bool:
    """Whether n = a^2 + ab + b^2 for some coprime a, b.

    Holds iff 9 does not divide n and every prime factor other than 3 is
    1 mod 3. The prime 3 may appear once (3 = 1 + 1 + 1).
    """
    if n < 1:
        raise OrbitkitError(f"n must be positive, got {n}")
    for r, e in factorint(n).items():
        if r == 3:
            if e > 1:
                return False
        elif r % 3 != 1:
            return False
    return True


def scan_radius(n: int) -> int:
    """|a|, |b| <= this bound covers every solution, as a^2+ab+b^2 >= (a^2+b^2)/2."""
    return isqrt(2 * n) + (isqrt(2 * n) ** 2 != 2 * n)


def coprime_representations(n: int, scan_limit: int | None = None):
    """Coprime solutions of a^2 + ab + b^2 = n, one per weight-symmetry class.

    Each solution is returned as its canonical :class:`~orbitkit.aw.WeightPair`,
    sorted by :func:`~orbitkit.aw.canonical_key` so the first entry is the
    preferred representative. The scan over ``a`` runs to the provably complete
    radius unless ``scan_limit`` is smaller.
    """
    from .aw import WeightPair, canonical_form, canonical_key

    if n < 1:
        raise OrbitkitError(f"n must be positive, got {n}")
    radius = scan_radius(n)
    if scan_limit is not None:
        radius = min(radius, scan_limit)
    found = set()
    for a in range(-radius, radius + 1):
        disc = 4 * n - 3 * a * a
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for num in (-a + s, -a - s):
            if num % 2 == 0:
                b = num // 2
                if gcd(a, b) == 1:
                    found.add(canonical_form(WeightPair(a, b)))
    return sorted(found, key=canonical_key)


@lru_cache(maxsize=8)
def _sieve(limit: int) -> bytearray:
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00\x00"[: min(2, limit + 1)]
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p::p] = bytes(len(range(p * p, limit + 1, p)))
    return flags


def primes_1_mod_3(count: int, lower_bound: int = 0,
                   limit: int = DEFAULT_SIEVE_LIMIT) -> list[int]:
    """The first ``count`` primes p >= lower_bound with p = 1 mod 3.

    Raises SearchBoundError if the sieve up to ``limit`` runs dry first.
    """
    if count < 0 or lower_bound < 0:
        raise OrbitkitError("count and lower_bound must be nonnegative")
    if count == 0:
        return []
    if limit < 2:
        raise SearchBoundError(f"sieve limit {limit} holds no primes")
    flags = _sieve(limit)
    start = max(lower_bound, 7)
    start += (1 - start) % 3
    out = []
    for p in range(start, limit + 1, 3):
        if flags[p]:
            out.append(p)
            if len(out) == count:
                return out
    raise SearchBoundError(
        f"only {len(out)} of {count} primes = 1 mod 3 above {lower_bound} "
        f"below sieve limit {limit}")


def primes_1_mod_3_upto(bound: int, limit: int = DEFAULT_SIEVE_LIMIT) -> list[int]:
    """All primes p <= bound with p = 1 mod 3; bound may not exceed the sieve limit."""
    if bound > limit:
        raise SearchBoundError(f"bound {bound} exceeds sieve limit {limit}")
    if bound < 7:
        return []
    flags = _sieve(limit)
    return [p for p in range(7, bound + 1, 3) if flags[p]]
