"""Dimension counts for loci of covers with extra automorphisms.

For n = 1 the strata are indexed by a prime automorphism order p and the number
i of fixed points lying on the branch divisor. For n = 2 the locus of smooth
plane curves with a cyclic automorphism of prime order m splits into six
families; the first two have exact dimensions, the rest upper bounds.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import _mutation
from .errors import DomainError

#: Offset in the ambient dimension (d+2)(d+1)/2 - offset of plane curves, as printed.
PUBLISHED_AMBIENT_OFFSET = 8
#: dim PGL_3 + 1: the usual count for plane curves of degree d modulo projectivities.
STANDARD_AMBIENT_OFFSET = 9

CHAR_ASSUMPTION = "char(k) = 0 or char(k) > (rd-1)(rd-2) + 1"


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(range(p * p, n + 1, p)))
    return [p for p in range(n + 1) if sieve[p]]


def prime_divisors(n: int) -> list[int]:
    n, out, p = abs(n), [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class StratumP1:
    rd: int
    p: int
    i: int
    dim: int

    @property
    def empty(self) -> bool:
        return self.dim < 0


@dataclass(frozen=True)
class P1Strata:
    rd: int
    ambient_dim: int
    strata: tuple[StratumP1, ...]

    @property
    def max_stratum_dim(self) -> int:
        return max(s.dim for s in self.strata)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.max_stratum_dim

    @property
    def guaranteed(self) -> bool:
        """Whether codim >= 2 is a known result here rather than just a computed value."""
        return self.rd >= 8


def aut_locus_codim_p1(rd: int) -> P1Strata:
    """Strata of rd points on P^1 with an automorphism of prime order p fixing i of them.

    Such a stratum has dimension (rd - i)/p - 1 inside a space of dimension rd - 3.
    """
    if rd < 4:
        raise DomainError(f"requires rd >= 4, got rd={rd}")
    shift = 0 if _mutation.active("strata_p1") else 1
    strata = tuple(
        StratumP1(rd, p, i, (rd - i) // p - shift)
        for p in primes_up_to(rd)
        for i in (0, 1, 2)
        if (rd - i) % p == 0
    )
    return P1Strata(rd, rd - 3, strata)


@dataclass(frozen=True)
class StratumP2:
    d: int
    case_id: int
    m: int | None
    parameters: dict
    dim_or_bound: int | Fraction
    is_upper_bound: bool
    threshold: int

    @property
    def within_threshold(self) -> bool:
        """dim <= ambient - 2; fractional bounds are floored only here."""
        return math.floor(self.dim_or_bound) <= self.threshold


@dataclass(frozen=True)
class P2Strata:
    d: int
    ambient_dim: int
    per_case: tuple[StratumP2, ...]
    metadata: dict = field(default_factory=dict)

    @property
    def codim_at_least_two(self) -> bool:
        return all(s.within_threshold for s in self.per_case)

    @property
    def violations(self) -> tuple[StratumP2, ...]:
        return tuple(s for s in self.per_case if not s.within_threshold)


def _cyclic_family_dim(m: int, k: int, d: int) -> int:
    return m * k * (k - 1) // 2 + 2 * k + d


def aut_locus_codim_p2(d: int, ambient_offset: int = PUBLISHED_AMBIENT_OFFSET) -> P2Strata:
    """Dimensions and bounds for plane curves of degree d with a cyclic automorphism of prime order.

    Each entry is compared against ``ambient - 2``. The result only matters
    under the characteristic assumption recorded in the metadata; it is not
    checked here.
    """
    if d < 4:
        raise DomainError(f"requires d >= 4, got d={d}")
    ambient = (d + 2) * (d + 1) // 2 - ambient_offset
    threshold = ambient - 2
    rows: list[StratumP2] = []

    for case_id, base in ((1, d - 1), (2, d)):
        for m in prime_divisors(base):
            k = base // m
            rows.append(StratumP2(d, case_id, m, {"k": k}, _cyclic_family_dim(m, k, d), False, threshold))

    tail = sum(j + 1 for j in range(2, d - 1))
    for m in prime_divisors((d - 1) * (d - 2)):
        if m >= 3:
            rows.append(StratumP2(d, 3, m, {}, Fraction(3 * tail, m), True, threshold))
    bound = Fraction(tail + 3 * d - 8, 3)
    rows.extend(StratumP2(d, case_id, None, {}, bound, True, threshold) for case_id in (4, 5, 6))

    metadata = {
        "ambient_offset": ambient_offset,
        "published_ambient_offset": PUBLISHED_AMBIENT_OFFSET,
        "standard_ambient_offset": STANDARD_AMBIENT_OFFSET,
        "required_assumption": CHAR_ASSUMPTION,
    }
    return P2Strata(d, ambient, tuple(rows), metadata)
