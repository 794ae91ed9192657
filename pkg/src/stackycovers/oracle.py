"""Brute-force enumerations that re-derive each closed-form shortcut independently.

Nothing here uses normal forms or gcd shortcuts; everything is direct search
over a finite box that is provably complete.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .errors import CapExceeded
from .lattice import INFINITE

CAP_ENV_VAR = "STACKYCOVERS_CAP"
DEFAULT_CAP = 10 ** 7


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    return int(raw) if raw else DEFAULT_CAP


Range = tuple[int, int]  # inclusive


@dataclass(frozen=True)
class SweepBox:
    """Inclusive parameter ranges; a range with ``lo > hi`` is empty."""

    n: Range = (1, 6)
    r: Range = (2, 12)
    d: Range = (1, 12)
    d1: Range = (1, 50)
    d2: Range = (1, 50)
    cap: int | None = None

    @property
    def effective_cap(self) -> int:
        return self.cap if self.cap is not None else default_cap()

    @staticmethod
    def _span(rng: Range) -> range:
        return range(rng[0], rng[1] + 1)

    def simple_count(self) -> int:
        return math.prod(len(self._span(x)) for x in (self.n, self.r, self.d))

    def triple_count(self) -> int:
        return len(self._span(self.d1)) * len(self._span(self.d2))

    def _check(self, count: int) -> None:
        if count > self.effective_cap:
            raise CapExceeded(f"sweep of {count} tuples exceeds cap {self.effective_cap}")

    def simple_tuples(self) -> Iterator[tuple[int, int, int]]:
        """All ``(n, r, d)`` in lexicographic order; refuses to start past the cap."""
        self._check(self.simple_count())
        return itertools.product(*(self._span(x) for x in (self.n, self.r, self.d)))

    def triple_tuples(self) -> Iterator[tuple[int, int]]:
        self._check(self.triple_count())
        return itertools.product(self._span(self.d1), self._span(self.d2))


def oracle_torsor_witness(d_from: int, d_to: int, n: int) -> int | None:
    """Least k in [0, d_from) with d_from | k(n+1) + d_to, by direct search."""
    for k in range(d_from):
        if (k * (n + 1) + d_to) % d_from == 0:
            return k
    return None


def oracle_cyclic_quotient_order(gen_exponent: int, relation_exponent: int, cap: int | None = None) -> int:
    """Order of gen_exponent in Z/relation_exponent, by walking its orbit."""
    if gen_exponent < 1 or relation_exponent < 1:
        raise ValueError("exponents must be positive")
    cap = default_cap() if cap is None else cap
    step = gen_exponent % relation_exponent
    x, order = step, 1
    while x:
        order += 1
        if order > cap:
            raise CapExceeded(f"orbit of {gen_exponent} mod {relation_exponent} exceeds cap {cap}")
        x = (x + step) % relation_exponent
    return order


def _gauss_reduce(u: tuple[int, int], v: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Lagrange reduction of a rank-two pair of vectors in Z^2."""
    def norm(w):
        return w[0] * w[0] + w[1] * w[1]

    if norm(u) > norm(v):
        u, v = v, u
    while True:
        q = round(Fraction(u[0] * v[0] + u[1] * v[1], norm(u)))
        v = (v[0] - q * u[0], v[1] - q * u[1])
        if norm(v) >= norm(u):
            return u, v
        u, v = v, u


def oracle_lattice_index_boxcount(sub: Sequence[Sequence[int]]) -> int | float:
    """Index of the lattice spanned by two vectors in Z^2, by counting coset representatives.

    The pair is first Gauss-reduced (same lattice, short vectors). Every point
    of the box ``[0, 2M]^2`` (M the largest absolute entry) is then moved into the
    half-open parallelogram spanned by the vectors; a fundamental domain fits
    inside that box, so every coset is hit.
    """
    (a, c), (b, e) = sub  # columns v1 = (a, c), v2 = (b, e)
    if a * e - b * c == 0:
        return INFINITE
    (a, c), (b, e) = _gauss_reduce((a, c), (b, e))
    det = a * e - b * c
    side = 2 * max(abs(v) for v in (a, b, c, e)) + 1
    reps = set()
    for x in range(side):
        for y in range(side):
            # solve (x, y) = s v1 + t v2 by Cramer's rule
            s = Fraction(x * e - y * b, det)
            t = Fraction(a * y - c * x, det)
            fs, ft = math.floor(s), math.floor(t)
            reps.add((x - fs * a - ft * b, y - fs * c - ft * e))
    return len(reps)


def oracle_parity_solver(d1: int, d2: int) -> bool:
    """Can s*d2 + t*d1 + 1 be even for some s, t in {0, 1}?"""
    return any((s * d2 + t * d1 + 1) % 2 == 0 for s in (0, 1) for t in (0, 1))


def oracle_congruence_search(system, names: Sequence[str]) -> dict[str, int] | None:
    """Lexicographically least solution over the full box [0, lcm)^v."""
    period = math.lcm(*(mod for _, mod in system))
    for values in itertools.product(range(period), repeat=len(names)):
        assignment = dict(zip(names, values))
        if all(form.evaluate(assignment) % mod == 0 for form, mod in system):
            return assignment
    return None


def _prime_factors(values: Sequence[int]) -> set[int]:
    out = set()
    for v in values:
        v, p = abs(v), 2
        while p * p <= v:
            while v % p == 0:
                out.add(p)
                v //= p
            p += 1
        if v > 1:
            out.add(v)
    return out


def oracle_order_certificate(gen_exponent: int, relation_exponent: int, order: int,
                             relation_factors: Sequence[int]) -> bool:
    """Check that ``order`` is exactly the order of gen_exponent mod relation_exponent.

    ``relation_factors`` must have the same primes as relation_exponent. No orbit
    walk is needed, so this scales to huge relations.
    """
    # order | relation puts every prime of order among the primes of relation
    if order < 1 or relation_exponent % order or (order * gen_exponent) % relation_exponent:
        return False
    primes = _prime_factors(relation_factors)
    return all(((order // q) * gen_exponent) % relation_exponent for q in primes if order % q == 0)
