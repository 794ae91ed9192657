"""Classifiers for simple cyclic covers of degree r over P^n branched in degree rd.

Everything reduces to gcd arithmetic and cyclic quotients of the character
lattice of GL_{n+1}, written here in exponents of ``det``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import _mutation
from .errors import DomainError, HypothesisError
from .lattice import CongruenceWitness, IntMatrix, LinearForm, kernel_basis, solve_linear_congruences
from .verdict import Outcome, Verdict

#: (r, rd) pairs for n = 2 where the stack is known not to be rational.
NON_RATIONAL_PLANE_PAIRS = frozenset({
    (3, 6), (3, 12), (3, 15), (9, 18), (3, 24), (6, 24), (12, 24), (3, 48), (6, 48),
})

#: Below this branch degree the plane-curve rationality criterion is not known.
PLANE_RATIONALITY_THRESHOLD = 49


class CharAssumption(str, Enum):
    """What the caller asserts about the characteristic of the base field."""

    ZERO = "zero"
    LARGE = "large"  # char > (rd-1)(rd-2) + 1
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class SimpleCyclicParams:
    """Parameters ``(n, r, d)``: dimension, cover degree, and line-bundle degree.

    With ``strict=True`` (the default) construction also demands ``rd >= 4``,
    the range of the rationality and Picard results; sweeps pass
    ``strict=False``. ``r = 1`` is accepted as the degenerate case.
    """

    n: int
    r: int
    d: int
    strict: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"need n >= 1, got n={self.n}")
        if self.r < 1:
            raise DomainError(f"need r >= 1, got r={self.r}")
        if self.d < 1:
            raise DomainError(f"need d >= 1, got d={self.d}")
        if self.strict and self.rd < 4:
            raise DomainError(f"requires rd >= 4, got rd={self.rd}")

    @property
    def rd(self) -> int:
        return self.r * self.d

    @property
    def g(self) -> int:
        """gcd(rd, n+1)."""
        return math.gcd(self.rd, self.n + 1)

    @property
    def g_d(self) -> int:
        """gcd(d, n+1)."""
        return math.gcd(self.d, self.n + 1)

    def require_rd_at_least_four(self) -> None:
        if self.rd < 4:
            raise DomainError(f"requires rd >= 4, got rd={self.rd}")


@dataclass(frozen=True)
class CyclicPresentation:
    """Finite cyclic group generated by ``det^exponent`` of the given order."""

    exponent: int
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be positive")

    @property
    def generator_label(self) -> str:
        return f"det^{self.exponent}"

    @property
    def trivial(self) -> bool:
        return self.order == 1


def torsor_hom_exists(d_from: int, d_to: int, n: int) -> tuple[bool, CongruenceWitness | None]:
    """Is there a morphism of PGL_{n+1}-torsors GL_{n+1}/mu_{d_from} -> GL_{n+1}/mu_{d_to}?

    True iff gcd(d_from, n+1) divides d_to. The witness is the least k >= 0 with
    ``d_from | k(n+1) + d_to``.
    """
    if d_from < 1 or d_to < 1:
        raise DomainError("torsor degrees must be positive")
    modulus = n if _mutation.active("torsor") else n + 1
    exists = d_to % math.gcd(d_from, modulus) == 0
    if not exists:
        return False, None
    witness = solve_linear_congruences([(LinearForm({"k": n + 1}, d_to), d_from)])
    return witness is not None, witness


def least_linearized_degree(p: SimpleCyclicParams) -> int:
    """Least positive degree t such that O(t) on P^n is GL_{n+1}/mu_{rd}-linearizable."""
    return p.g


def tautological_family_exists(p: SimpleCyclicParams) -> tuple[bool, bool]:
    """``(family exists on an open subset, associated Brauer-Severi scheme is Zariski-trivial)``."""
    if _mutation.active("taut"):
        return p.d % p.g_d == 0, p.g == 1
    return p.d % p.g == 0, p.g == 1


def rationality_simple(p: SimpleCyclicParams) -> Verdict:
    """Rationality of the stack of simple cyclic covers.

    The stack is rational iff the coarse space is rational and a tautological
    family exists on an open set, so the verdict is known outright for n = 1,
    for n = 2 above the plane-curve threshold and on a finite exceptional list,
    and whenever no family exists. Everything else is conditional.
    """
    p.require_rd_at_least_four()
    n, r, d, rd, g = p.n, p.r, p.d, p.rd, p.g
    family = d % g == 0
    notes = {"unirational": Outcome.YES.value}
    family_reason = ("family-criterion", f"tautological family exists iff gcd(rd, n+1) | d; gcd({rd}, {n + 1}) = {g}")

    if n == 1:
        rational = rd % 2 == 1 or d % 2 == 0
        return Verdict(
            Outcome.YES if rational else Outcome.NO,
            (family_reason,
             ("rational-n1", "for rd >= 4 the stack over P^1 is rational iff rd is odd or d is even")),
            annotations=notes,
        )

    if not family:
        return Verdict(
            Outcome.NO,
            (family_reason, ("no-family-not-rational", "no tautological family on any open set, so the stack is not rational")),
            annotations=notes,
        )

    if n == 2:
        if rd >= PLANE_RATIONALITY_THRESHOLD:
            rational = d % 3 == 0 or rd % 3 != 0
            return Verdict(
                Outcome.YES if rational else Outcome.NO,
                (family_reason,
                 ("rational-n2", "for rd >= 49 the stack over P^2 is rational iff 3 | d or 3 does not divide rd")),
                annotations=notes,
            )
        if (r, rd) in NON_RATIONAL_PLANE_PAIRS:
            return Verdict(
                Outcome.NO,
                (family_reason, ("plane-exceptional-set", f"(r, rd) = ({r}, {rd}) lies in the non-rational list")),
                annotations=notes,
            )
        return Verdict(
            Outcome.CONDITIONAL,
            (family_reason,
             ("plane-coarse-open", "for rd <= 48 outside the exceptional list the stack is rational iff C(2, rd) is")),
            condition=f"rationality of C(2,{rd})",
            annotations=notes,
        )

    return Verdict(
        Outcome.CONDITIONAL,
        (family_reason,
         ("stack-iff-coarse", "when a family exists the stack is rational iff its coarse space is")),
        condition=f"rationality of M_{{{n},{r},{d}}}",
        annotations=notes,
    )


def _cyclic_order(exponent: int, relation: int) -> int:
    """Order of det^exponent in Z / relation, read off the integer kernel of [exponent, -relation]."""
    (a, _), = kernel_basis(IntMatrix.from_rows([[exponent, -relation]]))
    return abs(a)


def picard_relation(p: SimpleCyclicParams) -> int:
    """Exponent e with det^e = id in every Picard group below: rd(rd-1)^n."""
    n = p.n - 1 if _mutation.active("pic_stack") else p.n
    return p.rd * (p.rd - 1) ** n


def pic_stack(p: SimpleCyclicParams) -> CyclicPresentation:
    """Picard group of the stack of covers: generated by det^(d/gcd(d,n+1)).

    The order is computed from the lattice quotient, not from a closed form.
    """
    exponent = p.d // p.g_d
    return CyclicPresentation(exponent, _cyclic_order(exponent, picard_relation(p)))


def pic_quotient(p: SimpleCyclicParams, k: int) -> CyclicPresentation:
    """Picard group of [A_sm(n, rd) / (GL_{n+1}/mu_{kd})]: generated by det^(kd/gcd(kd,n+1)).

    ``k = r`` gives the rigidified stack of branch divisors.
    """
    if k < 1 or p.r % k:
        raise DomainError(f"k must divide r={p.r}, got k={k}")
    kd = k * p.d
    exponent = kd // math.gcd(kd, p.n + 1)
    return CyclicPresentation(exponent, _cyclic_order(exponent, picard_relation(p)))


def pic_divisor_stack(p: SimpleCyclicParams) -> CyclicPresentation:
    return pic_quotient(p, p.r)


def pic_index(p: SimpleCyclicParams, k: int) -> int:
    """Index k*gcd(d,n+1)/gcd(kd,n+1) of the pulled-back Picard group."""
    if k < 1 or p.r % k:
        raise DomainError(f"k must divide r={p.r}, got k={k}")
    num = k * math.gcd(p.d, p.n + 1)
    den = 1 if _mutation.active("pic_index") else math.gcd(k * p.d, p.n + 1)
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"index {num}/{den} is not an integer")
    return q


@dataclass(frozen=True)
class CoarsePicardProof:
    """Intermediate integers showing the coarse moduli space has trivial Picard group.

    A character ``s^alpha`` of the rigidified stack descends only if it is
    trivial on two stabilizers, which forces ``(rd-1)^n | alpha`` and
    ``g | alpha``; since the two are coprime, ``alpha`` is a multiple of the
    order of ``s``.
    """

    rd: int
    n: int
    g: int
    m: int
    power: int
    gcd_m_rd_power: int
    gcd_g_power: int
    alpha_modulus: int
    divisor_stack_order: int

    @property
    def holds(self) -> bool:
        return (self.gcd_m_rd_power == 1 and self.gcd_g_power == 1
                and self.alpha_modulus % self.divisor_stack_order == 0)

    @property
    def conclusion(self) -> str:
        return "Pic = 0" if self.holds else "undetermined"


def verify_coarse_pic_trivial(p: SimpleCyclicParams) -> CoarsePicardProof:
    p.require_rd_at_least_four()
    rd, n, g = p.rd, p.n, p.g
    start = 1 if _mutation.active("coarse_pic") else 0
    m = sum((1 - rd) ** i for i in range(start, n + 1))
    power = (rd - 1) ** n
    gcd_g_power = math.gcd(g, power)
    return CoarsePicardProof(
        rd=rd, n=n, g=g, m=m, power=power,
        gcd_m_rd_power=math.gcd(m * rd, power),
        gcd_g_power=gcd_g_power,
        alpha_modulus=power * g // gcd_g_power,
        divisor_stack_order=pic_divisor_stack(p).order,
    )


def no_section_over_M0(
    p: SimpleCyclicParams,
    char_assumption: CharAssumption = CharAssumption.UNKNOWN,
    codim_at_least_two: bool = False,
) -> Verdict:
    """Does the family fail to extend over the locus without extra automorphisms?

    YES means no section over M^0 exists. The codimension-two input is known
    for n = 1 (rd >= 8) and for n = 2 (rd >= 7, under a characteristic
    assumption); otherwise the caller may assert it via ``codim_at_least_two``.
    """
    char_assumption = CharAssumption(char_assumption)
    n, r, rd, g = p.n, p.r, p.rd, p.g
    if p.d % g:
        return Verdict(
            Outcome.YES,
            (("family-criterion", f"gcd({rd}, {n + 1}) = {g} does not divide d = {p.d}, "
                                  "so no family exists on any open set"),),
        )

    index = r * p.g_d // g
    reasons = [("picard-index", f"index r*gcd(d,n+1)/gcd(rd,n+1) = {index}")]
    if n == 1 and rd >= 8:
        codim_known = True
        reasons.append(("codim-n1", "the automorphism locus has codimension >= 2 for n = 1, rd >= 8"))
    elif n == 2 and rd >= 7 and char_assumption is not CharAssumption.UNKNOWN:
        codim_known = True
        reasons.append(("codim-n2", "the automorphism locus has codimension >= 2 for n = 2, rd >= 7 "
                                    f"when char = 0 or char > {(rd - 1) * (rd - 2) + 1}"))
    elif codim_at_least_two:
        codim_known = True
        reasons.append(("codim-asserted", "codimension >= 2 of the automorphism locus supplied by caller"))
    else:
        codim_known = False

    if index <= 1:
        return Verdict(Outcome.CONDITIONAL, tuple(reasons),
                       condition="index r*gcd(d,n+1)/gcd(rd,n+1) > 1")
    if not codim_known:
        return Verdict(Outcome.CONDITIONAL, tuple(reasons), condition="codim(M∖M⁰) ≥ 2")
    reasons.append(("section-obstruction", "a section over M^0 would split a Picard inclusion of index > 1"))
    return Verdict(Outcome.YES, tuple(reasons))


@dataclass(frozen=True)
class GnrRecord:
    simple_cyclic_Gnr_exists: bool
    guaranteed_multiple: int


def gnr_classification(p: SimpleCyclicParams) -> GnrRecord:
    """Existence of a simple cyclic G^n_r on a tautological family.

    One exists iff gcd(rd, n+1) = 1; a gcd(rd, n+1)-multiple always exists.
    """
    if p.d % p.g:
        raise HypothesisError(f"needs gcd(rd, n+1) | d; gcd({p.rd}, {p.n + 1}) = {p.g} does not divide {p.d}")
    return GnrRecord(p.g == 1, p.g)
