"""Closed-form q-weights of branch points.

Every formula is evaluated in :class:`fractions.Fraction` and only converted
to ``int`` after checking the denominator is 1. The single non-closed piece
is the Dedekind-type sum ``D(a, b, c)``, a length-``c`` loop.
"""
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from . import _core
from .curve import CurveFamily, QDifferentialSpace, _check_q
from .errors import HypothesisError, IntegralityError, InvalidParameterError, UnsupportedQueryError
from .oracle import curve_total_weight, oracle_affine_weight


@dataclass(frozen=True)
class FractionalSumArgs:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.c < 1:
            raise InvalidParameterError(f"c must be >= 1, got {self.c}")


@dataclass(frozen=True)
class WeightBreakdown:
    w1: int
    w2: int
    w3: int

    @property
    def weight(self):
        return self.w1 - self.w2 - self.w3


class Corollary(Enum):
    COPRIME = "coprime"
    D_CONG_MINUS_G = "d_cong_minus_g"
    D_CONG_MINUS_1 = "d_cong_minus_1"
    N_DIVIDES_D = "n_divides_d"


@dataclass(frozen=True)
class BranchWeightReport:
    family: CurveFamily
    q: int
    affine_weight: int
    infinity_weight: Optional[int]
    branch_total: Optional[int]
    curve_total: int
    proportion: Optional[Fraction]
    asymptotic_bound: Fraction


def _to_int(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} evaluated to non-integer {x}")
    return x.numerator


def fractional_sum_D(args):
    """sum_{j=0}^{c-1} {(a + b j)/c} * j with {x} = x - floor(x) in [0, 1)."""
    if not isinstance(args, FractionalSumArgs):
        args = FractionalSumArgs(*args)
    return Fraction(_core.dsum_numerator(args.a, args.b, args.c), args.c)


def _D(a, b, c):
    return Fraction(_core.dsum_numerator(a, b, c), c)


def _branch_D(family, q):
    n, d, G = family.n, family.d, family.G
    return _D(-(d + G) * q, -d, n)


def w1_closed(family, q):
    _check_q(q, 2)
    n, d, G, g = family.n, family.d, family.G, family.g
    val = (
        2 * (g - 1) ** 2 * q ** 2
        + (g - 1) * G * q
        + Fraction(G ** 2 - 1 - (n - 1) * (d - 1) * (2 * n * d - n - d - 1), 12)
    )
    return _to_int(val, "W1")


def w2_closed(family, q):
    _check_q(q, 2)
    n, d, g = family.n, family.d, family.g
    inner = (n - 1) * ((g - 1) * q + Fraction(-2 * n * d + 3 * n + d, 6)) - _branch_D(family, q)
    return _to_int((d - 1) * inner, "W2")


def w3_triangular(family, q):
    dq = QDifferentialSpace(family, q).dim
    return dq * (dq - 1) // 2


def weight_breakdown(family, q):
    return WeightBreakdown(w1_closed(family, q), w2_closed(family, q), w3_triangular(family, q))


def _nonneg(v, what):
    if v < 0:
        raise IntegralityError(f"{what} came out negative: {v}")
    return v


def affine_branch_weight(family, q):
    """q-weight (q >= 2) of any affine branch point (alpha, 0)."""
    _check_q(q, 2)
    n, d, G, g = family.n, family.d, family.G, family.g
    val = (
        Fraction((n - 1) * (d - 1) * (n + 1) * (d - 7) + 12 * g * (G + 1) + 5 * (G ** 2 - 1), 24)
        + (d - 1) * _branch_D(family, q)
    )
    return _nonneg(_to_int(val, "affine branch weight"), "affine branch weight")


def _require_coprime(family, what):
    if family.G != 1:
        raise UnsupportedQueryError(
            f"{what} needs gcd(n, d) = 1, got gcd({family.n}, {family.d}) = {family.G}; "
            "use the enumeration oracle instead",
        )


def affine_branch_weight_q1(family):
    """Ordinary (q = 1) weight of an affine branch point, coprime case only."""
    _require_coprime(family, "the q=1 branch-weight formula")
    n, d, g = family.n, family.d, family.g
    val = Fraction(g * (n + 1) * (d - 7), 12) + (d - 1) * _D(0, -d, n)
    return _nonneg(_to_int(val, "q=1 affine branch weight"), "q=1 affine branch weight")


def infinity_weight(family, q):
    """q-weight of the lone point over infinity (gcd(n, d) = 1)."""
    _check_q(q)
    _require_coprime(family, "the weight at infinity")
    n, d, g = family.n, family.d, family.g
    base = _to_int(Fraction((n * n - 1) * (d * d - 1), 24), "infinity weight")
    return base - g if q == 1 else base


def _check_hypothesis(family, case):
    n, d, G = family.n, family.d, family.G
    if case is Corollary.COPRIME and G != 1:
        raise HypothesisError(f"COPRIME needs gcd(n, d) = 1, got {G}")
    if case is Corollary.D_CONG_MINUS_G and (d + G) % n:
        raise HypothesisError(f"D_CONG_MINUS_G needs d = -G (mod n): {d} != -{G} (mod {n})")
    if case is Corollary.D_CONG_MINUS_1 and (d + 1) % n:
        raise HypothesisError(f"D_CONG_MINUS_1 needs d = -1 (mod n): {d} != -1 (mod {n})")
    if case is Corollary.N_DIVIDES_D and d % n:
        raise HypothesisError(f"N_DIVIDES_D needs n | d: {n} does not divide {d}")


def specialized_branch_weight(family, q, case):
    """Evaluate one corollary's own closed form (not the general theorem)."""
    _check_q(q, 2)
    case = Corollary(case)
    _check_hypothesis(family, case)
    n, d, G, g = family.n, family.d, family.G, family.g
    if case is Corollary.COPRIME:
        val = Fraction(g * (n + 1) * (d - 7), 12) + g + (d - 1) * _D(-(d + 1) * q, -d, n)
    elif case is Corollary.D_CONG_MINUS_G:
        n1 = n // G
        val = Fraction(
            (n - 1) * (d - 1) * (n + 1) * (d - 7) + 12 * g * (G + 1) + 5 * (G ** 2 - 1)
            + 2 * (d - 1) * (n - G) * (3 * n + n1 - 2),
            24,
        )
    elif case is Corollary.D_CONG_MINUS_1:
        val = Fraction((n * n - 1) * (d * d - 1), 24)
    else:
        val = Fraction((n * n - 1) * (d * d - 2 * d), 24)
    return _to_int(val, f"{case.name} weight")


def applicable_corollaries(family):
    out = []
    for case in Corollary:
        try:
            _check_hypothesis(family, case)
        except HypothesisError:
            continue
        out.append(case)
    return out


def asymptotic_bound(n, q):
    """Limit of the branch share of total q-weight as d -> infinity over gcd(n, d) = 1."""
    _check_q(q)
    if q == 1:
        return Fraction(n + 1, 3 * (n - 1) ** 2)
    return Fraction(n + 1, 3 * (n - 1) ** 2 * (2 * q - 1) ** 2)


def branch_weight_report(family, q):
    """Per-point and total branch weights and their share of all q-weight.

    For q = 1 with gcd(n, d) > 1 the affine weight comes from the
    enumeration oracle, since no closed form is available there.
    """
    _check_q(q)
    if q >= 2:
        affine = affine_branch_weight(family, q)
    elif family.G == 1:
        affine = affine_branch_weight_q1(family)
    else:
        affine = oracle_affine_weight(family, 1)
    total = curve_total_weight(family, q)
    inf = bw = prop = None
    if family.G == 1:
        inf = infinity_weight(family, q)
        bw = family.d * affine + inf
        prop = Fraction(bw, total)
        if not 0 < prop <= 1:
            raise IntegralityError(f"branch share {prop} outside (0, 1]")
    return BranchWeightReport(
        family=family,
        q=q,
        affine_weight=affine,
        infinity_weight=inf,
        branch_total=bw,
        curve_total=total,
        proportion=prop,
        asymptotic_bound=asymptotic_bound(family.n, q),
    )
