"""Brute-force weights by enumerating the basis exponent set.

Nothing here uses the closed forms in :mod:`qweight.weights`; the only thing
shared is the definition of the exponent set itself. That independence is
what makes closed-form == oracle a meaningful check.
"""
from dataclasses import dataclass
from typing import Optional

from . import _core
from .curve import QDifferentialSpace, _check_q
from .errors import UnsupportedQueryError


@dataclass(frozen=True)
class OracleReport:
    w1: int
    w2: int
    w3: int
    affine_weight: int
    infinity_weight: Optional[int]
    set_size: int


def _enumerate(family, q):
    _check_q(q)
    n, d = family.n, family.d
    count, s_aff, s_inf, s_j = _core.exponent_sums(n, d, family.bound(q))
    dq = QDifferentialSpace(family, q).dim
    if count != dq:
        raise AssertionError(f"exponent set of ({n}, {d}, {q}) has {count} elements, expected {dq}")
    return count, s_aff, s_inf, s_j


def _triangular(k):
    return k * (k - 1) // 2


def oracle_affine_weight(family, q):
    """Sum of the orders n*i + j at an affine branch point, minus 0 + 1 + ... + (d_q - 1)."""
    count, s_aff, _, _ = _enumerate(family, q)
    if not _core.orders_distinct(family.n, 1, family.d, family.bound(q)):
        raise AssertionError(f"affine orders collide for ({family.n}, {family.d}, {q})")
    return s_aff - _triangular(count)


def oracle_w1(family, q):
    _check_q(q, 2)
    return _enumerate(family, q)[2]


def oracle_w2(family, q):
    _check_q(q, 2)
    return (family.d - 1) * _enumerate(family, q)[3]


def oracle_infinity_weight(family, q):
    """Weight of the single point over infinity, from its vanishing orders."""
    if family.G != 1:
        raise UnsupportedQueryError(
            f"gcd({family.n}, {family.d}) = {family.G}: the weight at infinity depends on f"
        )
    n, d = family.n, family.d
    bound = family.bound(q)
    count, _, s_inf, _ = _enumerate(family, q)
    if not _core.orders_distinct(n, d, d, bound):
        raise AssertionError(f"orders at infinity collide for ({n}, {d}, {q})")
    # orders at infinity are bound - (n*i + d*j)
    return count * bound - s_inf - _triangular(count)


def curve_total_weight(family, q):
    """Total q-weight of all points on a genus-g curve.

    A reference constant rather than an enumeration: the non-branch
    q-Weierstrass points cannot be located from (n, d, q).
    """
    _check_q(q)
    g = family.g
    if q == 1:
        return g ** 3 - g
    return g * (g - 1) ** 2 * (2 * q - 1) ** 2


def oracle_report(family, q):
    _check_q(q)
    count, s_aff, s_inf, s_j = _enumerate(family, q)
    inf = oracle_infinity_weight(family, q) if family.G == 1 else None
    return OracleReport(
        w1=s_inf,
        w2=(family.d - 1) * s_j,
        w3=_triangular(count),
        affine_weight=oracle_affine_weight(family, q),
        infinity_weight=inf,
        set_size=count,
    )
