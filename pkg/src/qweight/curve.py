"""Superelliptic families y^n = f(x) described by (n, d) alone.

Nothing here looks at the polynomial f: genus, the dimension of the space
of holomorphic q-differentials and the exponent set of its monomial basis
x^i y^j (dx / y^(n-1))^q depend only on n, d and q.
"""
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

from . import _core
from .errors import InvalidFamilyError, InvalidParameterError

EXCEPTIONAL_TRIPLES = frozenset({(2, 5, 2), (2, 6, 2)})


def _check_int(name, v):
    if not isinstance(v, int) or isinstance(v, bool):
        raise InvalidParameterError(f"{name} must be an integer, got {v!r}")


def _check_q(q, minimum=1):
    _check_int("q", q)
    if q < minimum:
        raise InvalidParameterError(f"q must be >= {minimum}, got {q}", reason="q_out_of_range")


@dataclass(frozen=True)
class CurveFamily:
    """The family of curves y^n = f(x) with f separable of degree d.

    ``G`` is gcd(n, d) and ``g`` the genus, from 2g - 2 = nd - n - d - G.
    """

    n: int
    d: int
    G: int = field(init=False)
    g: int = field(init=False)

    def __post_init__(self):
        n, d = self.n, self.d
        _check_int("n", n)
        _check_int("d", d)
        if n < 2:
            raise InvalidFamilyError(f"n must be >= 2, got {n}", reason="n_below_2")
        if d <= n:
            raise InvalidFamilyError(f"degree d={d} must exceed n={n}", reason="degree_not_above_n")
        G = gcd(n, d)
        g = (n * d - n - d - G + 2) // 2
        if g < 2:
            raise InvalidFamilyError(f"(n, d) = ({n}, {d}) has genus {g}: genus below 2", reason="genus_below_2")
        object.__setattr__(self, "G", G)
        object.__setattr__(self, "g", g)

    @property
    def canonical_degree(self):
        """2g - 2."""
        return 2 * self.g - 2

    def bound(self, q):
        """(2g - 2) q, the cap on n*i + d*j for basis exponents."""
        return (2 * self.g - 2) * q


def make_family(n, d):
    return CurveFamily(n, d)


@dataclass(frozen=True)
class QDifferentialSpace:
    curve: CurveFamily
    q: int

    def __post_init__(self):
        _check_q(self.q)

    @property
    def dim(self):
        g = self.curve.g
        return g if self.q == 1 else (g - 1) * (2 * self.q - 1)


def dimension(space):
    """d_q: g for q = 1, (g-1)(2q-1) for q >= 2."""
    return space.dim


@dataclass(frozen=True)
class ExponentSet:
    """Exponents (i, j) of the monomial q-differential basis, sorted by (j, i)."""

    family: CurveFamily
    q: int
    pairs: tuple

    def __len__(self):
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    @cached_property
    def _lookup(self):
        return frozenset(self.pairs)

    def __contains__(self, pair):
        return tuple(pair) in self._lookup

    def affine_orders(self):
        n = self.family.n
        return [n * i + j for i, j in self.pairs]


def exponent_set(family, q):
    _check_q(q)
    pairs = _core.exponent_pairs(family.n, family.d, family.bound(q))
    return ExponentSet(family, q, tuple(pairs))


def is_exceptional_triple(n, d, q):
    """The two triples where (2g-2)q < d(n-1), i.e. the top j-row is empty."""
    return (n, d, q) in EXCEPTIONAL_TRIPLES


def infinity_vanishing_order(family, q, i, j):
    """Order of vanishing of the (i, j) basis element at each point over infinity."""
    _check_q(q)
    n, d = family.n, family.d
    bound = family.bound(q)
    if not (i >= 0 and 0 <= j < n and n * i + d * j <= bound):
        raise InvalidParameterError(
            f"({i}, {j}) is not in the exponent set of ({n}, {d}) at q={q}",
            reason="not_in_exponent_set",
        )
    num = bound - (n * i + d * j)
    assert num % family.G == 0
    return num // family.G
