"""Numerical semigroups with two generators.

Closed forms (Sylvester count, gap sum) are the production path; the
enumeration in :func:`gap_set` exists to check them.
"""
from dataclasses import dataclass, field
from math import gcd

from . import _core
from .errors import InfiniteGapSetError, InvalidParameterError


@dataclass(frozen=True)
class SemigroupPair:
    a: int
    b: int
    coprime: bool = field(init=False)

    def __post_init__(self):
        for name, v in (("a", self.a), ("b", self.b)):
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise InvalidParameterError(f"generator {name} must be a positive integer, got {v!r}")
        object.__setattr__(self, "coprime", gcd(self.a, self.b) == 1)

    def require_coprime(self):
        if not self.coprime:
            g = gcd(self.a, self.b)
            raise InfiniteGapSetError(
                f"gcd({self.a}, {self.b}) = {g} > 1: the gap set is infinite"
            )


@dataclass(frozen=True)
class GapSet:
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, m):
        return m in self.elements

    def sum(self):
        return sum(self.elements)


def _pair(s):
    return s if isinstance(s, SemigroupPair) else SemigroupPair(*s)


def is_representable(s, m):
    """True iff m = a*x + b*y for some non-negative integers x, y."""
    s = _pair(s)
    if m < 0:
        raise InvalidParameterError(f"m must be non-negative, got {m}")
    return _core.is_representable(s.a, s.b, m)


def gap_set(s):
    s = _pair(s)
    s.require_coprime()
    return GapSet(tuple(_core.gap_list(s.a, s.b)))


def gap_count(s):
    """Number of gaps, (a-1)(b-1)/2."""
    s = _pair(s)
    s.require_coprime()
    return (s.a - 1) * (s.b - 1) // 2


def gap_sum(s):
    """Sum of gaps, (a-1)(b-1)(2ab-a-b-1)/12."""
    s = _pair(s)
    s.require_coprime()
    a, b = s.a, s.b
    num = (a - 1) * (b - 1) * (2 * a * b - a - b - 1)
    q, r = divmod(num, 12)
    assert r == 0, (a, b)
    return q


def frobenius_number(s):
    """Largest gap ab - a - b; -1 when a generator is 1 (no gaps at all)."""
    s = _pair(s)
    s.require_coprime()
    if s.a == 1 or s.b == 1:
        return -1
    return s.a * s.b - s.a - s.b
