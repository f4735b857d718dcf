"""Kernel dispatch.

The compiled extension is used when it imported successfully and the
arguments are small enough for 64-bit arithmetic; everything else goes to
the pure-Python kernels. Set ``QWEIGHT_PURE_PYTHON=1`` to force the
fallback.
"""
import os

from . import _kernels_py as _py

try:
    if os.environ.get("QWEIGHT_PURE_PYTHON", "") not in ("", "0"):
        raise ImportError("pure-Python kernels forced")
    from . import _ckernels as _c
except ImportError:
    _c = None

BACKEND = "cython" if _c is not None else "python"

# Keeps every product and running sum in the C kernels below 2**62.
_SMALL = 1 << 20
_BOUND = 1 << 24


def _small(*xs):
    return all(0 <= x < _SMALL for x in xs)


def is_representable(a, b, m):
    if _c is not None and _small(a, b) and 0 <= m < _BOUND * _BOUND:
        return _c.is_representable(a, b, m)
    return _py.is_representable(a, b, m)


def gap_list(a, b):
    if _c is not None and _small(a, b):
        return _c.gap_list(a, b)
    return _py.gap_list(a, b)


def _enum_ok(n, d, bound):
    return _c is not None and _small(n, d) and bound < _BOUND


def exponent_pairs(n, d, bound):
    if _enum_ok(n, d, bound):
        return _c.exponent_pairs(n, d, bound)
    return _py.exponent_pairs(n, d, bound)


def exponent_sums(n, d, bound):
    if _enum_ok(n, d, bound):
        return _c.exponent_sums(n, d, bound)
    return _py.exponent_sums(n, d, bound)


def orders_distinct(n, coef, d, bound):
    if _enum_ok(n, d, bound) and 0 <= coef <= d:
        return _c.orders_distinct(n, coef, d, bound)
    return _py.orders_distinct(n, coef, d, bound)


def dsum_numerator(a, b, c):
    if _c is not None and 0 < c < _SMALL:
        return _c.dsum_numerator(a % c, b % c, c)
    return _py.dsum_numerator(a, b, c)
