# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, 64-bit fast path.

Signatures match ``_kernels_py``. Callers (``_core``) only route here when
every intermediate provably fits in a signed 64-bit integer.
"""
from libc.stdlib cimport calloc, free

ctypedef long long i64


def is_representable(i64 a, i64 b, i64 m):
    cdef i64 x = 0
    while a * x <= m:
        if (m - a * x) % b == 0:
            return True
        x += 1
    return False


cdef bint _rep(i64 a, i64 b, i64 m) noexcept nogil:
    cdef i64 r = m
    while r >= 0:
        if r % b == 0:
            return True
        r -= a
    return False


def gap_list(i64 a, i64 b):
    cdef i64 m, frob
    out = []
    if a == 1 or b == 1:
        return out
    frob = a * b - a - b
    for m in range(frob + 1):
        if not _rep(a, b, m):
            out.append(m)
    return out


def exponent_pairs(i64 n, i64 d, i64 bound):
    cdef i64 i, j, rest
    pairs = []
    for j in range(n):
        rest = bound - d * j
        if rest < 0:
            break
        for i in range(rest // n + 1):
            pairs.append((i, j))
    return pairs


def exponent_sums(i64 n, i64 d, i64 bound):
    cdef i64 i, j, rest, count = 0, s_aff = 0, s_inf = 0, s_j = 0
    with nogil:
        for j in range(n):
            rest = bound - d * j
            if rest < 0:
                break
            i = 0
            while n * i <= rest:
                count += 1
                s_aff += n * i + j
                s_inf += n * i + d * j
                s_j += j
                i += 1
    return count, s_aff, s_inf, s_j


def orders_distinct(i64 n, i64 coef, i64 d, i64 bound):
    # values lie in [0, bound] because 0 <= coef <= d
    cdef i64 i, j, rest, v
    cdef bint ok = True
    cdef unsigned char *seen = <unsigned char *> calloc(bound + 1, 1)
    if seen == NULL:
        raise MemoryError()
    try:
        with nogil:
            for j in range(n):
                rest = bound - d * j
                if rest < 0:
                    break
                i = 0
                while n * i <= rest:
                    v = n * i + coef * j
                    if seen[v]:
                        ok = False
                        break
                    seen[v] = 1
                    i += 1
                if not ok:
                    break
    finally:
        free(seen)
    return ok


def dsum_numerator(i64 a, i64 b, i64 c):
    # requires 0 <= a, b < c
    cdef i64 j, r = a, total = 0
    with nogil:
        for j in range(c):
            total += r * j
            r += b
            if r >= c:
                r -= c
    return total
