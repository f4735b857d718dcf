"""Pure-Python kernels.

Reference implementation of the hot loops; the compiled ``_ckernels``
module mirrors these signatures exactly. Everything here is exact and
works on arbitrarily large integers.
"""


def is_representable(a, b, m):
    x = 0
    while a * x <= m:
        if (m - a * x) % b == 0:
            return True
        x += 1
    return False


def gap_list(a, b):
    # caller guarantees gcd(a, b) == 1
    if a == 1 or b == 1:
        return []
    return [m for m in range(a * b - a - b + 1) if not is_representable(a, b, m)]


def exponent_pairs(n, d, bound):
    """All (i, j) with i >= 0, 0 <= j < n, n*i + d*j <= bound, sorted by (j, i)."""
    pairs = []
    for j in range(n):
        rest = bound - d * j
        if rest < 0:
            break
        i = 0
        while n * i <= rest:
            pairs.append((i, j))
            i += 1
    return pairs


def exponent_sums(n, d, bound):
    """(count, sum of n*i + j, sum of n*i + d*j, sum of j) over the exponent set."""
    count = s_aff = s_inf = s_j = 0
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


def orders_distinct(n, coef, d, bound):
    """True iff n*i + coef*j takes pairwise distinct values over the exponent set."""
    seen = set()
    for j in range(n):
        rest = bound - d * j
        if rest < 0:
            break
        i = 0
        while n * i <= rest:
            v = n * i + coef * j
            if v in seen:
                return False
            seen.add(v)
            i += 1
    return True


def dsum_numerator(a, b, c):
    """c * sum_{j<c} frac((a + b*j)/c) * j, an exact integer."""
    return sum(((a + b * j) % c) * j for j in range(c))
