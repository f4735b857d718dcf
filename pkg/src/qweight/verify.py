"""Grid verification: every closed form against the enumeration oracle."""
from dataclasses import dataclass, field

from .curve import CurveFamily, QDifferentialSpace, exponent_set, is_exceptional_triple
from .errors import InvalidFamilyError, QWeightError
from .oracle import (
    curve_total_weight,
    oracle_affine_weight,
    oracle_infinity_weight,
    oracle_w1,
    oracle_w2,
)
from .semigroup import gap_count
from .weights import (
    Corollary,
    affine_branch_weight,
    affine_branch_weight_q1,
    applicable_corollaries,
    infinity_weight,
    specialized_branch_weight,
    w1_closed,
    w2_closed,
    w3_triangular,
)


@dataclass
class Failure:
    n: int
    d: int
    q: int
    check: str
    expected: object
    got: object

    def __str__(self):
        return f"({self.n},{self.d},{self.q}) {self.check}: expected {self.expected}, got {self.got}"


@dataclass
class VerifyResult:
    checks: int = 0
    families: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def grid_families(n_min, n_max, d_min, d_max):
    """Valid families in the box, skipping (n, d) with genus below 2."""
    for n in range(max(n_min, 2), n_max + 1):
        for d in range(max(d_min, n + 1), d_max + 1):
            try:
                yield CurveFamily(n, d)
            except InvalidFamilyError:
                continue


def family_checks(fam, q):
    """Yield (name, expected, got) triples for one (n, d, q)."""
    n, d, G = fam.n, fam.d, fam.G
    yield "dimension", QDifferentialSpace(fam, q).dim, len(exponent_set(fam, q))
    if q == 1:
        if G == 1:
            yield "affine_q1", oracle_affine_weight(fam, 1), affine_branch_weight_q1(fam)
    else:
        w = affine_branch_weight(fam, q)
        yield "w1", oracle_w1(fam, q), w1_closed(fam, q)
        yield "w2", oracle_w2(fam, q), w2_closed(fam, q)
        yield "affine", oracle_affine_weight(fam, q), w
        yield "decomposition", w, w1_closed(fam, q) - w2_closed(fam, q) - w3_triangular(fam, q)
        yield "periodicity", w, affine_branch_weight(fam, q + n // G)
        for case in applicable_corollaries(fam):
            yield f"corollary_{case.value}", w, specialized_branch_weight(fam, q, case)
        if Corollary.D_CONG_MINUS_G in applicable_corollaries(fam):
            yield "q_independence", affine_branch_weight(fam, 2), w
        yield "exceptional", (2 * fam.g - 2) * q - d * (n - 1) < 0, is_exceptional_triple(n, d, q)
        yield "nonnegative", True, w >= 0
    if G == 1:
        inf = infinity_weight(fam, q)
        yield "infinity", oracle_infinity_weight(fam, q), inf
        aff = oracle_affine_weight(fam, q)
        yield "branch_ceiling", True, d * aff + inf <= curve_total_weight(fam, q)
        if q == 1:
            yield "genus_gap_count", fam.g, gap_count((n, d))


def verify_grid(n_min=2, n_max=8, d_min=3, d_max=30, q_min=1, q_max=5):
    res = VerifyResult()
    for fam in grid_families(n_min, n_max, d_min, d_max):
        res.families += 1
        for q in range(max(q_min, 1), q_max + 1):
            try:
                for name, expected, got in family_checks(fam, q):
                    res.checks += 1
                    if expected != got:
                        res.failures.append(Failure(fam.n, fam.d, q, name, expected, got))
            except (AssertionError, ArithmeticError, QWeightError) as exc:
                res.checks += 1
                res.failures.append(Failure(fam.n, fam.d, q, "exception", None, repr(exc)))
    return res


def grid_is_empty(n_min, n_max, d_min, d_max, q_min, q_max):
    if max(q_min, 1) > q_max:
        return True
    return next(grid_families(n_min, n_max, d_min, d_max), None) is None

