import pytest
from hypothesis import given
from hypothesis import strategies as st

from qweight.curve import (
    CurveFamily,
    QDifferentialSpace,
    dimension,
    exponent_set,
    infinity_vanishing_order,
    is_exceptional_triple,
    make_family,
)
from qweight.errors import InvalidFamilyError, InvalidParameterError
from qweight.semigroup import gap_count


def valid_family(n, d):
    try:
        return CurveFamily(n, d)
    except InvalidFamilyError:
        return None


GRID = [f for n in range(2, 13) for d in range(n + 1, 41) if (f := valid_family(n, d))]


def test_make_family():
    f = make_family(2, 5)
    assert (f.G, f.g) == (1, 2)
    f = make_family(3, 5)
    assert (f.G, f.g) == (1, 4)
    # formula-driven rejection: (3, 4) is fine
    assert make_family(3, 4).g == 3


@pytest.mark.parametrize("n,d,reason", [
    (1, 5, "n_below_2"),
    (4, 4, "degree_not_above_n"),
    (5, 3, "degree_not_above_n"),
    (2, 4, "genus_below_2"),
    (2, 3, "genus_below_2"),
])
def test_make_family_rejects(n, d, reason):
    with pytest.raises(InvalidFamilyError) as exc:
        make_family(n, d)
    assert exc.value.reason == reason


def test_dimension():
    f = make_family(2, 5)
    assert dimension(QDifferentialSpace(f, 1)) == 2
    assert dimension(QDifferentialSpace(f, 2)) == 3
    assert dimension(QDifferentialSpace(make_family(3, 5), 2)) == 9
    with pytest.raises(InvalidParameterError):
        QDifferentialSpace(f, 0)


def test_exponent_set_examples():
    assert exponent_set(make_family(2, 5), 2).pairs == ((0, 0), (1, 0), (2, 0))
    s = exponent_set(make_family(3, 5), 2)
    assert s.pairs == tuple([(i, 0) for i in range(5)] + [(i, 1) for i in range(3)] + [(0, 2)])
    assert exponent_set(make_family(3, 5), 1).pairs == ((0, 0), (1, 0), (2, 0), (0, 1))
    assert (1, 1) in s and (3, 1) not in s
    with pytest.raises(InvalidParameterError):
        exponent_set(make_family(3, 5), 0)


def test_exceptional_triples():
    assert is_exceptional_triple(2, 5, 2)
    assert is_exceptional_triple(2, 6, 2)
    assert not is_exceptional_triple(3, 5, 2)


def test_infinity_vanishing_order():
    assert infinity_vanishing_order(make_family(2, 5), 2, 0, 0) == 4
    assert infinity_vanishing_order(make_family(2, 5), 2, 2, 0) == 0
    assert infinity_vanishing_order(make_family(2, 6), 2, 1, 0) == 1
    with pytest.raises(InvalidParameterError):
        infinity_vanishing_order(make_family(2, 5), 2, 3, 0)
    with pytest.raises(InvalidParameterError):
        infinity_vanishing_order(make_family(2, 5), 2, 0, 2)


@pytest.mark.parametrize("q", range(1, 9))
def test_basis_count_and_orders(q):
    for f in GRID:
        s = exponent_set(f, q)
        assert len(s) == QDifferentialSpace(f, q).dim
        for i, j in s:
            assert i >= 0 and 0 <= f.n * i + f.d * j <= f.bound(q) and 0 <= j < f.n
        assert len(set(s.affine_orders())) == len(s)
        if f.G == 1:
            assert len({f.n * i + f.d * j for i, j in s}) == len(s)
        if q >= 2:
            assert is_exceptional_triple(f.n, f.d, q) == ((2 * f.g - 2) * q - f.d * (f.n - 1) < 0)


def test_q1_top_row_empty():
    for f in GRID:
        assert all(j < f.n - 1 for _, j in exponent_set(f, 1))


def test_genus_is_gap_count_when_coprime():
    for f in GRID:
        if f.G == 1:
            assert gap_count((f.n, f.d)) == f.g


@given(st.integers(2, 60), st.integers(3, 400))
def test_genus_formula_integral(n, d):
    f = valid_family(n, d)
    if f is not None:
        assert 2 * f.g - 2 == n * d - n - d - f.G
        assert f.g >= 2
