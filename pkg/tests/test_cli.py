import csv
import io
import json

import pytest

from qweight.cli import EXIT_INVALID, EXIT_UNSUPPORTED, decimal_str, json_num, main, report_row, sweep_rows
from qweight.curve import CurveFamily
from qweight.weights import asymptotic_bound


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_weight_text():
    code, out = run(["weight", "-n", "2", "-d", "5", "-q", "2"])
    assert code == 0
    assert "affine      3" in out and "infinity    3" in out
    assert "BW_q        18" in out and "total       18" in out


def test_weight_json():
    code, out = run(["weight", "-n", "3", "-d", "5", "-q", "2", "--json"])
    obj = json.loads(out)
    assert code == 0
    assert obj["affine_weight"] == 8 and obj["branch_total"] == 48
    assert obj["proportion"] == "4/27" and obj["proportion_decimal"] == "0.148148"


def test_global_flags_before_subcommand():
    code, out = run(["--json", "--precision", "3", "weight", "-n", "3", "-d", "5"])
    assert json.loads(out)["proportion_decimal"] == "0.148"


def test_weight_invalid(capsys):
    code, _ = run(["weight", "-n", "2", "-d", "4", "-q", "2"])
    assert code == EXIT_INVALID
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "genus_below_2" and "genus below 2" in err["message"]


def test_weight_gcd_above_1(capsys):
    code, out = run(["weight", "-n", "4", "-d", "6"])
    assert code == 0 and "requires f; gcd(n,d)>1" in out
    code, _ = run(["weight", "-n", "4", "-d", "6", "--strict"])
    assert code == EXIT_UNSUPPORTED


def test_verify_small(capsys):
    code, out = run(["verify", "--n-max", "2", "--d-max", "6", "--q-max", "2"])
    assert code == 0 and out.startswith("all ") and "checks passed" in out


def test_verify_empty(capsys):
    code, _ = run(["verify", "--n-max", "2", "--d-max", "4", "--q-max", "3"])
    assert code == EXIT_INVALID
    assert "empty grid" in capsys.readouterr().err


def test_sweep_csv():
    code, out = run(["sweep", "-n", "2", "--d-min", "5", "--d-max", "6", "-q", "2", "--csv"])
    assert code == 0
    assert "\r" not in out
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["d"] for r in rows] == ["5", "6"]
    assert rows[0]["branch_total"] == "18" and rows[0]["proportion"] == "1/1"
    assert rows[1]["infinity_weight"] == "" and rows[1]["branch_total"] == ""


def test_sweep_json_round_trip():
    code, out = run(["sweep", "-n", "3", "--d-min", "4", "--d-max", "40", "-q", "2", "5", "--json"])
    rows = json.loads(out)
    assert code == 0 and rows
    for row in rows:
        fam = CurveFamily(row["n"], row["d"])
        assert report_row(fam, row["q"]) == row
    by_q = {}
    for row in rows:
        by_q.setdefault(row["q"], []).append(row["affine_weight"])
    # 5 = 2 (mod 3)
    assert by_q[2] == by_q[5]


def test_sweep_coprime_only_deviation_shrinks():
    rows = sweep_rows(3, 4, 400, [2], coprime_only=True)
    assert all(r["gcd"] == 1 for r in rows)
    assert all(r["asymptotic_bound"] == "1/27" for r in rows)
    dev = [r["deviation"] for r in rows]
    from fractions import Fraction
    assert Fraction(dev[-1]) < Fraction(dev[len(dev) // 4])


def test_sweep_invalid(capsys):
    assert run(["sweep", "-n", "3", "--d-min", "3", "--d-max", "9"])[0] == EXIT_INVALID
    assert run(["sweep", "-n", "3", "--d-min", "4", "--d-max", "9", "-q", "0"])[0] == EXIT_INVALID


def test_semigroup():
    code, out = run(["semigroup", "3", "5"])
    assert code == 0
    assert "{1, 2, 4, 7}" in out and "count      4" in out and "sum        14" in out
    assert "frobenius  7" in out
    code, out = run(["semigroup", "2", "3", "--json"])
    assert json.loads(out) == {"a": 2, "b": 3, "gaps": [1], "elided": 0, "count": 1,
                               "sum": 1, "frobenius": 1, "agrees": True}


def test_semigroup_infinite_and_limit():
    code, out = run(["semigroup", "4", "6"])
    assert code == 0 and "infinite gap set" in out
    code, out = run(["semigroup", "7", "11", "--limit", "3"])
    assert "{1, 2, 3, ... (27 more)}" in out


@pytest.mark.parametrize("x,digits,expected", [
    ("1/8", 2, "0.12"),
    ("3/8", 2, "0.38"),
    ("-1/8", 2, "-0.12"),
    ("4/27", 6, "0.148148"),
    ("5/2", 0, "2"),
    ("1/1", 3, "1.000"),
])
def test_decimal_half_even(x, digits, expected):
    from fractions import Fraction
    assert decimal_str(Fraction(x), digits) == expected


def test_json_num():
    assert json_num(2**63 - 1) == 2**63 - 1
    assert json_num(2**63) == str(2**63)
    assert json_num(None) is None


def test_big_numbers_serialize_as_strings():
    row = report_row(CurveFamily(3, 10**8 + 1), 2)
    assert isinstance(row["branch_total"], str)
    assert int(row["branch_total"]) > 2**63
    assert row["asymptotic_bound"] == "1/27" == f"{asymptotic_bound(3, 2).numerator}/27"
