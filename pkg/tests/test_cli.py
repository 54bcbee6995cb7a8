import csv
import io
import json
import math

import pytest

from hyperphf.cli import main
from hyperphf.phf_core import phf_eval


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_rows(text):
    return list(csv.reader(io.StringIO(text)))


def test_eval_order_three(capsys):
    code, out, _ = run(capsys, "eval", "--order", "3", "--alpha", "1", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert [rec["e_0"], rec["e_1"], rec["e_2"]] == pytest.approx(
        [1.1680583133759185, 1.0418653550989098, 0.50835815998421686], rel=1e-14
    )
    assert rec["sum_residual"] <= 1e-12


def test_eval_at_zero(capsys):
    code, out, _ = run(capsys, "eval", "--order", "3", "--alpha", "0", "--format", "csv")
    assert code == 0
    header, row = csv_rows(out)
    assert header == ["order", "alpha", "e_0", "e_1", "e_2", "sum_residual"]
    assert row == ["3", "0", "1", "0", "0", "0"]


def test_eval_hermite_extended_order_four(capsys):
    argv = ("eval", "--order", "4", "--alpha", "1", "--eta", "1", "--delta", "1", "--format", "json")
    code, out, _ = run(capsys, *argv)
    rec = json.loads(out)
    assert code == 0
    assert math.fsum(rec[f"e_{s}"] for s in range(4)) == pytest.approx(20.085536923187668, rel=1e-14)


def test_eval_hermite_extended_order_three(capsys):
    code, out, _ = run(capsys, "eval", "--order", "3", "--alpha", "1", "--eta", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["eta"] == 1.0
    assert math.fsum(rec[f"e_{s}"] for s in range(3)) == pytest.approx(math.exp(2), rel=1e-14)


@pytest.mark.parametrize(
    "argv",
    [
        ("eval", "--order", "2", "--alpha", "1", "--eta", "1"),
        ("eval", "--order", "3", "--alpha", "1", "--delta", "1"),
        ("eval", "--order", "1", "--alpha", "1"),
        ("eval", "--order", "3"),
        ("eval", "--order", "3", "--alpha", "1", "--format", "xml"),
        ("rotate", "--x", "1", "--y", "0", "--z", "0", "--alpha", "1", "--eta", "1", "--invariant"),
        ("sample", "--order", "3", "--from", "1", "--to", "0", "--step", "0.5"),
        ("sample", "--order", "3", "--from", "0", "--to", "1", "--step", "0"),
        ("verify", "nonsense"),
        ("crystallo", "spin"),
        (),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(list(argv))
        raise SystemExit(code)
    assert exc.value.code == 2


def test_eval_domain_error_exits_one(capsys):
    code, out, err = run(capsys, "eval", "--order", "3", "--alpha", "inf")
    assert code == 1 and out == "" and "error" in err


def test_decompose_golden(capsys):
    code, out, _ = run(capsys, "decompose", "--x", "2", "--y", "1", "--z", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert abs(rec["beta"] - math.log(4) / 3) <= 1e-13
    assert abs(rec["gamma"] - 2 * math.log(4) / 3) <= 1e-13
    assert (rec["modulus"], rec["phase"], rec["trace_sum"], rec["det_norm"]) == (1.0, 0.0, 4.0, 4.0)
    assert set(rec) == {"beta", "gamma", "modulus", "phase", "trace_sum", "det_norm", "roundtrip_residual"}


def test_decompose_unit(capsys):
    code, out, _ = run(capsys, "decompose", "--x", "1", "--y", "0", "--z", "0", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["beta"] == 0.0 and rec["gamma"] == 0.0


@pytest.mark.parametrize(
    "xyz, reason",
    [(("1", "1", "1"), "non-positive determinant"), (("-2", "1", "0"), "non-positive determinant")],
)
def test_decompose_non_decomposable(capsys, xyz, reason):
    code, out, err = run(capsys, "decompose", "--x", xyz[0], "--y", xyz[1], "--z", xyz[2])
    assert code == 1 and out == ""
    assert f"non-decomposable: {reason}" in err


def test_decompose_text_format(capsys):
    code, out, _ = run(capsys, "decompose", "--x", "2", "--y", "1", "--z", "1")
    assert code == 0
    fields = dict(line.split() for line in out.splitlines())
    assert float(fields["beta"]) == pytest.approx(0.462098120, abs=1e-9)
    assert float(fields["gamma"]) == pytest.approx(0.924196240, abs=1e-9)


def test_rotate_variants(capsys):
    base = ("rotate", "--x", "2", "--y", "1", "--z", "1", "--alpha", "1", "--format", "json")
    _, out, _ = run(capsys, *base)
    assert json.loads(out)["modulus"] == pytest.approx(math.exp(-0.5), rel=1e-14)
    _, out, _ = run(capsys, *base, "--invariant")
    assert json.loads(out)["modulus"] == pytest.approx(1.0, rel=1e-14)
    code, out, _ = run(capsys, "rotate", "--x", "1", "--y", "0", "--z", "0", "--alpha", "1",
                       "--eta", "0.5", "--format", "json")
    assert code == 0
    assert json.loads(out)["modulus"] == pytest.approx(0.47236655274101471, rel=1e-14)


def test_hermite_command(capsys):
    _, out, _ = run(capsys, "hermite", "--n", "4", "--x", "1", "--y", "1", "--format", "json")
    assert json.loads(out) == {"n": 4, "value": 25.0}
    _, out, _ = run(capsys, "hermite", "--n", "3", "--x", "1", "--y", "1", "--z", "1", "--format", "json")
    assert json.loads(out)["value"] == 13.0
    code, _, err = run(capsys, "hermite", "--n", "171", "--x", "1", "--y", "1")
    assert code == 1 and "error" in err


def test_crystallo_closure_and_orders(capsys):
    code, out, _ = run(capsys, "crystallo", "closure", "--format", "json")
    assert code == 0 and json.loads(out) == {"closed": True, "product_count": 12}
    _, out, _ = run(capsys, "crystallo", "orders", "--format", "json")
    orders = json.loads(out)
    assert orders["R1"] == 1 and orders["R2"] == 2 and orders["R6"] == 3
    assert set(orders.values()) == {1, 2, 3}


def test_crystallo_table_formats(capsys):
    _, out, _ = run(capsys, "crystallo", "table", "--format", "csv")
    rows = csv_rows(out)
    assert len(rows) == 13
    assert rows[5] == ["R5", "0", "0", "1", "1", "0", "0", "0", "1", "0"]
    _, out, _ = run(capsys, "crystallo", "table", "--format", "json")
    rec = json.loads(out)
    assert all(isinstance(v, int) for v in rec.values())
    assert (rec["R6_00"], rec["R6_02"], rec["R6_10"]) == (0, -1, -1)


def test_verify_crystallo(capsys):
    code, out, _ = run(capsys, "verify", "crystallo")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("checks passed")
    _, out2, _ = run(capsys, "crystallo", "verify")
    assert out2 == out


def test_verify_phf_reports_fundamental_identity(capsys):
    code, out, _ = run(capsys, "verify", "phf", "--format", "csv")
    assert code == 0
    rows = csv_rows(out)[1:]
    cubic = [r for r in rows if "fundamental" in r[1]]
    assert cubic and all(float(r[2]) <= 1e-12 for r in cubic)


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "all", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["passed"] is True
    assert all(not isinstance(v, (dict, list)) for v in rec.values())


def test_verify_fails_with_impossible_tolerance(capsys):
    code, out, _ = run(capsys, "verify", "phf", "--tol", "1e-30")
    assert code == 1 and "FAIL" in out


def test_seed_determinism(capsys):
    _, a, _ = run(capsys, "verify", "tricomplex", "--seed", "5", "--format", "json")
    _, b, _ = run(capsys, "verify", "tricomplex", "--seed", "5", "--format", "json")
    assert a == b


def test_sample_order_two(capsys):
    code, out, _ = run(capsys, "sample", "--order", "2", "--from", "0", "--to", "1", "--step", "0.5")
    rows = csv_rows(out)
    assert code == 0 and rows[0] == ["alpha", "e_0", "e_1", "sum_residual"]
    assert len(rows) == 4
    for row in rows[1:]:
        a, c, s = map(float, row[:3])
        assert c == pytest.approx(math.cosh(a), rel=1e-14)
        assert s == pytest.approx(math.sinh(a), rel=1e-14)


def test_sample_single_point(capsys):
    _, out, _ = run(capsys, "sample", "--order", "3", "--from", "0", "--to", "0", "--step", "1")
    assert out == "alpha,e_0,e_1,e_2,sum_residual\n0,1,0,0,0\n"


def test_sample_order_four_row_sums_to_e(capsys):
    _, out, _ = run(capsys, "sample", "--order", "4", "--from", "0", "--to", "1", "--step", "0.25")
    last = csv_rows(out)[-1]
    assert float(last[0]) == 1.0
    assert abs(math.fsum(map(float, last[1:5])) - math.e) <= 1e-12


def test_csv_round_trips_exactly(capsys):
    _, out, _ = run(capsys, "sample", "--order", "5", "--from", "-3", "--to", "3", "--step", "0.7")
    for row in csv_rows(out)[1:]:
        alpha = float(row[0])
        assert tuple(map(float, row[1:6])) == phf_eval(5, alpha).values


def test_csv_uses_lf_and_dot(tmp_path, capsys):
    target = tmp_path / "grid.csv"
    code = main(["sample", "--order", "3", "--from", "0", "--to", "1", "--step", "0.5", "--out", str(target)])
    assert code == 0 and capsys.readouterr().out == ""
    raw = target.read_bytes()
    assert b"\r" not in raw and b"," in raw
    assert raw.decode().splitlines()[0] == "alpha,e_0,e_1,e_2,sum_residual"


def test_json_round_trips_exactly(capsys):
    _, out, _ = run(capsys, "eval", "--order", "7", "--alpha", "-2.3", "--format", "json")
    rec = json.loads(out)
    assert tuple(rec[f"e_{s}"] for s in range(7)) == phf_eval(7, -2.3).values


def test_unwritable_out_path(tmp_path, capsys):
    bad = tmp_path / "missing" / "dir" / "x.csv"
    code = main(["sample", "--order", "3", "--from", "0", "--to", "1", "--step", "0.5", "--out", str(bad)])
    assert code == 1
    assert "cannot write" in capsys.readouterr().err
