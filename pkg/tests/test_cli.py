import csv
import subprocess
import sys
from fractions import Fraction

import pytest

from ellipstolarsky import approximations as apx
from ellipstolarsky.approximations import ApproxId, LeadingOrder
from ellipstolarsky.cli import expected_direction, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def read_csv(path):
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.reader(fh))


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "--r", "0.5", "--target", "E,K,A5,s_family(2)")
    assert code == 0
    lines = out.splitlines()
    assert [ln.split()[0] for ln in lines] == ["E", "K", "A5", "s_family(2.0)"]
    assert float(lines[0].split()[1]) == pytest.approx(1.4674622093394272, rel=1e-14)
    assert float(lines[1].split()[1]) == pytest.approx(1.685750354812596, rel=1e-14)
    assert float(lines[2].split()[2]) < 0 < float(lines[3].split()[2])


@pytest.mark.parametrize("argv", [
    ("eval", "--r", "1.5", "--target", "E"),
    ("eval", "--r", "1", "--target", "K"),
    ("eval", "--r", "0.5", "--target", "A9"),
    ("eval", "--r", "0.5", "--target", "s_family(3)"),
    ("table", "--grid", "1", "--ids", "A1", "--out", "x.csv"),
    ("scan-p", "--lo", "0", "--hi", "2.5", "--steps", "2", "--grid", "20", "--out", "x.csv"),
    ("conjecture", "--grid", "10", "--out", "x.csv"),
])
def test_domain_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--level", "medium"])
    assert exc.value.code == 2


def test_io_error_exit_3(capsys, tmp_path):
    out = tmp_path / "missing" / "t.csv"
    code, _, err = run(capsys, "table", "--grid", "2", "--ids", "A1", "--out", str(out))
    assert code == 3 and "error" in err


def test_table(capsys, tmp_path):
    out = tmp_path / "t.csv"
    assert run(capsys, "table", "--grid", "3", "--ids", "A5,A8", "--out", str(out))[0] == 0
    rows = read_csv(out)
    assert rows[0] == ["r", "rprime", "two_over_pi_E", "A5_value", "A5_error", "A8_value", "A8_error"]
    assert [row[0] for row in rows[1:4]] == ["0.25", "0.5", "0.75"]
    assert [row[0] for row in rows[4:]] == ["max_abs_error", "argmax_r", "fit_n0", "fit_eps"]
    assert rows[6][3] == "6" and rows[6][5] == "4"
    raw = out.read_bytes()
    assert b"\r\n" not in raw and raw.endswith(b"\n")


def test_table_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "table", "--grid", "25", "--ids", "A1,A6", "--out", str(a))
    run(capsys, "table", "--grid", "25", "--ids", "A1,A6", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_verify_fast(capsys):
    code, out, _ = run(capsys, "verify", "--level", "fast")
    fails = [ln for ln in out.splitlines() if ln.startswith("FAIL")]
    # the tabulated A4 coefficient is the only defect visible at this level
    assert code == 1
    assert len(fails) == 1 and fails[0].startswith("FAIL AC3:") and "A4" in fails[0]
    assert out.splitlines()[-1] == "failing checks: AC3"
    for i in range(1, 11):
        assert any(ln.split()[1] == f"AC{i}:" for ln in out.splitlines() if ln[:4] in ("PASS", "FAIL"))


def test_verify_detects_corrupted_catalogue(capsys, monkeypatch):
    monkeypatch.setitem(apx.LEADING_ORDERS, ApproxId.A1, LeadingOrder(4, Fraction(-1, 2 ** 10)))
    code, out, _ = run(capsys, "verify", "--level", "fast")
    assert code == 1
    ac3 = next(ln for ln in out.splitlines() if ln.startswith("FAIL AC3:"))
    assert "A1:" in ac3


def test_expected_direction():
    assert expected_direction(-1.0) == "increasing"
    assert expected_direction(1.75) == "increasing"
    assert expected_direction(1.9) == "unclassified"
    assert expected_direction(2.0) == "decreasing"
    assert expected_direction(2.25) == "decreasing"


def test_scan_p(capsys, tmp_path):
    out = tmp_path / "s.csv"
    code, text, _ = run(capsys, "scan-p", "--lo", "1.75", "--hi", "2.25", "--steps", "3",
                        "--grid", "60", "--out", str(out))
    assert code == 0
    rows = read_csv(out)
    assert rows[0][:4] == ["p", "direction", "expected", "difference_sign"]
    by_p = {row[0]: row for row in rows[1:]}
    assert by_p["1.75"][1:4] == ["increasing", "increasing", "positive"]
    assert by_p["2.0"][1:4] == ["decreasing", "decreasing", "negative"]
    assert by_p["2.25"][1:4] == ["decreasing", "decreasing", "negative"]
    assert text.splitlines()[0] == "1.75 increasing increasing positive"


def test_scan_p_between_classes(capsys, tmp_path):
    out = tmp_path / "s.csv"
    run(capsys, "scan-p", "--lo", "1.9", "--hi", "1.9", "--steps", "1", "--grid", "40", "--out", str(out))
    row = read_csv(out)[1]
    assert row[2] == "unclassified"


def test_conjecture(capsys, tmp_path):
    out = tmp_path / "h.csv"
    code, text, _ = run(capsys, "conjecture", "--grid", "400", "--out", str(out))
    assert code == 0
    rows = read_csv(out)
    assert rows[0] == ["r", "H"] and len(rows) == 401
    lines = dict(ln.split(" ", 1) for ln in text.splitlines())
    assert float(lines["p0"]) == pytest.approx(1.763135, abs=1e-5)
    assert lines["inequality_holds"].startswith("True")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "ellipstolarsky", "eval", "--r", "0", "--target", "E"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout.strip() == "E 1.5707963267948966"
