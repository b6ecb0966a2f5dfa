import io
import json
import subprocess
import sys

import pytest

from commcohom import cli
from commcohom.polyalg import IntPolynomial as P


def invoke(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "commcohom", *args], capture_output=True, text=True, timeout=120
    )
    return proc.returncode, proc.stdout, proc.stderr


def run_inproc(*args):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(args), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_table_row():
    code, out, _ = invoke("--spec", "A1", "--n", "2", "--format", "table")
    assert code == 0
    assert "1 + q^2 + 2*q^3" in out.splitlines()[1]


def test_n0_is_one():
    code, out, _ = invoke("--spec", "A1", "--n", "0", "--format", "csv")
    assert code == 0
    assert out.splitlines()[1].split(",")[-1] == "1"


def test_oracle_exit_zero():
    code, _, err = invoke("--spec", "B2xT1", "--n", "1", "--oracle")
    assert code == 0, err


def test_json_records():
    code, out, _ = run_inproc("--spec", "T1", "--n", "1", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert out.startswith('{"spec":"T1","n":1,')
    assert rec["poincare_coeffs"] == [1, 1]
    _, out, _ = run_inproc("--spec", "A1", "--n", "3", "--format", "json")
    assert json.loads(out)["poincare_coeffs"] == [1, 0, 3, 3, 0, 1]
    _, out, _ = run_inproc("--spec", "A2", "--n", "1", "--format", "json")
    rec = json.loads(out)
    assert rec["poincare_coeffs"] == [1, 0, 0, 1, 0, 1, 0, 0, 1]
    assert rec["betti"] == rec["poincare_coeffs"]
    assert P(rec["poincare_coeffs"])(1) == rec["total"] == 4
    assert rec["palindromic"] is True and rec["manifold_dim"] == 8


def test_json_round_trip_is_byte_identical():
    _, out, _ = run_inproc("--spec", "G2xT1", "--n-range", "0..3", "--format", "json")
    for line in out.strip().splitlines():
        assert cli.render_json(cli.parse_json_record(line)) == line


def test_json_field_order():
    _, out, _ = run_inproc("--spec", "A1", "--n", "1", "--format", "json")
    assert list(json.loads(out)) == list(cli.RECORD_FIELDS)


def _strip_timing(line):
    rec = json.loads(line)
    rec.pop("time_ms")
    return rec


def test_n_range_matches_single_runs():
    _, out, _ = run_inproc("--spec", "B2", "--n-range", "0..3", "--format", "json")
    rows = [_strip_timing(l) for l in out.strip().splitlines()]
    assert [r["n"] for r in rows] == [0, 1, 2, 3]
    for n, row in enumerate(rows):
        _, single, _ = run_inproc("--spec", "B2", "--n", str(n), "--format", "json")
        assert _strip_timing(single) == row


def test_latex_and_csv():
    _, out, _ = run_inproc("--spec", "A1", "--n", "2", "--format", "latex")
    assert "1+q^{2}+2q^{3}" in out
    _, out, _ = run_inproc("--spec", "A1", "--n-range", "1..2", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "spec,n,dim,euler,total,poincare"
    assert lines[2] == "A1,2,4,0,4,1 + q^2 + 2*q^3"


@pytest.mark.parametrize(
    "args, fragment",
    [
        (("--spec", "D1"), "D1"),
        (("--spec", "A1xQ3"), "Q3"),
        (("--spec", "E8", "--n", "1"), "E8"),
        (("--n", "1"), "--spec"),
        (("--spec", "A1", "--n-range", "3..1"), "--n-range"),
        (("--spec", "A1", "--n", "-1"), "--n"),
        (("--spec", "A1", "--format", "xml"), "format"),
        (("--spec", "E6", "--oracle"), "--oracle"),
    ],
)
def test_validation_failures_exit_2(args, fragment):
    code, out, err = invoke(*args)
    assert code == 2
    assert fragment in err


def test_e8_message_mentions_cap():
    code, _, err = run_inproc("--spec", "E8")
    assert code == 2 and "--cap" in err and "696729600" in err


def test_oracle_mismatch_exit_3(monkeypatch):
    monkeypatch.setattr(cli, "poincare_brute", lambda spec, n, cap: P([1, 2, 3]))
    code, _, err = run_inproc("--spec", "A1", "--n", "2", "--oracle")
    assert code == 3
    assert "1 + q^2 + 2*q^3" in err and "1 + 2*q + 3*q^2" in err


def test_check_passes_and_detects(monkeypatch):
    code, _, err = run_inproc("--spec", "C3xT1", "--n-range", "0..4", "--check")
    assert code == 0, err
    monkeypatch.setattr(cli, "closed_form_n1", lambda spec: P([1, 1]))
    code, _, err = run_inproc("--spec", "A2", "--n", "2", "--check")
    assert code == 3
    assert "n=1" in err and "1 + q" in err


def test_batch(tmp_path):
    f = tmp_path / "specs.txt"
    f.write_text("A1\n# comment\n\nc2xt1\nG2\n")
    code, out, _ = run_inproc("--batch", str(f), "--n", "1", "--format", "csv")
    assert code == 0
    assert [l.split(",")[0] for l in out.strip().splitlines()[1:]] == ["A1", "B2xT1", "G2"]
    f.write_text("A1\nZ9\n")
    code, _, err = run_inproc("--batch", str(f))
    assert code == 2 and ":2:" in err


def test_cache_round_trip_and_corruption(tmp_path):
    path = tmp_path / "cache.json"
    code, first, _ = run_inproc("--spec", "F4", "--n", "2", "--format", "csv", "--cache", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert sum(e["count"] for e in data["F4"]) == 1152
    code, second, _ = run_inproc("--spec", "F4", "--n", "2", "--format", "csv", "--cache", str(path))
    assert code == 0 and second == first
    data["F4"][0]["count"] += 1
    path.write_text(json.dumps(data))
    code, _, err = run_inproc("--spec", "F4", "--cache", str(path))
    assert code == 2 and "cache" in err
    path.write_text("not json")
    code, _, err = run_inproc("--spec", "A1", "--cache", str(path))
    assert code == 2


def test_cap_flag_gates_enumeration():
    code, _, err = run_inproc("--spec", "F4", "--cap", "100")
    assert code == 2 and "F4" in err
    code, _, _ = run_inproc("--spec", "A2", "--n", "2", "--oracle", "--cap", "10")
    assert code == 0
