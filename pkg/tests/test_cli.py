import json
import subprocess
import sys
from pathlib import Path

import pytest

from cointerval_dga.cli import main
from cointerval_dga.formats import resolution_from_json
from cointerval_dga.resolution import differential, full_basis

ROOT = Path(__file__).resolve().parents[1]
EXAMPLE = str(ROOT / "data" / "example.intervals")


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_resolve_text(capsys):
    code, out, _ = run(capsys, "resolve", "--input", EXAMPLE)
    assert code == 0
    assert "1      | [1|4], [2|3], [2|4], [3|4]" in out
    assert "2      | [1,2|4], [1,3|4], [2,3|4], [2|3,4]" in out
    assert "3      | [1,2,3|4]" in out
    assert "d[1,2,3|4] = -x1*[2,3|4] + x2*[1,3|4] - x3*[1,2|4]" in out


def test_resolve_json_roundtrip(capsys, G):
    code, out, _ = run(capsys, "--format", "json", "resolve", "--input", EXAMPLE)
    assert code == 0
    H, basis, diffs = resolution_from_json(json.loads(out))
    assert H == G and basis == full_basis(G)
    assert all(diffs[e] == differential(G, e) for e in diffs)
    # the flag is also accepted after the subcommand
    code, out2, _ = run(capsys, "resolve", "--input", EXAMPLE, "--format", "json")
    assert out2 == out


def test_resolve_edgeless(tmp_path, capsys):
    p = tmp_path / "e.intervals"
    p.write_text("0 2\n1 3\n")
    code, out, _ = run(capsys, "resolve", "--input", str(p))
    assert code == 0 and "[" not in out.split("\n", 1)[1]


def test_resolve_relabel_note(tmp_path, capsys):
    p = tmp_path / "r.intervals"
    p.write_text("4 5\n0 1\n2 3\n")
    code, out, _ = run(capsys, "resolve", "--input", str(p))
    assert code == 0 and "relabeled (new<-input): 1<-2, 2<-3, 3<-1" in out


def test_malformed_input(tmp_path, capsys):
    p = tmp_path / "bad.intervals"
    p.write_text("0 3\n0 1\nzz\n")
    code, _, err = run(capsys, "resolve", "--input", str(p))
    assert code == 2 and "line 3" in err
    code, _, err = run(capsys, "resolve", "--input", str(tmp_path / "missing"))
    assert code == 2


def test_betti(capsys, tmp_path):
    code, out, _ = run(capsys, "betti", "--input", EXAMPLE, "--oracle")
    assert code == 0 and "totals: 1,4,4,1" in out and "oracle agrees" in out
    p = tmp_path / "one.intervals"
    p.write_text("0 1\n2 3\n")
    code, out, _ = run(capsys, "betti", "--input", str(p))
    assert code == 0 and "totals: 1,1" in out


def test_betti_oracle_mismatch(capsys, monkeypatch):
    import cointerval_dga.cli as cli
    from cointerval_dga.resolution import BettiTable
    monkeypatch.setattr(cli, "taylor_betti_oracle", lambda G: BettiTable())
    code, out, _ = run(capsys, "betti", "--input", EXAMPLE, "--oracle")
    assert code == 1


def test_multiply(capsys):
    code, out, _ = run(capsys, "multiply", "--input", EXAMPLE, "--left", "[1|4]", "--right", "[2|3]")
    assert (code, out) == (0, "x1*[2|3,4] + x3*[1,2|4]\n")
    code, out, _ = run(capsys, "multiply", "--input", EXAMPLE, "--left", "[1|4]", "--right", "[2|3,4]")
    assert (code, out) == (0, "0\n")
    code, out, _ = run(capsys, "multiply", "--input", EXAMPLE, "--left", "[1 2|4]", "--right", "[3|4]")
    assert (code, out) == (0, "-x4*[1,2,3|4]\n")
    code, _, _ = run(capsys, "multiply", "--input", EXAMPLE, "--left", "[1|3]", "--right", "[2|4]")
    assert code == 2


def test_homotopy(capsys):
    code, out, _ = run(capsys, "homotopy", "--input", EXAMPLE, "--element", "x1*x4*[2|3]")
    assert code == 0
    assert "c(x1*x4*[2|3]) = x1*[2|3,4] + x3*[1,2|4]" in out
    assert "C1 = {4}  C2 = {}  C3 = {1}" in out
    assert "class: Lower(M1)" in out
    code, out, _ = run(capsys, "homotopy", "--input", EXAMPLE, "--element", "x1*x2")
    assert "= 0" in out and "class: Critical" in out
    code, out, _ = run(capsys, "homotopy", "--input", EXAMPLE, "--element", "[2|3,4]")
    assert "= 0" in out and "class: Upper(M1)" in out
    code, out, _ = run(capsys, "--format", "json", "homotopy", "--input", EXAMPLE, "--element", "x4*[2|3]")
    assert json.loads(out)["class"]["partner"] == "[2|3,4]"


def test_table_matches_golden(capsys):
    code, out, _ = run(capsys, "table", "--input", EXAMPLE, "--max-degree", "3")
    assert code == 0
    golden = ROOT / "tests" / "golden"
    assert (golden / "example_products_1x1.txt").read_text() in out
    assert (golden / "example_products_1x2.txt").read_text() in out
    code, out, _ = run(capsys, "--format", "json", "table", "--input", EXAMPLE, "--max-degree", "2")
    rows = json.loads(out)
    assert {"left": "[1|4]", "right": "[2|4]",
            "chain": [{"coeff": 1, "monomial": "x4", "basis": "[1,2|4]"}]} in rows


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--input", EXAMPLE, "--suite", "all")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "--format", "json", "verify", "--family", "3,4", "--suite", "dga")
    assert code == 0 and json.loads(out)[0]["status"] == "pass"


def test_verify_fault_gives_leibniz_witness(capsys, monkeypatch):
    import cointerval_dga.resolution as res
    monkeypatch.setattr(res, "_ALPHA1_OFFSET", 1)
    code, out, _ = run(capsys, "verify", "--input", EXAMPLE, "--suite", "dga")
    assert code == 1 and "Leibniz" in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["resolve", "--bogus"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "resolve")
    assert code == 2 and "--input" in err
    code, _, _ = run(capsys, "verify", "--family", "x")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cointerval_dga", "multiply", "--input", EXAMPLE,
                           "--left", "[2|4]", "--right", "[3|4]"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "x4*[2,3|4]\n"
