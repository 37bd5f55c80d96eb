import json
import subprocess
import sys

import pytest

from mtcheck.cli import main
from mtcheck.modular_data import catalog, dumps


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_trivial(capsys):
    code, out, _ = run(capsys, "verify", "@trivial")
    assert code == 0
    assert json.loads(out)["overall"] == "pass"


def test_verify_missing_file(capsys):
    code, _, err = run(capsys, "verify", "missing.json")
    assert code == 2 and "missing.json" in err


def test_verify_unknown_catalog(capsys):
    code, _, err = run(capsys, "verify", "@heterotic")
    assert code == 2 and "available" in err


def test_usage_error_exit_code(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "seifert", "@ising")[0] == 2  # --genus and --word required


def test_verify_failure_exit_code(capsys, tmp_path):
    md = catalog("ising")
    bad = md.with_s(md.s * 2)
    p = tmp_path / "bad.json"
    p.write_text(dumps(bad))
    code, out, _ = run(capsys, "verify", str(p), "--no-timing")
    assert code == 1
    assert json.loads(out)["overall"] == "fail"


def test_malformed_document_names_field(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"name": "x", "rank": 2, "root_order": 4, "t_exponents": [0], "s_matrix": []}))
    code, _, err = run(capsys, "verify", str(p))
    assert code == 2 and "t_exponents" in err


def test_exit_code_matches_overall(capsys):
    for name in ("trivial", "semion"):
        code, out, _ = run(capsys, "verify", f"@{name}", "--samples", "5")
        assert (code == 0) == (json.loads(out)["overall"] == "pass")


def test_verify_deterministic_no_timing(capsys):
    a = run(capsys, "verify", "@semion", "--seed", "4", "--samples", "5", "--no-timing")[1]
    b = run(capsys, "verify", "@semion", "--seed", "4", "--samples", "5", "--no-timing")[1]
    assert a == b and '"ms"' not in a


def test_verify_out_and_checks(capsys, tmp_path):
    p = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "@ising", "--checks", "trace_identity_s", "--out", str(p))
    assert code == 0 and out == ""
    names = [c["name"] for c in json.loads(p.read_text())["checks"]]
    assert names[-1] == "trace_identity_s" and "fusion_integrality" not in names


def test_verify_pretty(capsys):
    code, out, _ = run(capsys, "verify", "@semion", "--pretty", "--samples", "5")
    assert code == 0 and out.startswith("semion: overall pass")


def test_dims_ising(capsys):
    code, out, _ = run(capsys, "dims", "@ising", "--genus-max", "2", "--pretty")
    assert code == 0
    assert out.strip().splitlines()[-1].split() == ["2", "10"]
    code, out, _ = run(capsys, "dims", "@ising", "--genus-max", "2")
    assert json.loads(out)["dims"][-1] == {"g": 2, "dim": 10}


def test_fusion_command(capsys):
    code, out, _ = run(capsys, "fusion", "@fibonacci")
    doc = json.loads(out)
    assert code == 0 and {"p": 1, "q": 1, "r": 1, "value": 1} in doc["nonzero"]


def test_galois_command(capsys):
    code, out, _ = run(capsys, "galois", "@semion")
    doc = json.loads(out)
    assert code == 0 and [u["l"] for u in doc["units"]] == [1, 5, 7, 11, 13, 17, 19, 23]


def test_seifert_command(capsys):
    code, out, _ = run(capsys, "seifert", "@ising", "--genus", "2", "--word", "S")
    doc = json.loads(out)
    assert code == 0 and doc["value"]["terms"] == [[10, 1, 0]]
    code, out, _ = run(capsys, "seifert", "@ising", "--genus", "1", "--word", "[[1,0],[1,1]]", "--word", "S T^2")
    assert code == 0


def test_seifert_bad_word(capsys):
    assert run(capsys, "seifert", "@ising", "--genus", "1", "--word", "Q")[0] == 2


def test_catalog_command(capsys):
    code, out, _ = run(capsys, "catalog")
    assert code == 0 and [e["name"] for e in json.loads(out)] == ["trivial", "semion", "fibonacci", "ising"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "mtcheck", "verify", "@trivial", "--no-timing"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["overall"] == "pass"
