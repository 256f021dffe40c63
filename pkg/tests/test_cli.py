import json

import pytest

from symspace.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rootsystem_f4(capsys):
    code, out, _ = run(capsys, "rootsystem", "f4")
    assert code == 0
    assert "2 3 4 2" in out
    assert "d_sq" in out and "2" in out


def test_rootsystem_bc3(capsys):
    code, out, _ = run(capsys, "rootsystem", "bc3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["root_count"] == 24
    assert data["highest_root"] == [2, 2, 2]


def test_rootsystem_bad_kind(capsys):
    code, _, err = run(capsys, "rootsystem", "q9")
    assert code == 2
    assert "error" in err


def test_space_ai4(capsys):
    code, out, _ = run(capsys, "space", "AI:n=4")
    assert code == 0
    assert "pi*sqrt(4)" in out and "pi*sqrt(8)" in out


def test_space_canonical(capsys):
    code, out, _ = run(capsys, "space", "BDI:p=2,q=5", "--canonical")
    assert code == 0
    assert "pi*sqrt(1/2)" in out


def test_space_group_e7(capsys):
    code, out, _ = run(capsys, "space", "GROUP:e7")
    assert code == 0
    assert "pi*sqrt(36)" in out


def test_space_no_canonical_metric(capsys):
    code, _, err = run(capsys, "space", "AI:n=4", "--canonical")
    assert code == 3
    assert "canonical" in err


def test_space_conflicting_metric_flags(capsys):
    code, _, err = run(capsys, "space", "AI:n=4", "--epsilon", "1", "--ric", "2")
    assert code == 2


def test_space_bad_label(capsys):
    code, _, err = run(capsys, "space", "AI:n=1")
    assert code == 2


def test_table_42_tsv(capsys):
    code, out, _ = run(capsys, "table", "4.2", "--max-param", "4",
                       "--format", "tsv")
    assert code == 0
    lines = out.strip().splitlines()
    spin8 = [ln for ln in lines if "Spin(8)" in ln]
    assert spin8 and "pi*sqrt(12)" in spin8[0]


def test_table_41_small_bound(capsys):
    code, out, _ = run(capsys, "table", "4.1", "--max-param", "2",
                       "--format", "tsv")
    assert code == 0
    assert "FII" in out and "pi*sqrt(18)" in out
    assert "AIII:p=1,q=2" in out and "bc1" in out


def test_table_json_roundtrip(capsys):
    code, out, _ = run(capsys, "table", "4.2", "--max-param", "4",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert json.dumps(data, indent=2) == out.strip()


def test_cut_interior(capsys):
    code, out, _ = run(capsys, "cut", "AI:n=3", "--point", "0,0")
    assert code == 0
    assert "interior" in out


def test_cut_face_point(capsys):
    # psi/(psi,psi) in Killing units for AI:n=3 (psi_sq = 1/3): coeffs 3,3
    code, out, _ = run(capsys, "cut", "AI:n=3", "--point", "3,3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["classification"] == "on-cut-face"
    assert data["conjugate"] is True


def test_cut_reduction_first(capsys):
    code, out, _ = run(capsys, "cut", "AI:n=3", "--point", "0,3",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    # (0,3) = s_1(3,3); reduction recovers the dominant face point
    assert data["dominant_representative"] == ["3", "3"]
    assert data["classification"] == "on-cut-face"


def test_cut_bad_point(capsys):
    code, _, err = run(capsys, "cut", "AI:n=3", "--point", "1,2,3")
    assert code == 2


def test_product_doubling(capsys):
    code, out, _ = run(capsys, "product", "AI:n=4", "AI:n=4")
    assert code == 0
    assert "pi*sqrt(16)" in out


def test_product_single_matches_space(capsys):
    code, out, _ = run(capsys, "product", "GROUP:g2", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["injectivity_radius"]["exact"] == "pi*sqrt(8)"
    assert data["diameter"]["exact"] == "pi*sqrt(32/3)"


def test_verify_deterministic(capsys):
    code1, out1, _ = run(capsys, "verify", "--seed", "42", "--samples", "1000",
                         "--max-param", "4")
    code2, out2, _ = run(capsys, "verify", "--seed", "42", "--samples", "1000",
                         "--max-param", "4")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "pass" in out1


def test_verify_exit_1_on_failure(capsys, monkeypatch):
    from symspace import cli
    from symspace.oracle import OracleReport
    fake = [OracleReport(name="forced", exact="0", numeric=1.0, error=1.0,
                         passed=False)]
    monkeypatch.setattr(cli.verify, "run_all", lambda *a, **k: fake)
    code, out, _ = run(capsys, "verify")
    assert code == 1
    assert "FAIL" in out


def test_space_json_roundtrip(capsys):
    code, out, _ = run(capsys, "space", "EVIII", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["injectivity_radius"]["exact"] == "pi*sqrt(30)"
    assert json.dumps(data, indent=2) == out.strip()
