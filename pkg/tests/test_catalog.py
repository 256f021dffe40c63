from fractions import Fraction as F

import pytest

from symspace.catalog import (InvalidParams, MissingSatakeData, SpaceLabel,
                              enumerate_table, parse_label, resolve,
                              restriction_factor_crosscheck, to_json_dict)
from symspace.killing import killing_delta_sq
from symspace.roots import RootKind, build


def test_parse_label_grammar():
    assert str(parse_label("AI:n=4")) == "AI:n=4"
    assert str(parse_label("aiii:p=2,q=5")) == "AIII:p=2,q=5"
    assert str(parse_label("G")) == "G"
    assert str(parse_label("GROUP:e8")) == "GROUP:e8"
    for bad in ("XX:n=1", "AI", "AI:p=2", "AI:n=x", "GROUP", "GROUP:h3",
                "AIII:p=2", "G:n=2"):
        with pytest.raises(InvalidParams):
            parse_label(bad)


def test_resolve_ai4():
    e = resolve("AI:n=4")
    assert e.ambient == RootKind("a", 3)
    assert e.restricted == RootKind("a", 3)
    assert e.restriction_factor == 1
    assert e.psi_sq_killing == F(1, 4)
    assert e.name == "SU(4)/SO(4)"


def test_resolve_fii():
    e = resolve("FII")
    assert e.ambient == RootKind("f", 4)
    assert e.restricted == RootKind("bc", 1)
    assert e.restriction_factor == F(1, 2)
    assert e.psi_sq_killing == F(1, 18)


def test_resolve_group_e6():
    e = resolve("GROUP:e6")
    assert e.psi_sq_killing == F(1, 24)
    assert e.space_type == "II"
    assert e.name == "E6"


def test_group_rejects_bc():
    with pytest.raises(InvalidParams):
        resolve("GROUP:bc2")


def test_invalid_params_messages():
    for bad in ("AI:n=1", "AII:n=1", "BDI:p=2,q=2", "BDI:p=3,q=3",
                "BDI:p=1,q=1", "DIII:n=3", "CI:n=0", "AIII:p=3,q=2"):
        with pytest.raises(InvalidParams):
            resolve(bad)


def test_restricted_case_analysis():
    assert resolve("AIII:p=2,q=5").restricted_name == "bc2"
    assert resolve("AIII:p=3,q=3").restricted_name == "c3"
    assert resolve("AIII:p=1,q=9").restricted_name == "bc1"
    assert resolve("AIII:p=1,q=1").restricted_name == "bc1"
    assert resolve("BDI:p=2,q=7").restricted_name == "b2"
    assert resolve("BDI:p=4,q=4").restricted_name == "d4"
    assert resolve("BDI:p=1,q=7").restricted_name == "a1"
    assert resolve("DIII:n=6").restricted_name == "c3"
    assert resolve("DIII:n=7").restricted_name == "bc3"
    # rank aliases resolve to buildable kinds
    assert resolve("AIII:p=2,q=2").restricted == RootKind("b", 2)
    assert resolve("DIII:n=4").restricted == RootKind("b", 2)
    assert resolve("CI:n=1").restricted == RootKind("a", 1)
    assert resolve("CI:n=2").restricted == RootKind("b", 2)


def test_ambient_map():
    assert resolve("AI:n=6").ambient == RootKind("a", 5)
    assert resolve("AII:n=3").ambient == RootKind("a", 5)
    assert resolve("AIII:p=2,q=5").ambient == RootKind("a", 6)
    assert resolve("CI:n=5").ambient == RootKind("c", 5)
    assert resolve("CII:p=2,q=3").ambient == RootKind("c", 5)
    assert resolve("DIII:n=5").ambient == RootKind("d", 5)
    # BDI parity: odd p+q -> b, even -> d
    assert resolve("BDI:p=2,q=5").ambient == RootKind("b", 3)
    assert resolve("BDI:p=4,q=4").ambient == RootKind("d", 4)
    assert resolve("BDI:p=2,q=4").ambient == RootKind("a", 3)  # d3 alias
    assert resolve("BDI:p=1,q=2").ambient == RootKind("a", 1)  # b1 alias


def test_psi_sq_closed_forms():
    for p in range(1, 13):
        for q in range(p, 13):
            assert resolve(SpaceLabel("AIII", p=p, q=q)).psi_sq_killing == F(1, p + q)
            assert resolve(SpaceLabel("CII", p=p, q=q)).psi_sq_killing == \
                F(1, 2 * (p + q + 1))
            if (p == 1 and q >= 2) or (2 <= p < q) or (4 <= p == q):
                want = F(1, 2 * q - 2) if p == 1 else F(1, p + q - 2)
                assert resolve(SpaceLabel("BDI", p=p, q=q)).psi_sq_killing == want
    for n in range(2, 13):
        assert resolve(SpaceLabel("AI", n=n)).psi_sq_killing == F(1, n)
        assert resolve(SpaceLabel("AII", n=n)).psi_sq_killing == F(1, 4 * n)
    for n in range(1, 13):
        assert resolve(SpaceLabel("CI", n=n)).psi_sq_killing == F(1, n + 1)
    for n in range(4, 13):
        assert resolve(SpaceLabel("DIII", n=n)).psi_sq_killing == F(1, 2 * n - 2)


def test_psi_sq_from_ambient_killing_form():
    # one source of truth: factor times the ambient highest-root length,
    # cross-checked here against enumerated Killing normalization
    labels = ["AI:n=5", "AII:n=4", "AIII:p=2,q=4", "CI:n=4", "CII:p=1,q=3",
              "BDI:p=2,q=5", "BDI:p=1,q=4", "BDI:p=4,q=4", "DIII:n=6",
              "EI", "EIV", "EVIII", "FII", "G"]
    for lab in labels:
        e = resolve(lab)
        assert e.psi_sq_killing == \
            e.restriction_factor * killing_delta_sq(build(e.ambient)), lab


def test_psi_sq_invariant_full_sweep():
    # every table entry whose ambient closure fits under the guard
    from symspace.roots import root_count
    checked = 0
    for which in ("4.1", "4.2"):
        for e in enumerate_table(which, 12):
            if root_count(e.ambient) > 500:
                continue
            assert e.psi_sq_killing == \
                e.restriction_factor * killing_delta_sq(build(e.ambient)), e.label
            checked += 1
    assert checked > 300


def test_group_psi_is_half_ambient():
    for kind in ("a4", "b3", "c5", "d6", "e7", "g2"):
        e = resolve(f"GROUP:{kind}")
        assert e.psi_sq_killing == killing_delta_sq(build(e.ambient)) / 2


def test_restriction_factor_list():
    half = ["AII:n=2", "AII:n=7", "CII:p=1,q=1", "CII:p=3,q=3", "CII:p=2,q=6",
            "EIV", "FII", "BDI:p=1,q=3", "BDI:p=1,q=12"]
    one = ["AI:n=3", "AIII:p=2,q=2", "AIII:p=1,q=5", "CI:n=3", "BDI:p=2,q=3",
           "BDI:p=5,q=5", "BDI:p=1,q=2", "DIII:n=5", "EI", "EII", "EIII",
           "EV", "EVI", "EVII", "EVIII", "EIX", "FI", "G"]
    for lab in half:
        assert resolve(lab).restriction_factor == F(1, 2), lab
    for lab in one:
        assert resolve(lab).restriction_factor == 1, lab


def test_satake_crosscheck_examples():
    # a5 ambient with odd nodes black: alpha_1 black but not orthogonal to
    # the highest root, so the factor must be 1/2
    e = resolve("AII:n=3")
    assert e.satake_black_nodes == frozenset({1, 3, 5})
    assert restriction_factor_crosscheck(e)
    e = resolve("AI:n=5")
    assert e.satake_black_nodes == frozenset()
    assert restriction_factor_crosscheck(e)
    assert restriction_factor_crosscheck(resolve("EIV"))


def test_satake_crosscheck_sweep():
    for which in ("4.1",):
        for entry in enumerate_table(which, 8):
            if entry.satake_black_nodes is None or entry.ambient.rank > 12:
                continue
            assert restriction_factor_crosscheck(entry), str(entry.label)


def test_crosscheck_missing_data():
    with pytest.raises(MissingSatakeData):
        restriction_factor_crosscheck(resolve("GROUP:e8"))
    with pytest.raises(MissingSatakeData):
        restriction_factor_crosscheck(resolve("BDI:p=1,q=3"))


def test_enumerate_table_42():
    entries = enumerate_table("4.2", 4)
    labels = {str(e.label) for e in entries}
    assert "GROUP:a3" in labels          # SU(4)
    assert "GROUP:c3" in labels          # Sp(3)
    assert "GROUP:d4" in labels          # Spin(8)
    for exc in ("GROUP:e6", "GROUP:e7", "GROUP:e8", "GROUP:f4", "GROUP:g2"):
        assert exc in labels
    assert len(entries) == len(set(map(str, (e.label for e in entries))))


def test_enumerate_table_41():
    entries = enumerate_table("4.1", 2)
    labels = {str(e.label) for e in entries}
    assert "AIII:p=1,q=2" in labels
    assert resolve("AIII:p=1,q=2").restricted_name == "bc1"
    assert "FII" in labels               # exceptionals regardless of bound
    entries4 = enumerate_table("4.1", 4)
    assert any(str(e.label) == "BDI:p=4,q=4"
               and e.restricted_name == "d4" for e in entries4)
    # deterministic ordering
    assert [str(e.label) for e in entries4] == \
        [str(e.label) for e in enumerate_table("4.1", 4)]


def test_enumerate_table_bound_check():
    with pytest.raises(InvalidParams):
        enumerate_table("4.1", 0)
    with pytest.raises(InvalidParams):
        enumerate_table("9.9", 8)


def test_canonical_epsilon_only_bdi():
    assert resolve("BDI:p=2,q=5").canonical_epsilon == F(1, 10)
    assert resolve("AI:n=4").canonical_epsilon is None
    assert resolve("GROUP:g2").canonical_epsilon is None


def test_entry_json():
    d = to_json_dict(resolve("BDI:p=2,q=4"))
    assert d["ambient"] == "d3"
    assert d["ambient_built"] == "a3"
    assert d["restriction_factor"] == "1"
    assert d["psi_sq_killing"] == "1/4"
    assert d["canonical_epsilon"] == "1/8"
