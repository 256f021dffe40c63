from fractions import Fraction as F

import pytest

from symspace.linalg import DimensionMismatch
from symspace.roots import (InvalidRank, NonTerminating, RootKind, build,
                            cartan_matrix, generate_roots, highest_root,
                            inner, parse_kind, root_count, to_json_dict)

ALL_KINDS = (
    [RootKind("a", l) for l in range(1, 13)]
    + [RootKind("b", l) for l in range(2, 13)]
    + [RootKind("c", l) for l in range(3, 13)]
    + [RootKind("d", l) for l in range(4, 13)]
    + [RootKind("bc", l) for l in range(1, 13)]
    + [RootKind("e", 6), RootKind("e", 7), RootKind("e", 8),
       RootKind("f", 4), RootKind("g", 2)]
)


def test_parse_kind():
    assert parse_kind("a3") == RootKind("a", 3)
    assert parse_kind("BC2") == RootKind("bc", 2)
    assert parse_kind(" E8 ") == RootKind("e", 8)
    for bad in ("a0", "b1", "c2", "d3", "e5", "f3", "g4", "h2", "a", "3"):
        with pytest.raises(InvalidRank):
            parse_kind(bad)


def test_a1_smallest():
    rs = build("a1")
    assert rs.roots == frozenset({(1,), (-1,)})
    assert rs.highest_root == (1,)
    assert rs.gram.entries == ((F(1),),)


def test_g2_data():
    rs = build("g2")
    assert len(rs.roots) == 12
    assert rs.highest_root == (2, 3)
    assert rs.gram.to_json() == [["1", "-1/2"], ["-1/2", "1/3"]]
    # (a1, a2) is -1/2 once (psi, psi) = 1
    assert inner(rs, (1, 0), (0, 1)) == F(-1, 2)
    assert inner(rs, (0, 0), (1, 1)) == 0
    assert inner(rs, rs.highest_root, rs.highest_root) == 1


def test_bc1():
    rs = build("bc1")
    assert rs.roots == frozenset({(1,), (-1,), (2,), (-2,)})
    assert rs.indivisible_roots == frozenset({(1,), (-1,)})
    assert rs.highest_root == (2,)


def test_generate_roots_examples():
    assert len(generate_roots(((2, -1), (-1, 2)))) == 6        # a2
    assert generate_roots(((2,),)) == frozenset({(1,), (-1,)})  # a1
    assert len(generate_roots(cartan_matrix(RootKind("f", 4)))) == 48


def test_generate_roots_guard():
    with pytest.raises(NonTerminating):
        generate_roots(cartan_matrix(RootKind("a", 25)))


@pytest.mark.parametrize("kind", ALL_KINDS, ids=str)
def test_counts_and_normalization(kind):
    rs = build(kind)
    assert len(rs.roots) == root_count(kind)
    psi = rs.highest_root
    assert inner(rs, psi, psi) == 1
    assert highest_root(rs) == psi
    # highest root weakly dominates every root coefficientwise
    assert all(all(p >= c for p, c in zip(psi, r)) for r in rs.roots)
    # closed under negation
    assert all(tuple(-c for c in r) in rs.roots for r in rs.roots)


@pytest.mark.parametrize("kind", ALL_KINDS, ids=str)
def test_closure_under_simple_reflections(kind):
    rs = build(kind)
    cartan = rs.cartan
    l = rs.rank
    for r in rs.roots:
        for j in range(l):
            c = sum(r[i] * cartan[i][j] for i in range(l))
            img = list(r)
            img[j] -= c
            assert tuple(img) in rs.roots


@pytest.mark.parametrize("kind", ALL_KINDS, ids=str)
def test_cartan_recovered_from_gram(kind):
    rs = build(kind)
    l = rs.rank
    for i in range(l):
        for j in range(l):
            cij = 2 * rs.gram[i, j] / rs.gram[j, j]
            assert cij == rs.cartan[i][j]


@pytest.mark.parametrize("kind", ALL_KINDS, ids=str)
def test_proportional_roots(kind):
    rs = build(kind)
    for r in rs.roots:
        doubles = tuple(2 * c for c in r)
        halves = tuple(F(c, 2) for c in r)
        if kind.is_reduced:
            assert doubles not in rs.roots
        else:
            # exactly the short indivisible roots double
            is_short = (r in rs.indivisible_roots
                        and rs.root_norm_sq(r) == min(rs.root_norm_sq(s)
                                                      for s in rs.indivisible_roots))
            assert (doubles in rs.roots) == is_short
            assert (r in rs.indivisible_roots) == (halves not in rs.roots)


def test_highest_root_lists():
    assert build("b3").highest_root == (1, 2, 2)
    assert build("e8").highest_root == (2, 3, 4, 5, 6, 4, 2, 3)
    assert build("c5").highest_root == (2, 2, 2, 2, 1)
    assert build("d6").highest_root == (1, 2, 2, 2, 1, 1)
    assert build("e6").highest_root == (1, 2, 3, 2, 1, 2)
    assert build("e7").highest_root == (1, 2, 3, 4, 3, 2, 2)
    assert build("f4").highest_root == (2, 3, 4, 2)


def test_inner_dimension_error():
    rs = build("a2")
    with pytest.raises(DimensionMismatch):
        inner(rs, (1, 0, 0), (0, 1))


def test_json_dict():
    d = to_json_dict(build("g2"))
    assert d["kind"] == "g2"
    assert d["root_count"] == 12
    assert d["highest_root"] == [2, 3]
    assert d["gram"][0] == ["1", "-1/2"]
    assert d["psi_sq"] == "1"


def test_f4_relative_lengths():
    rs = build("f4")
    # (psi,psi) = (a1,a1) = (a2,a2) = 2(a3,a3) = 2(a4,a4)
    assert rs.gram[0, 0] == rs.gram[1, 1] == 1
    assert rs.gram[2, 2] == rs.gram[3, 3] == F(1, 2)


def test_b_c_lengths():
    b4 = build("b4")
    assert {b4.gram[i, i] for i in range(3)} == {F(1)}
    assert b4.gram[3, 3] == F(1, 2)
    c4 = build("c4")
    assert {c4.gram[i, i] for i in range(3)} == {F(1, 2)}
    assert c4.gram[3, 3] == F(1)
