from __future__ import annotations

from dataclasses import replace
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from a2spider import grothendieck as G
from a2spider.clasp import block
from a2spider.rewrite import Morphism, gen


def test_small_polynomials():
    assert str(G.cheb(0, 0)) == "1"
    assert str(G.cheb(1, 0)) == "x"
    assert str(G.cheb(1, 1)) == "x*y - 1"
    assert str(G.cheb(2, 0)) == "x^2 - y"
    assert str(G.cheb(0, 2)) == "y^2 - x"
    assert G.cheb(-1, 2) == G.BivarPoly()


def test_polynomial_arithmetic():
    x, y = G.BivarPoly.x(), G.BivarPoly.y()
    p = x * y - G.BivarPoly.const(1)
    assert p.evaluate(3, 3) == 8
    assert p.swap() == p
    assert str(G.BivarPoly.const(-2) * x * x) == "-2*x^2"
    assert G.BivarPoly().to_json_obj() == []
    assert p.to_json_obj() == [[0, 0, -1], [1, 1, 1]]


def test_dimensions():
    assert G.dim_q1(0, 0) == 1
    assert G.dim_q1(1, 1) == 8
    assert G.dim_q1(2, 0) == 6


def test_classes_match_polynomials():
    assert G.grothendieck_class(1, 1) == G.cheb(1, 1)
    assert G.grothendieck_class(2, 1) == G.cheb(2, 1)
    assert G.grothendieck_class(0, 3) == G.cheb(3, 0).swap()
    assert G.cheb_dim_check(8).passed


@given(st.integers(0, 8), st.integers(0, 8))
def test_symmetry_and_agreement(k, l):
    assert G.cheb(l, k) == G.cheb(k, l).swap()
    assert G.grothendieck_class(k, l) == G.cheb(k, l)
    assert G.cheb(k, l).evaluate(3, 3) == (k + 1) * (l + 1) * (k + l + 2) // 2


def test_witness_ck1():
    assert G.verify_split_sum(G.witness_ck1()).passed


@pytest.mark.parametrize("k", [1, 2])
def test_witness_ck2(k):
    assert G.verify_split_sum(G.witness_ck2(k)).passed


def test_witness_ck3_smallest():
    assert G.verify_split_sum(G.witness_ck3(1, 1)).passed


def test_witness_ranges():
    with pytest.raises(ValueError):
        G.witness_ck2(0)
    with pytest.raises(ValueError):
        G.witness_ck3(1, 0)


def test_zero_witness_passes():
    p = block(1, 1)
    z = Morphism("+-", "")
    w = G.DecompositionWitness(p, p, z, p, Morphism("", "+-"), p, Morphism("", ""), name="zero")
    assert G.verify_split_sum(w).passed


def test_corrupted_witness_fails_at_second_summand():
    # drop the 1/[3] normalisation of the cap
    bad = replace(G.witness_ck1(), p2=gen("d[+-]"))
    rep = G.verify_split_sum(bad)
    failed = {c.name for c in rep.failures()}
    assert "p2 after i2 is target2" in failed
    residual = next(c for c in rep.failures() if c.name == "p2 after i2 is target2").residual
    assert not residual.is_zero()


@pytest.mark.parametrize("k", [1, 2])
def test_single_split_identity(k):
    q = G.q_identity_report("single-split", k)
    assert q.holds
    assert q.to_json_obj()["holds"]


def test_double_split_identity():
    assert G.q_identity_report("double-split", 1, 1).holds
    with pytest.raises(ValueError):
        G.q_identity_report("triple-split", 1)


def test_standardization_and_commutativity():
    for eps in ("+-", "-+", "-++", "+-+"):
        assert G.verify_standardization(eps).passed
    assert G.verify_commutativity("+", "-").passed
    assert G.verify_commutativity("", "+-").passed
    assert G.verify_commutativity("-", "++").passed


def _words(lo: int, hi: int) -> list[str]:
    return ["".join(p) for n in range(lo, hi + 1) for p in product("+-", repeat=n)]


@pytest.mark.parametrize("eps", _words(1, 4))
def test_standardization_all_words(eps):
    assert G.verify_standardization(eps).passed


def test_commutativity_all_small_pairs():
    words = _words(0, 3)
    for e in words:
        for d in words:
            if 0 < len(e) + len(d) <= 3:
                assert G.verify_commutativity(e, d).passed, (e, d)
