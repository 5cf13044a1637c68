from __future__ import annotations

import pytest

from a2spider import braiding as B
from a2spider.clasp import block
from a2spider.rewrite import compose, gen, identity, star_morphism
from a2spider.scalar import RingScalar

V = RingScalar.v


@pytest.mark.parametrize("s", ["+", "-"])
@pytest.mark.parametrize("t", ["+", "-"])
def test_crossings_are_inverse(s, t):
    assert compose(B.crossing(s, t, True), B.crossing(t, s, False)) == identity(s + t)
    assert compose(B.crossing(s, t, False), B.crossing(t, s, True)) == identity(s + t)


def test_negative_crossing_is_star_image():
    assert B.crossing("+", "-", False) == star_morphism(B.crossing("-", "+", True))


def test_crossing_desc():
    assert B.crossing_from_desc(B.CrossingDesc("+", "+")) == B.crossing("+", "+")


def test_crossing_rejects_words():
    with pytest.raises(ValueError):
        B.crossing("++", "+")


def test_kink_scalars():
    assert B.kink_scalar("+") == V(8)
    assert B.kink_scalar("-") == V(8)
    assert B.kink_scalar("+", False) == V(-8)


@pytest.mark.parametrize("move", B.MOVES)
def test_reidemeister_moves(move):
    for signs in ("+", "-", "+-", "-+", "++", "--", "+-+", "---", "-++"):
        if len(signs) == B.move_arity(move):
            rep = B.verify_reidemeister(move, signs)
            assert rep.passed, rep.summary()


def test_unknown_move():
    with pytest.raises(ValueError):
        B.verify_reidemeister("R5", "+")


@pytest.mark.parametrize("delta,eps", [("+", "+-"), ("-", "++"), ("", "+"), ("+", "-+")])
def test_clasp_slides(delta, eps):
    rep = B.verify_clasp_slide(delta, eps)
    assert rep.passed, rep.summary()


def test_cable_orders_agree():
    for d, e in (("+-", "+"), ("+", "-+"), ("++", "-")):
        assert B.braid(d, e) == B.braid_alt(d, e)
        assert B.braid(d, e, False) == B.braid_alt(d, e, False)


def test_naturality():
    assert B.verify_naturality("+", gen("H[+-;-+]")).passed
    assert B.verify_naturality("-", block(1, 1)).passed
