from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2spider import web as W
from a2spider.clasp import CACHE, block, clasp_single
from a2spider.rewrite import (
    Morphism,
    TermLimitExceeded,
    closure_trace,
    coefficient_of,
    compose,
    gen,
    identity,
    random_diagram,
    reduce,
    reduce_random,
    reduce_web,
    set_term_limit,
    star_morphism,
    sum_add,
    sum_scale,
    tensor,
    termination_metric,
)
from a2spider.scalar import ONE, ZERO, RingScalar, qint

EMPTY = W.identity("")


def test_circle():
    c = W.glue_compose(W.generator("b[+-]"), W.generator("d[+-]"))
    assert reduce(c) == identity("").scale(qint(3))
    assert compose(gen("b[+-]"), gen("d[+-]")).coefficient(EMPTY) == qint(3)


def test_bigon():
    b = W.glue_compose(W.generator("t[-;++]"), W.generator("t[++;-]"))
    assert reduce(b) == identity("-").scale(qint(2))


def test_square():
    sq = W.glue_compose(W.generator("H[+-;-+]"), W.generator("H[-+;+-]"))
    m = reduce(sq)
    assert len(m) == 2
    assert m.coefficient(W.identity("+-")) == ONE
    assert m == identity("+-") + compose(gen("d[+-]"), gen("b[+-]"))


def test_reduce_zero_coefficient():
    assert reduce(W.identity("+"), 0).is_zero()


def test_linear_operations():
    a = gen("H[+-;-+]")
    assert sum_add(a, sum_scale(-1, a)).is_zero()
    assert sum_scale(qint(3), identity("")).coefficient(EMPTY) == qint(3)
    with pytest.raises(W.CompositionError):
        sum_add(a, identity("+-"))


def test_compose_and_tensor_units():
    a = gen("t[-;++]")
    assert compose(identity("-"), a) == a
    assert compose(a, identity("++")) == a
    assert tensor(a, identity("")) == a
    assert tensor(identity(""), a) == a
    with pytest.raises(W.CompositionError):
        compose(a, identity("+-"))


def test_cup_killed_by_clasp():
    assert compose(gen("b[+-]"), block(1, 1)).is_zero()


def test_star_examples():
    assert star_morphism(clasp_single("+", 3)) == clasp_single("+", 3)
    assert star_morphism(gen("b[+-]")) == gen("d[+-]")


def test_closure_trace_examples():
    assert closure_trace(identity("+")) == qint(3)
    assert closure_trace(identity("+-")) == qint(3) * qint(3)
    assert closure_trace(block(1, 1)) == qint(2) * qint(4)


def test_coefficient_of():
    assert coefficient_of(block(1, 1), W.identity("+-")) == ONE
    assert coefficient_of(Morphism("+-", "+-"), W.identity("+-")) == ZERO
    with pytest.raises(W.CompositionError):
        coefficient_of(block(1, 1), W.identity("+"))


def test_term_limit_guard():
    CACHE.clear()
    set_term_limit(1)
    try:
        with pytest.raises(TermLimitExceeded):
            block(1, 2)
    finally:
        set_term_limit(None)


def test_json_round_trip():
    m = block(1, 1)
    assert Morphism.from_json_obj(m.to_json_obj()) == m


def test_confluence_fuzz():
    """Random diagrams reduce to the same normal form in every order."""
    rng = random.Random(2024)
    steps = 0
    for _ in range(100):
        d = random_diagram(rng, layers=rng.randint(4, 12))
        ref = reduce_web(d)

        def check(before, after):
            nonlocal steps
            steps += 1
            assert termination_metric(after) < termination_metric(before)

        for _ in range(5):
            assert reduce_random(d, random.Random(rng.random()), check) == ref
    assert steps > 100


# property tests

seeds = st.integers(0, 10**6)


def _morphism(seed: int) -> Morphism:
    rng = random.Random(seed)
    d = random_diagram(rng, layers=rng.randint(0, 8))
    return reduce(d, RingScalar.v(rng.randint(-3, 3)))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_results_are_basis_webs(seed):
    m = _morphism(seed)
    for w, s in m.terms.items():
        assert W.is_basis_web(w)
        assert s
        assert (w.dom, w.cod) == (m.dom, m.cod)


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_star_is_contravariant_involution(seed):
    rng = random.Random(seed)
    a = random_diagram(rng, layers=rng.randint(0, 5))
    b = random_diagram(rng, layers=rng.randint(0, 5), word=a.cod)
    ma, mb = reduce(a, RingScalar.v(1)), reduce(b)
    assert star_morphism(star_morphism(ma)) == ma
    assert star_morphism(compose(ma, mb)) == compose(star_morphism(mb), star_morphism(ma))


@settings(max_examples=50, deadline=None)
@given(seeds)
def test_compose_agrees_with_gluing(seed):
    rng = random.Random(seed)
    a = random_diagram(rng, layers=rng.randint(0, 5))
    b = random_diagram(rng, layers=rng.randint(0, 5), word=a.cod)
    assert compose(reduce(a), reduce(b)) == reduce(W.glue_compose(a, b))


@settings(max_examples=50, deadline=None)
@given(seeds, seeds)
def test_tensor_agrees_with_gluing(s1, s2):
    a = random_diagram(random.Random(s1), layers=4)
    b = random_diagram(random.Random(s2), layers=4)
    assert tensor(reduce(a), reduce(b)) == reduce(W.glue_tensor(a, b))
