from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2spider import web as W
from a2spider.clasp import clasp_endo
from a2spider.rewrite import random_diagram


def key(w: W.WebDiagram) -> bytes:
    return W.canonical_key(w)


def circle() -> W.WebDiagram:
    return W.glue_compose(W.generator("b[+-]"), W.generator("d[+-]"))


def bigon() -> W.WebDiagram:
    return W.glue_compose(W.generator("t[-;++]"), W.generator("t[++;-]"))


def square() -> W.WebDiagram:
    return W.glue_compose(W.generator("H[+-;-+]"), W.generator("H[-+;+-]"))


def basis_webs_mixed() -> list[W.WebDiagram]:
    """The six basis webs with boundary -+- on both sides."""
    return [w for w, _ in clasp_endo("-+-").sorted_terms()]


def permuted(w: W.WebDiagram, rng: random.Random) -> W.WebDiagram:
    """The same web with its trivalent vertices renumbered and rotated."""
    perm = list(range(w.nv))
    rng.shuffle(perm)
    turn = [rng.randrange(3) for _ in range(w.nv)]

    def m(e: int) -> int:
        if e >= w.base:
            return e
        v, s = divmod(e, 3)
        return 3 * perm[v] + (s + turn[v]) % 3

    partner = [0] * len(w.partner)
    for e, p in enumerate(w.partner):
        partner[m(e)] = m(p)
    src = [False] * w.nv
    for v in range(w.nv):
        src[perm[v]] = w.src[v]
    return W.WebDiagram(w.dom, w.cod, tuple(src), tuple(partner), w.loops)


def test_identity_shapes():
    assert W.identity("") == W.EMPTY
    w = W.identity("+-")
    assert (w.dom, w.cod, w.nv) == ("+-", "+-", 0)
    assert W.glue_tensor(W.identity("+"), W.identity("-")) == w


@pytest.mark.parametrize("name", W.GENERATOR_NAMES)
def test_generators_are_valid(name):
    g = W.generator(name)
    W.validate(g)
    assert W.is_basis_web(g)


def test_generator_boundaries():
    assert (W.generator("t[-;++]").dom, W.generator("t[-;++]").cod) == ("-", "++")
    assert (W.generator("d[+-]").dom, W.generator("d[+-]").cod) == ("+-", "")
    assert (W.generator("b[+-]").dom, W.generator("b[+-]").cod) == ("", "+-")
    assert (W.generator("H[+-;-+]").dom, W.generator("H[+-;-+]").cod) == ("+-", "-+")


def test_unknown_generator():
    with pytest.raises(W.WebError):
        W.generator("t[+;++]")


def test_compose_mismatch_names_position():
    with pytest.raises(W.CompositionError, match="position 1"):
        W.glue_compose(W.identity("++"), W.identity("+-"))


def test_circle_bigon_faces():
    assert W.internal_faces(W.identity("+-")) == []
    assert W.internal_faces(circle()) == [0]
    assert W.internal_faces(bigon()) == [2]
    assert W.internal_faces(square()) == [4]
    assert not W.is_basis_web(square())
    assert not W.is_basis_web(circle())


def test_i_web_is_not_a_bigon():
    # a merge followed by a split is the I-shaped basis web
    i = W.glue_compose(W.generator("t[++;-]"), W.generator("t[-;++]"))
    assert W.internal_faces(i) == []
    assert W.is_basis_web(i)


def test_tensor_with_generator_matches_direct_construction():
    h = W.glue_tensor(W.generator("H[+-;-+]"), W.identity("+"))
    direct = W.from_labels(
        "+-+", "-++", [(False, "arc"), (True, "drb")], "abe", "cde"
    )
    assert key(h) == key(direct)


def test_star_examples():
    assert W.star_diagram(W.identity("+")) == W.identity("+")
    # reflecting and reversing arrows keeps every boundary sign
    assert key(W.star_diagram(W.generator("b[+-]"))) == key(W.generator("d[+-]"))
    assert key(W.star_diagram(W.generator("t[-;++]"))) == key(W.generator("t[++;-]"))
    assert key(W.star_diagram(W.generator("H[+-;-+]"))) == key(W.generator("H[-+;+-]"))


def test_six_basis_webs_are_distinct():
    webs = basis_webs_mixed()
    assert len(webs) == 6
    assert len({key(w) for w in webs}) == 6
    assert all(W.is_basis_web(w) for w in webs)
    assert sorted(w.nv for w in webs) == [0, 0, 0, 0, 0, 6]
    hexagon = next(w for w in webs if w.nv == 6)
    assert W.internal_faces(hexagon) == [6]


def test_boundary_scan():
    assert W.boundary_reducer_scan(W.identity("+-")) == {"top": None, "bottom": None}
    db = W.glue_compose(W.generator("d[+-]"), W.generator("b[+-]"))
    assert W.boundary_reducer_scan(db) == {"top": (0, "b[+-]"), "bottom": (0, "d[+-]")}
    i = W.glue_compose(W.generator("t[++;-]"), W.generator("t[-;++]"))
    assert W.boundary_reducer_scan(i) == {"top": (0, "t[-;++]"), "bottom": (0, "t[++;-]")}


def test_boundary_scan_on_mixed_basis():
    for w in basis_webs_mixed():
        found = W.boundary_reducer_scan(w)
        if w.nv == 0 and w != W.identity("-+-"):
            assert found["top"] and found["bottom"]
    # the hexagon touches each boundary point with its own vertex, so neither
    # side carries a cup, cap or single vertex with two boundary legs
    hexagon = next(w for w in basis_webs_mixed() if w.nv == 6)
    assert W.boundary_reducer_scan(hexagon) == {"top": None, "bottom": None}


def test_validation_rejects_bad_maps():
    good = W.generator("t[-;++]")
    bad_dir = W.WebDiagram("+", good.cod, good.src, good.partner, 0)
    assert not W.is_valid(bad_dir)
    flipped = W.WebDiagram(good.dom, good.cod, good.src, good.partner[:-2] + good.partner[-1:] + good.partner[-2:-1], 0)
    assert not W.is_valid(flipped)


def test_rotation_matters_for_planarity():
    h = W.generator("H[+-;-+]")
    # swap two ends at one vertex: same graph, mirror-image rotation
    p = list(h.partner)
    a, b = 1, 2
    pa, pb = p[a], p[b]
    p[a], p[b] = pb, pa
    p[pa], p[pb] = b, a
    assert not W.is_valid(W.WebDiagram(h.dom, h.cod, h.src, tuple(p), 0))


def test_json_round_trip_byte_stable():
    w = W.canonical(square())
    text = W.to_json(w)
    assert W.to_json(W.from_json(text)) == text
    obj = json.loads(text)
    assert set(obj) >= {"domain", "codomain", "vertices", "halfedges"}


def test_json_errors():
    with pytest.raises(W.WebError):
        W.from_json_obj({"domain": "+"})


def test_canonical_key_relabel_invariance_randomized():
    rng = random.Random(11)
    for _ in range(50):
        w = random_diagram(rng, layers=rng.randint(2, 10))
        W.validate(w)
        assert key(permuted(w, rng)) == key(w)


# property tests

diagrams = st.builds(
    lambda seed, layers: random_diagram(random.Random(seed), layers=layers),
    st.integers(0, 10**6),
    st.integers(0, 10),
)


@settings(max_examples=60, deadline=None)
@given(diagrams)
def test_valid_and_euler(w):
    W.validate(w)
    assert W.is_valid(W.canonical(w))


@settings(max_examples=60, deadline=None)
@given(diagrams)
def test_star_involutive(w):
    assert W.star_diagram(W.star_diagram(w)) == w
    W.validate(W.star_diagram(w))


chains = st.builds(
    lambda seed: _chain(random.Random(seed)),
    st.integers(0, 10**6),
)


def _chain(rng: random.Random) -> tuple[W.WebDiagram, W.WebDiagram, W.WebDiagram]:
    a = random_diagram(rng, layers=rng.randint(0, 5))
    b = random_diagram(rng, layers=rng.randint(0, 5), word=a.cod)
    c = random_diagram(rng, layers=rng.randint(0, 5), word=b.cod)
    return a, b, c


@settings(max_examples=40, deadline=None)
@given(chains)
def test_star_reverses_composition(abc):
    f, g, _ = abc
    lhs = W.star_diagram(W.glue_compose(f, g))
    rhs = W.glue_compose(W.star_diagram(g), W.star_diagram(f))
    assert key(lhs) == key(rhs)


@settings(max_examples=40, deadline=None)
@given(diagrams, diagrams, diagrams)
def test_tensor_associative(a, b, c):
    lhs = W.glue_tensor(W.glue_tensor(a, b), c)
    rhs = W.glue_tensor(a, W.glue_tensor(b, c))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(chains)
def test_compose_associative(abc):
    a, b, c = abc
    lhs = W.glue_compose(W.glue_compose(a, b), c)
    rhs = W.glue_compose(a, W.glue_compose(b, c))
    assert key(lhs) == key(rhs)
    assert key(W.glue_compose(W.identity(a.dom), a)) == key(a)


@settings(max_examples=40, deadline=None)
@given(diagrams)
def test_canonical_idempotent(w):
    c = W.canonical(w)
    assert W.canonical(c) == c
