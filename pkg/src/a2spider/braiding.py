"""Crossings expanded into webs, cabled braidings, and Reidemeister checks.

``crossing(s, t)`` maps s t to t s with the s strand passing over, from
bottom left to top right.  Negative crossings are the star images of the
positive ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import web as W
from .clasp import Report, clasp_endo, i_web, pad
from .rewrite import Morphism, compose, compose_all, gen, identity, star_morphism
from .scalar import RingScalar

_V = RingScalar.v


@dataclass(frozen=True)
class CrossingDesc:
    over: str
    under: str
    positive: bool = True


def crossing(s: str, t: str, positive: bool = True) -> Morphism:
    """The elementary crossing of an s strand over a t strand (or its inverse)."""
    s, t = W.normalize_signs(s), W.normalize_signs(t)
    if len(s) != 1 or len(t) != 1:
        raise ValueError("crossing takes single signs")
    if not positive:
        # the inverse of c_{t,s} lives in Hom(st, ts)
        return star_morphism(crossing(t, s, True))
    if s == t:
        return identity(s + s).scale(_V(2)) - i_web(s).scale(_V(-1))
    turn = compose(gen(f"d[{s}{t}]"), gen(f"b[{t}{s}]"))
    return turn.scale(_V(-2)) - gen(f"H[{s}{t};{t}{s}]").scale(_V(1))


def crossing_from_desc(desc: CrossingDesc) -> Morphism:
    return crossing(desc.over, desc.under, desc.positive)


def braid(delta: str, eps: str, positive: bool = True) -> Morphism:
    """The cabled crossing from delta eps to eps delta with delta passing over.

    The last strand of delta crosses all of eps first, then the one before it.
    """
    delta, eps = W.normalize_signs(delta), W.normalize_signs(eps)
    word = delta + eps
    out = identity(word)
    n = len(delta)
    for i in reversed(range(n)):
        for j in range(len(eps)):
            pos = i + j
            a, b = word[pos], word[pos + 1]
            out = compose(out, pad(crossing(a, b, positive), word[:pos], word[pos + 2 :]))
            word = word[:pos] + b + a + word[pos + 2 :]
    return out


def braid_alt(delta: str, eps: str, positive: bool = True) -> Morphism:
    """Same cable built in the other planar order: the first strand of eps
    passes under all of delta first."""
    delta, eps = W.normalize_signs(delta), W.normalize_signs(eps)
    word = delta + eps
    out = identity(word)
    n = len(delta)
    for j in range(len(eps)):
        for i in reversed(range(n)):
            pos = j + i
            a, b = word[pos], word[pos + 1]
            out = compose(out, pad(crossing(a, b, positive), word[:pos], word[pos + 2 :]))
            word = word[:pos] + b + a + word[pos + 2 :]
    return out


def kink(sign: str, positive: bool = True) -> Morphism:
    """A strand with one curl made from a crossing and a cup/cap pair on the right."""
    bar = W.dual(sign)
    pair = sign + bar
    return compose_all(
        pad(gen(f"b[{pair}]"), sign),
        pad(crossing(sign, sign, positive), "", bar),
        pad(gen(f"d[{pair}]"), sign),
    )


def kink_scalar(sign: str, positive: bool = True) -> RingScalar:
    """The scalar by which a single curl acts on a strand."""
    m = kink(sign, positive)
    ident = W.identity(sign)
    if set(m.terms) - {W.canonical(ident)}:
        raise AssertionError("kink did not reduce to a multiple of the identity")
    return m.coefficient(ident)


MOVES = ("R1framed", "R2", "R3", "R4a", "R4b")
VERTEX_GENERATORS = ("t[-;++]", "t[+;--]", "t[++;-]", "t[--;+]")


def verify_reidemeister(move: str, signs: str) -> Report:
    """Check a Reidemeister-type move with the given strand signs."""
    signs = W.normalize_signs(signs)
    rep = Report(f"{move}[{signs}]")
    if move == "R1framed":
        (s,) = signs
        rep.add("positive then negative curl", compose(kink(s, True), kink(s, False)), identity(s))
        rep.add("negative then positive curl", compose(kink(s, False), kink(s, True)), identity(s))
    elif move == "R2":
        s, t = signs
        for pos in (True, False):
            c = crossing(s, t, pos)
            back = crossing(t, s, not pos)
            rep.add(f"c{'+' if pos else '-'} then inverse", compose(c, back), identity(s + t))
    elif move == "R3":
        r, s, t = signs
        for pos in (True, False):
            lhs = compose_all(
                pad(crossing(r, s, pos), "", t),
                pad(crossing(r, t, pos), s),
                pad(crossing(s, t, pos), "", r),
            )
            rhs = compose_all(
                pad(crossing(s, t, pos), r),
                pad(crossing(r, t, pos), "", s),
                pad(crossing(r, s, pos), t),
            )
            rep.add(f"braid relation {'positive' if pos else 'negative'}", lhs, rhs)
    elif move in ("R4a", "R4b"):
        (s,) = signs
        pos = move == "R4a"
        for name in VERTEX_GENERATORS:
            f = gen(name)
            a, b = f.dom, f.cod
            # strand s to the left crossing over (or under) the vertex
            lhs = compose(pad(f, s), braid(s, b, pos))
            rhs = compose(braid(s, a, pos), pad(f, "", s))
            rep.add(f"{s} across {name} from the left", lhs, rhs)
            lhs = compose(pad(f, "", s), braid(b, s, pos))
            rhs = compose(braid(a, s, pos), pad(f, s))
            rep.add(f"{s} across {name} from the right", lhs, rhs)
    else:
        raise ValueError(f"unknown move {move!r}")
    return rep


def move_arity(move: str) -> int:
    return {"R1framed": 1, "R2": 2, "R3": 3, "R4a": 1, "R4b": 1}[move]


def all_reidemeister() -> list[Report]:
    reports = []
    for move in MOVES:
        for signs in product("+-", repeat=move_arity(move)):
            reports.append(verify_reidemeister(move, "".join(signs)))
    return reports


def verify_clasp_slide(delta: str, eps: str) -> Report:
    """Clasps on eps slide through crossings with delta, over and under."""
    delta, eps = W.normalize_signs(delta), W.normalize_signs(eps)
    p = clasp_endo(eps)
    rep = Report(f"slide P[{eps}] past {delta or 'nothing'}")
    for pos in (True, False):
        tag = "positive" if pos else "negative"
        c = braid(delta, eps, pos)
        rep.add(f"{tag}: clasp under/over from the right", compose(pad(p, delta), c), compose(c, pad(p, "", delta)))
        c = braid(eps, delta, pos)
        rep.add(f"{tag}: clasp from the left", compose(pad(p, "", delta), c), compose(c, pad(p, delta)))
    return rep


def verify_naturality(delta: str, f: Morphism) -> Report:
    """braid(delta, eps) commutes with f on either side."""
    rep = Report(f"naturality of {delta} past {f.dom}->{f.cod}")
    for pos in (True, False):
        lhs = compose(pad(f, delta), braid(delta, f.cod, pos))
        rhs = compose(braid(delta, f.dom, pos), pad(f, "", delta))
        rep.add(f"{'positive' if pos else 'negative'} over f", lhs, rhs)
        lhs = compose(pad(f, "", delta), braid(f.cod, delta, pos))
        rhs = compose(braid(f.dom, delta, pos), pad(f, delta))
        rep.add(f"{'positive' if pos else 'negative'} f over", lhs, rhs)
    return rep
