"""Linear combinations of webs and the circle/bigon/square reduction engine."""

from __future__ import annotations

import random
from dataclasses import replace
from typing import Callable, Iterable, Iterator, Mapping

from . import web as W
from .scalar import ONE, ONE_POLY, ZERO, ZERO_POLY, LaurentPoly, RingScalar, format_scalar, parse_scalar, qint
from .web import CompositionError, WebDiagram


class TermLimitExceeded(RuntimeError):
    """Raised when a morphism grows past the configured term budget."""


_term_limit: int | None = None


def set_term_limit(limit: int | None) -> None:
    """Abort computations whose results exceed ``limit`` terms (None disables)."""
    global _term_limit
    _term_limit = limit


# reduction of single webs

_Q2 = qint(2)
_Q3 = qint(3)


def _rewrites(w: WebDiagram, face: tuple[int, ...]) -> list[tuple[RingScalar, WebDiagram]]:
    """Apply the bigon or square relation at a face walk."""
    verts = [e // 3 for e in face]
    ext = [W._rot(e) for e in face]
    if len(face) == 2:
        return [(_Q2, W.remove_vertices(w, verts, [(ext[0], ext[1])]))]
    if len(face) == 4:
        if len(set(verts)) != 4:
            raise AssertionError("degenerate square face")
        return [
            (ONE, W.remove_vertices(w, verts, [(ext[0], ext[1]), (ext[2], ext[3])])),
            (ONE, W.remove_vertices(w, verts, [(ext[1], ext[2]), (ext[3], ext[0])])),
        ]
    raise ValueError(f"no relation for a {len(face)}-gon")


def _small_faces(w: WebDiagram) -> list[tuple[int, ...]]:
    return [f for f in W.candidate_faces(w) if len(f) < 6]


def _pick(faces: list[tuple[int, ...]]) -> tuple[int, ...]:
    # bigons before squares, then the smallest end id
    return min(faces, key=lambda f: (len(f), f[0]))


_MEMO: dict[WebDiagram, tuple[tuple[WebDiagram, RingScalar], ...]] = {}


def clear_cache() -> None:
    _MEMO.clear()


def _reduce_canonical(c: WebDiagram) -> tuple[tuple[WebDiagram, RingScalar], ...]:
    """Normal form of a canonical web without circles, memoized."""
    hit = _MEMO.get(c)
    if hit is not None:
        return hit
    small = _small_faces(c)
    if not small:
        out: tuple[tuple[WebDiagram, RingScalar], ...] = ((c, ONE),)
    else:
        acc: dict[WebDiagram, RingScalar] = {}
        for coeff, nxt in _rewrites(c, _pick(small)):
            factor = coeff * _Q3 ** nxt.loops if nxt.loops else coeff
            cn = W.canonical(replace(nxt, loops=0))
            for b, s in _reduce_canonical(cn):
                acc[b] = acc.get(b, ZERO) + factor * s
        out = tuple((b, s) for b, s in acc.items() if s)
    _MEMO[c] = out
    return out


def reduce_web(w: WebDiagram) -> dict[WebDiagram, RingScalar]:
    """Normal form of one web as a map from canonical basis webs to Laurent scalars."""
    factor = _Q3 ** w.loops if w.loops else ONE
    c = W.canonical(replace(w, loops=0) if w.loops else w)
    return {b: factor * s for b, s in _reduce_canonical(c)}


def termination_metric(w: WebDiagram) -> tuple[int, int]:
    """(trivalent vertices, edges including circles); decreases at every rewrite."""
    return (w.nv, w.num_edges())


def reduce_random(
    w: WebDiagram,
    rng: random.Random,
    on_step: Callable[[WebDiagram, WebDiagram], None] | None = None,
) -> dict[WebDiagram, RingScalar]:
    """Reduce without memoization, choosing faces and circles in random order.

    ``on_step(before, after)`` is called for every single rewrite.
    """
    acc: dict[WebDiagram, RingScalar] = {}
    stack: list[tuple[RingScalar, WebDiagram]] = [(ONE, w)]
    while stack:
        coeff, cur = stack.pop()
        small = _small_faces(cur)
        moves = len(small) + (1 if cur.loops else 0)
        if moves == 0:
            key = W.canonical(cur)
            acc[key] = acc.get(key, ZERO) + coeff
            continue
        k = rng.randrange(moves)
        if k == len(small):
            nxt = replace(cur, loops=cur.loops - 1)
            if on_step:
                on_step(cur, nxt)
            stack.append((coeff * _Q3, nxt))
            continue
        for c2, nxt in _rewrites(cur, small[k]):
            if on_step:
                on_step(cur, nxt)
            stack.append((coeff * c2, nxt))
    return {b: s for b, s in acc.items() if s}


def random_diagram(
    rng: random.Random, layers: int = 8, max_width: int = 6, word: str | None = None
) -> WebDiagram:
    """An unreduced web stacked from randomly placed generators, starting
    from ``word`` (random when omitted)."""
    if word is None:
        word = "".join(rng.choice("+-") for _ in range(rng.randint(0, 3)))
    w = W.identity(word)
    for _ in range(layers):
        options = []
        for name in W.GENERATOR_NAMES:
            g = W.generator(name)
            if len(word) - len(g.dom) + len(g.cod) > max_width:
                continue
            for a in range(len(word) - len(g.dom) + 1):
                if word[a : a + len(g.dom)] == g.dom:
                    options.append((g, a))
        if not options:
            break
        g, a = rng.choice(options)
        left, right = word[:a], word[a + len(g.dom) :]
        layer = W.glue_tensor(W.glue_tensor(W.identity(left), g), W.identity(right))
        w = W.glue_compose(w, layer)
        word = layer.cod
    return w


# morphisms

class _Acc:
    """Sum of scalars grouped by denominator to postpone gcd work."""

    __slots__ = ("groups",)

    def __init__(self) -> None:
        self.groups: dict[WebDiagram, dict[LaurentPoly, LaurentPoly]] = {}

    def add(self, w: WebDiagram, num: LaurentPoly, den: LaurentPoly) -> None:
        g = self.groups.get(w)
        if g is None:
            self.groups[w] = {den: num}
        else:
            g[den] = g[den] + num if den in g else num

    def result(self) -> dict[WebDiagram, RingScalar]:
        out = {}
        for w, g in self.groups.items():
            s = ZERO
            for den, num in g.items():
                if num.coeffs:
                    s = s + (RingScalar._raw(num, den) if den.is_one() else RingScalar(num, den))
            if s:
                out[w] = s
        return out


class Morphism:
    """A linear combination of basis webs with fixed boundary."""

    __slots__ = ("dom", "cod", "terms", "_hash")

    def __init__(self, dom: str, cod: str, terms: Mapping[WebDiagram, RingScalar] | None = None):
        self.dom = W.normalize_signs(dom)
        self.cod = W.normalize_signs(cod)
        self.terms: dict[WebDiagram, RingScalar] = {w: s for w, s in (terms or {}).items() if s}
        self._hash = None
        if _term_limit is not None and len(self.terms) > _term_limit:
            raise TermLimitExceeded(f"morphism with {len(self.terms)} terms exceeds limit {_term_limit}")

    # constructors

    @classmethod
    def zero(cls, dom: str, cod: str) -> Morphism:
        return cls(dom, cod)

    @classmethod
    def identity(cls, eps: str) -> Morphism:
        return cls.from_web(W.identity(eps))

    @classmethod
    def from_web(cls, w: WebDiagram, coeff: RingScalar | int = ONE) -> Morphism:
        """Reduce a single web to normal form."""
        return reduce(w, coeff)

    @classmethod
    def generator(cls, name: str) -> Morphism:
        return cls.from_web(W.generator(name))

    # algebra

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[tuple[WebDiagram, RingScalar]]:
        return iter(self.terms.items())

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dom, self.cod, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Morphism({self.dom!r}->{self.cod!r}, {len(self.terms)} terms)"

    def _check_shape(self, other: Morphism) -> None:
        if self.dom != other.dom or self.cod != other.cod:
            raise CompositionError(
                f"shape mismatch: {self.dom}->{self.cod} versus {other.dom}->{other.cod}"
            )

    def __add__(self, other: Morphism) -> Morphism:
        self._check_shape(other)
        terms = dict(self.terms)
        for w, s in other.terms.items():
            terms[w] = terms.get(w, ZERO) + s
        return Morphism(self.dom, self.cod, terms)

    def __neg__(self) -> Morphism:
        return Morphism(self.dom, self.cod, {w: -s for w, s in self.terms.items()})

    def __sub__(self, other: Morphism) -> Morphism:
        return self + (-other)

    def scale(self, s: RingScalar | int) -> Morphism:
        if not isinstance(s, RingScalar):
            s = RingScalar(s)
        if not s:
            return Morphism(self.dom, self.cod)
        return Morphism(self.dom, self.cod, {w: s * c for w, c in self.terms.items()})

    def __rmul__(self, s: RingScalar | int) -> Morphism:
        return self.scale(s)

    def then(self, other: Morphism) -> Morphism:
        return compose(self, other)

    def __rshift__(self, other: Morphism) -> Morphism:
        return compose(self, other)

    def __matmul__(self, other: Morphism) -> Morphism:
        return tensor(self, other)

    def star(self) -> Morphism:
        return star_morphism(self)

    def coefficient(self, w: WebDiagram) -> RingScalar:
        return coefficient_of(self, w)

    def sorted_terms(self) -> list[tuple[WebDiagram, RingScalar]]:
        return sorted(self.terms.items(), key=lambda t: W.canonical_key(t[0]))

    def to_json_obj(self) -> dict:
        return {
            "dom": self.dom,
            "cod": self.cod,
            "terms": [{"coeff": format_scalar(s), "web": W.to_json_obj(w)} for w, s in self.sorted_terms()],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> Morphism:
        out = cls(obj["dom"], obj["cod"])
        for t in obj["terms"]:
            w = W.from_json_obj(t["web"])
            if w.dom != out.dom or w.cod != out.cod:
                raise CompositionError("term boundary differs from morphism boundary")
            out = out + reduce(w, parse_scalar(t["coeff"]))
        return out


def reduce(w: WebDiagram, coeff: RingScalar | int = ONE) -> Morphism:
    """Reduce a web with the circle, bigon and square relations."""
    if not isinstance(coeff, RingScalar):
        coeff = RingScalar(coeff)
    if not coeff:
        return Morphism(w.dom, w.cod)
    return Morphism(w.dom, w.cod, {b: coeff * s for b, s in reduce_web(w).items()})


def sum_add(a: Morphism, b: Morphism) -> Morphism:
    return a + b


def sum_scale(s: RingScalar | int, a: Morphism) -> Morphism:
    return a.scale(s)


def linear_combination(dom: str, cod: str, parts: Iterable[tuple[RingScalar | int, Morphism]]) -> Morphism:
    out = Morphism(dom, cod)
    for s, m in parts:
        out = out + m.scale(s)
    return out


def compose(a: Morphism, b: Morphism) -> Morphism:
    """``a`` then ``b``: stack ``b`` on top of ``a`` and reduce."""
    if a.cod != b.dom:
        raise CompositionError(f"cannot compose {a.dom}->{a.cod} with {b.dom}->{b.cod}")
    acc = _Acc()
    cache: dict[WebDiagram, dict[WebDiagram, RingScalar]] = {}
    for wa, sa in a.terms.items():
        for wb, sb in b.terms.items():
            glued = W.glue_compose(wa, wb)
            red = cache.get(glued)
            if red is None:
                red = reduce_web(glued)
                cache[glued] = red
            if not red:
                continue
            num = sa.num * sb.num
            den = sa.den * sb.den
            for w, r in red.items():
                acc.add(w, num * r.num, den)
    return Morphism(a.dom, b.cod, acc.result())


def compose_all(*ms: Morphism) -> Morphism:
    out = ms[0]
    for m in ms[1:]:
        out = compose(out, m)
    return out


def tensor(a: Morphism, b: Morphism) -> Morphism:
    terms = {}
    for wa, sa in a.terms.items():
        for wb, sb in b.terms.items():
            terms[W.canonical(W.glue_tensor(wa, wb))] = sa * sb
    return Morphism(a.dom + b.dom, a.cod + b.cod, terms)


def tensor_all(*ms: Morphism) -> Morphism:
    out = ms[0]
    for m in ms[1:]:
        out = tensor(out, m)
    return out


def star_morphism(a: Morphism) -> Morphism:
    return Morphism(a.cod, a.dom, {W.canonical(W.star_diagram(w)): s.star() for w, s in a.terms.items()})


def closure_trace(a: Morphism) -> RingScalar:
    """Close every strand around the right side and evaluate."""
    if a.dom != a.cod:
        raise CompositionError("closure needs an endomorphism")
    out = ZERO
    for w, s in a.terms.items():
        for b, r in reduce_web(W.close_up(w)).items():
            out = out + s * r
    return out


def coefficient_of(a: Morphism, w: WebDiagram) -> RingScalar:
    if w.dom != a.dom or w.cod != a.cod:
        raise CompositionError("web boundary differs from morphism boundary")
    return a.terms.get(W.canonical(w), ZERO)


def identity(eps: str) -> Morphism:
    return Morphism.identity(eps)


def gen(name: str) -> Morphism:
    return Morphism.generator(name)
