"""A2 Chebyshev polynomials and split direct sum witnesses for clasps."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from . import clasp as C
from .braiding import braid
from .clasp import Report, block, pad, transition
from .rewrite import Morphism, compose, compose_all, gen, identity, tensor
from .scalar import ONE, RingScalar, format_scalar, qint


class BivarPoly:
    """A polynomial in x, y with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c: int) -> BivarPoly:
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> BivarPoly:
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> BivarPoly:
        return cls({(0, 1): 1})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BivarPoly) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: BivarPoly) -> BivarPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return BivarPoly(out)

    def __neg__(self) -> BivarPoly:
        return BivarPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: BivarPoly) -> BivarPoly:
        return self + (-other)

    def __mul__(self, other: BivarPoly) -> BivarPoly:
        out: dict[tuple[int, int], int] = {}
        for (a, b), c in self.terms.items():
            for (d, e), f in other.terms.items():
                out[(a + d, b + e)] = out.get((a + d, b + e), 0) + c * f
        return BivarPoly(out)

    def swap(self) -> BivarPoly:
        """Exchange x and y."""
        return BivarPoly({(b, a): c for (a, b), c in self.terms.items()})

    def evaluate(self, x: int | Fraction, y: int | Fraction) -> int | Fraction:
        return sum(c * x**a * y**b for (a, b), c in self.terms.items())

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(a, b, self.terms[(a, b)]) for a, b in sorted(self.terms)]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        # highest total degree first, then by x-degree
        order = sorted(self.terms, key=lambda e: (-(e[0] + e[1]), -e[0]))
        parts = []
        for a, b in order:
            c = self.terms[(a, b)]
            mono = "*".join(
                f"{v}^{n}" if n > 1 else v for v, n in (("x", a), ("y", b)) if n > 0
            )
            mag = abs(c)
            body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    def to_json_obj(self) -> list[list[int]]:
        return [list(t) for t in self.sorted_terms()]


_X = BivarPoly.x()
_Y = BivarPoly.y()
_ZERO = BivarPoly()


@lru_cache(maxsize=None)
def cheb(k: int, l: int) -> BivarPoly:
    """The A2 Chebyshev polynomial of the second kind, by total degree."""
    if k < 0 or l < 0:
        return _ZERO
    if (k, l) == (0, 0):
        return BivarPoly.const(1)
    if (k, l) == (1, 0):
        return _X
    if (k, l) == (0, 1):
        return _Y
    if (k, l) == (1, 1):
        return _X * _Y - BivarPoly.const(1)
    if l == 0:
        return _X * cheb(k - 1, 0) - cheb(k - 2, 1)
    if k == 0:
        return _Y * cheb(0, l - 1) - cheb(1, l - 2)
    if k >= 2:
        return _X * cheb(k - 1, l) - cheb(k - 2, l + 1) - cheb(k - 1, l - 1)
    return _Y * cheb(k, l - 1) - cheb(k + 1, l - 2) - cheb(k - 1, l - 1)


@lru_cache(maxsize=None)
def grothendieck_class(k: int, l: int) -> BivarPoly:
    """The class of the clasp object (k, l) from the X-recursions alone, using
    the swap symmetry for classes with more - than + strands."""
    if k < 0 or l < 0:
        return _ZERO
    if (k, l) == (0, 0):
        return BivarPoly.const(1)
    if (k, l) == (1, 0):
        return _X
    if (k, l) == (1, 1):
        return _X * _Y - BivarPoly.const(1)
    if k == 0 or (k == 1 and l >= 2):
        return grothendieck_class(l, k).swap()
    if l == 0:
        return _X * grothendieck_class(k - 1, 0) - grothendieck_class(k - 2, 1)
    return _X * grothendieck_class(k - 1, l) - grothendieck_class(k - 2, l + 1) - grothendieck_class(k - 1, l - 1)


def dim_q1(k: int, l: int) -> int:
    """Dimension of the (k, l) irreducible representation: the clasp closure at q = 1."""
    return int(C.closure_formula(k, l).eval_at_one())


def cheb_dim_check(max_degree: int) -> Report:
    rep = Report(f"Chebyshev values at (3,3) up to degree {max_degree}")
    for n in range(max_degree + 1):
        for k in range(n + 1):
            l = n - k
            val = cheb(k, l).evaluate(3, 3)
            rep.add_flag(f"({k},{l}): {val} = {dim_q1(k, l)}", val == dim_q1(k, l) and val > 0)
    return rep


# split direct sums

@dataclass
class DecompositionWitness:
    """Maps exhibiting ``ambient`` as the direct sum of ``target1`` and ``target2``."""

    ambient: Morphism
    p1: Morphism
    p2: Morphism
    i1: Morphism
    i2: Morphism
    target1: Morphism
    target2: Morphism
    name: str = "witness"


def verify_split_sum(w: DecompositionWitness) -> Report:
    """Check the split sum conditions; composition reads left to right."""
    rep = Report(w.name)
    rep.add("sum of projections through inclusions is the ambient idempotent",
            compose(w.p1, w.i1) + compose(w.p2, w.i2), w.ambient)
    rep.add("p1 after i2 vanishes", compose(w.i2, w.p1))
    rep.add("p2 after i1 vanishes", compose(w.i1, w.p2))
    rep.add("p1 after i1 is target1", compose(w.i1, w.p1), w.target1)
    rep.add("p2 after i2 is target2", compose(w.i2, w.p2), w.target2)
    rep.add("p1 is a map of idempotents", compose_all(w.ambient, w.p1, w.target1), w.p1)
    rep.add("p2 is a map of idempotents", compose_all(w.ambient, w.p2, w.target2), w.p2)
    rep.add("i1 is a map of idempotents", compose_all(w.target1, w.i1, w.ambient), w.i1)
    rep.add("i2 is a map of idempotents", compose_all(w.target2, w.i2, w.ambient), w.i2)
    return rep


def witness_ck1() -> DecompositionWitness:
    """+- splits as the clasp (1,1) plus the trivial object."""
    p = block(1, 1)
    return DecompositionWitness(
        ambient=identity("+-"),
        p1=p,
        p2=gen("d[+-]").scale(ONE / qint(3)),
        i1=p,
        i2=gen("b[+-]"),
        target1=p,
        target2=identity(""),
        name="ck1",
    )


def witness_ck2(k: int) -> DecompositionWitness:
    """P_{+^k} tensor + splits as P_{+^(k+1)} plus P_{+^(k-1) -}."""
    if k < 1:
        raise ValueError("k >= 1 required")
    amb = pad(C.clasp_single("+", k), "", "+")
    small = block(k - 1, 1)
    rest = "+" * (k - 1)
    p2 = compose_all(amb, pad(gen("t[++;-]"), rest), small).scale(qint(k) / qint(k + 1))
    i2 = compose_all(small, pad(gen("t[-;++]"), rest), amb)
    big = C.clasp_single("+", k + 1)
    return DecompositionWitness(amb, big, p2, big, i2, big, small, name=f"ck2({k})")


def ck3_ambient(k: int, l: int) -> Morphism:
    return pad(block(k, l), "+") - block(k + 1, l)


def witness_ck3(k: int, l: int) -> DecompositionWitness:
    """The complement of P_{+^(k+1) -^l} in + tensor P_{+^k -^l} splits as
    P_{+^(k-1) -^(l+1)} plus P_{+^k -^(l-1)}."""
    if k < 1 or l < 1:
        raise ValueError("k, l >= 1 required")
    g = ck3_ambient(k, l)
    eps = "+" * k + "-" * l
    mixed1 = "-" + "+" * (k - 1) + "-" * l
    std1 = "+" * (k - 1) + "-" * (l + 1)
    mixed2 = "-" + "+" * k + "-" * (l - 1)
    inner = pad(block(k, l), "+")
    p1 = compose_all(
        inner,
        tensor(gen("t[++;-]"), block(k - 1, l)),
        transition(mixed1, std1),
    ).scale(qint(k) / qint(k + 1))
    i1 = compose_all(
        transition(std1, mixed1),
        tensor(gen("t[-;++]"), block(k - 1, l)),
        inner,
    )
    p2 = compose(
        pad(transition(eps, mixed2), "+"),
        tensor(gen("d[+-]"), block(k, l - 1)),
    ).scale(qint(l) * qint(k + l + 1) / (qint(l + 1) * qint(k + l + 2)))
    i2 = compose(
        tensor(gen("b[+-]"), block(k, l - 1)),
        pad(transition(mixed2, eps), "+"),
    )
    return DecompositionWitness(g, p1, p2, i1, i2, block(k - 1, l + 1), block(k, l - 1), name=f"ck3({k},{l})")


@dataclass
class QIdentity:
    name: str
    lhs: Morphism
    rhs: Morphism
    coefficients: dict[str, RingScalar]

    @property
    def difference(self) -> Morphism:
        return self.lhs - self.rhs

    @property
    def holds(self) -> bool:
        return self.difference.is_zero()

    def to_json_obj(self) -> dict:
        return {
            "identity": self.name,
            "holds": self.holds,
            "coefficients": {k: format_scalar(v) for k, v in self.coefficients.items()},
            "lhs_terms": len(self.lhs),
            "rhs_terms": len(self.rhs),
            "difference": self.difference.to_json_obj(),
        }


def q_identity_report(which: str, k: int, l: int = 0) -> QIdentity:
    """The quantum-coefficient splitting identities behind the recursions."""
    if which == "single-split":
        if k < 1:
            raise ValueError("k >= 1 required")
        amb = pad(C.clasp_single("+", k), "", "+")
        c = qint(k) / qint(k + 1)
        sandwich = compose_all(amb, pad(C.i_web("+"), "+" * (k - 1)), amb)
        lhs = C.clasp_single("+", k + 1) + sandwich.scale(c)
        return QIdentity(f"single-split k={k}", lhs, amb, {"[k]/[k+1]": c})
    if which == "double-split":
        if k < 1 or l < 1:
            raise ValueError("k, l >= 1 required")
        c1 = qint(k) / qint(k + 1)
        c2 = qint(l) / (qint(k + 1) * qint(k + l + 2))
        eps = "+" * k + "-" * l
        mid = "-" + "+" * k + "-" * (l - 1)
        inner = pad(block(k, l), "+")
        a_term = compose_all(inner, pad(C.i_web("+"), "", eps[1:]), inner)
        b_term = compose_all(
            pad(transition(eps, mid), "+"),
            pad(gen("d[+-]"), "", mid[1:]),
            pad(gen("b[+-]"), "", mid[1:]),
            pad(transition(mid, eps), "+"),
        )
        lhs = ck3_ambient(k, l)
        rhs = a_term.scale(c1) + b_term.scale(c2)
        return QIdentity(f"double-split k={k} l={l}", lhs, rhs, {"[k]/[k+1]": c1, "[l]/([k+1][k+l+2])": c2})
    raise ValueError(f"unknown identity {which!r}")


def verify_standardization(eps: str) -> Report:
    """Transitions to and from the block word compose to the two clasps."""
    k, l = C.counts(eps)
    std = "+" * k + "-" * l
    rep = Report(f"standardize {eps}")
    there, back = transition(eps, std), transition(std, eps)
    rep.add("there and back", compose(there, back), C.clasp_endo(eps))
    rep.add("back and there", compose(back, there), C.clasp_endo(std))
    return rep


def verify_commutativity(eps: str, delta: str) -> Report:
    """The braiding intertwines P_eps ⊗ P_delta with P_delta ⊗ P_eps."""
    rep = Report(f"commute P[{eps}] and P[{delta}]")
    pe = C.clasp_endo(eps) if eps else identity("")
    pd = C.clasp_endo(delta) if delta else identity("")
    c = braid(eps, delta, True)
    rep.add("braid intertwines", compose(tensor(pe, pd), c), compose(c, tensor(pd, pe)))
    return rep
