"""Clasps: the idempotents projecting onto the top irreducible summand.

Every clasp is fully expanded into basis webs and memoized.  Composition is
written left to right: ``compose(a, b)`` means ``a`` then ``b``.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from . import web as W
from .rewrite import Morphism, compose, compose_all, gen, identity, linear_combination, star_morphism, tensor
from .scalar import ONE, RingScalar, qbinom, qint

PLUS_MINUS = "+-"
MINUS_PLUS = "-+"


class ClaspError(ValueError):
    pass


def _order(order: str) -> str:
    o = order.replace("−", "-").replace("then", "").replace(" ", "")
    if o not in (PLUS_MINUS, MINUS_PLUS):
        raise ClaspError(f"unknown block order {order!r}")
    return o


def counts(eps: str) -> tuple[int, int]:
    return eps.count("+"), eps.count("-")


class ClaspCache:
    """Memo table from clasp descriptors to expanded morphisms."""

    def __init__(self) -> None:
        self.table: dict[tuple, Morphism] = {}

    def get(self, key: tuple) -> Morphism | None:
        return self.table.get(key)

    def put(self, key: tuple, value: Morphism) -> Morphism:
        self.table[key] = value
        return value

    def clear(self) -> None:
        self.table.clear()

    def save(self, path: str | os.PathLike) -> None:
        data = [{"key": list(k), "value": m.to_json_obj()} for k, m in self.table.items()]
        Path(path).write_text(json.dumps(data, sort_keys=True))

    def load(self, path: str | os.PathLike) -> None:
        p = Path(path)
        if not p.exists():
            return
        for item in json.loads(p.read_text()):
            self.table[tuple(item["key"])] = Morphism.from_json_obj(item["value"])


CACHE = ClaspCache()


def _cached(key: tuple, build) -> Morphism:
    hit = CACHE.get(key)
    if hit is None:
        hit = CACHE.put(key, build())
    return hit


def pad(m: Morphism, left: str = "", right: str = "") -> Morphism:
    """Tensor identities on either side."""
    if left:
        m = tensor(identity(left), m)
    if right:
        m = tensor(m, identity(right))
    return m


def i_web(sign: str) -> Morphism:
    """The two-vertex web merging two parallel strands and splitting them again."""
    if sign == "+":
        return compose(gen("t[++;-]"), gen("t[-;++]"))
    return compose(gen("t[--;+]"), gen("t[+;--]"))


def clasp_single(sign: str, k: int) -> Morphism:
    """P_{sign^k} by the three-term recursion in k."""
    sign = sign.replace("−", "-")
    if sign not in "+-" or len(sign) != 1:
        raise ClaspError(f"bad sign {sign!r}")
    if k < 1:
        raise ClaspError("single clasp needs k >= 1")

    def build() -> Morphism:
        if k == 1:
            return identity(sign)
        prev = pad(clasp_single(sign, k - 1), right=sign)
        middle = pad(i_web(sign), left=sign * (k - 2))
        sandwich = compose_all(prev, middle, prev)
        return prev - sandwich.scale(qint(k - 1) / qint(k))

    return _cached(("single", sign, k), build)


def single_or_empty(sign: str, k: int) -> Morphism:
    return identity("") if k == 0 else clasp_single(sign, k)


def nested_caps(order: str, i: int) -> Morphism:
    """i nested caps closing a^i b^i, where order = ab."""
    order = _order(order)
    a, b = order
    out = identity("")
    for _ in range(i):
        out = compose(pad(out, a, b), gen(f"d[{order}]"))
    return out


def nested_cups(order: str, i: int) -> Morphism:
    """i nested cups opening a^i b^i, where order = ab."""
    order = _order(order)
    a, b = order
    out = identity("")
    for _ in range(i):
        out = compose(gen(f"b[{order}]"), pad(out, a, b))
    return out


def _double_coeff(k: int, l: int, i: int) -> RingScalar:
    c = qbinom(k, i) * qbinom(l, i) / qbinom(k + l + 1, i)
    return -c if i % 2 else c


def _turnback(order: str, k: int, l: int, i: int) -> Morphism:
    a, b = order
    caps = pad(nested_caps(order, i), a * (k - i), b * (l - i))
    cups = pad(nested_cups(order, i), a * (k - i), b * (l - i))
    return compose(caps, cups)


def clasp_double(order: str, k: int, l: int) -> Morphism:
    """P_{a^k b^l} for order = ab, as the alternating sum over turnbacks."""
    order = _order(order)
    if k < 0 or l < 0 or k + l < 1:
        raise ClaspError("double clasp needs k, l >= 0 and k + l >= 1")

    def build() -> Morphism:
        a, b = order
        outer = tensor(single_or_empty(a, k), single_or_empty(b, l))
        eps = a * k + b * l
        total = Morphism(eps, eps)
        for i in range(min(k, l) + 1):
            inner = identity(eps) if i == 0 else _turnback(order, k, l, i)
            total = total + inner.scale(_double_coeff(k, l, i))
        if min(k, l) == 0:
            return outer
        return compose_all(outer, total, outer)

    return _cached(("double", order, k, l), build)


def block(k: int, l: int) -> Morphism:
    """P_{+^k -^l}, allowing the empty clasp."""
    if k + l == 0:
        return identity("")
    return clasp_double(PLUS_MINUS, k, l)


def compose_with_block(m: Morphism, left: str, k: int, l: int, right: str = "") -> Morphism:
    """``m`` then (1_left ⊗ P_{+^k -^l} ⊗ 1_right), expanding the clasp lazily.

    Equivalent to composing with the cached clasp, but keeps intermediate
    boundaries small, which matters for wide clasps.
    """
    if k + l == 0:
        return m
    if ("double", PLUS_MINUS, k, l) in CACHE.table or min(k, l) == 0:
        return compose(m, pad(block(k, l), left, right))
    outer_l = pad(tensor(single_or_empty("+", k), identity("-" * l)), left, right)
    outer_r = pad(tensor(identity("+" * k), single_or_empty("-", l)), left, right)
    base = compose(compose(m, outer_l), outer_r)
    total = base
    for i in range(1, min(k, l) + 1):
        caps = pad(nested_caps(PLUS_MINUS, i), left + "+" * (k - i), "-" * (l - i) + right)
        cups = pad(nested_cups(PLUS_MINUS, i), left + "+" * (k - i), "-" * (l - i) + right)
        total = total + compose(compose(base, caps), cups).scale(_double_coeff(k, l, i))
    return compose(compose(total, outer_l), outer_r)


def sigma_web(eps: str) -> Morphism:
    """The web from +^k -^l to eps with every +/- crossing replaced by an H."""
    eps = W.normalize_signs(eps)
    k, l = counts(eps)
    cur = "+" * k + "-" * l
    # target position of each strand: i-th + goes to i-th + of eps, likewise for -
    plus_pos = [i for i, c in enumerate(eps) if c == "+"]
    minus_pos = [i for i, c in enumerate(eps) if c == "-"]
    dest = plus_pos + minus_pos
    out = identity(cur)
    h = gen("H[+-;-+]")
    swapped = True
    while swapped:
        swapped = False
        for j in range(len(cur) - 1):
            if cur[j] == "+" and cur[j + 1] == "-" and dest[j] > dest[j + 1]:
                out = compose(out, pad(h, cur[:j], cur[j + 2 :]))
                cur = cur[:j] + "-+" + cur[j + 2 :]
                dest[j], dest[j + 1] = dest[j + 1], dest[j]
                swapped = True
    assert cur == eps
    return out


def clasp_into(eps: str) -> Morphism:
    """P^eps: the clasp on +^k -^l followed by the sigma web."""
    eps = W.normalize_signs(eps)
    k, l = counts(eps)
    return _cached(("into", eps), lambda: compose(block(k, l), sigma_web(eps)))


def clasp_endo(eps: str) -> Morphism:
    """P_eps^eps, the idempotent clasp on an arbitrary sign word."""
    eps = W.normalize_signs(eps)
    k, l = counts(eps)
    if eps == "+" * k + "-" * l:
        return block(k, l)
    return _cached(("endo", eps), lambda: compose(star_morphism(clasp_into(eps)), clasp_into(eps)))


def transition(alpha: str, beta: str) -> Morphism:
    """P_alpha^beta from alpha to beta through the standard clasp."""
    alpha, beta = W.normalize_signs(alpha), W.normalize_signs(beta)
    if counts(alpha) != counts(beta):
        raise ClaspError(f"{alpha!r} and {beta!r} have different sign counts")
    if alpha == beta:
        return clasp_endo(alpha)
    return _cached(
        ("trans", alpha, beta), lambda: compose(star_morphism(clasp_into(alpha)), clasp_into(beta))
    )


# expansion identities

def kim_expansion(k: int) -> Morphism:
    """P_{+^k} as the sum over j of the first strand moving right past j strands."""
    if k < 1:
        raise ClaspError("k >= 1 required")
    if k == 1:
        return identity("+")
    eps = "+" * k
    base = pad(clasp_single("+", k - 1), left="+")
    iw = i_web("+")
    total = Morphism(eps, eps)
    term = base
    for j in range(k):
        if j > 0:
            term = compose(term, pad(iw, "+" * (j - 1), "+" * (k - j - 1)))
        c = qint(k - j) / qint(k)
        total = total + term.scale(-c if j % 2 else c)
    return total


def x_single(k: int, i: int, l: int = 1) -> Morphism:
    """The web X(k;i): i strands turned back under P_{+^(k+1)}, whose first
    output merges with an extra strand on the left, capped by P_{+^k -^(i+l-1)}.

    Domain + +^(k+1-i) -^(l-1); codomain - +^k -^(i+l-1).
    """
    if not 1 <= i <= k + 1 or l < 1:
        raise ClaspError("x_single needs 1 <= i <= k+1 and l >= 1")
    tail = "-" * (l - 1)
    dom = "+" * (k + 2 - i) + tail
    m = identity(dom)
    m = compose(m, pad(nested_cups(PLUS_MINUS, i), "+" * (k + 2 - i), tail))
    m = compose(m, pad(clasp_single("+", k + 1), "+", "-" * (i + l - 1)))
    m = compose(m, pad(gen("t[++;-]"), "", "+" * k + "-" * (i + l - 1)))
    return compose_with_block(m, "-", k, i + l - 1)


def x_single_rhs(k: int, l: int = 1) -> Morphism:
    """The composite multiplying (-1)^k/[k+1] in the value of X(k;1)."""
    first = tensor(gen("t[+;--]"), block(k, l - 1))
    second = pad(transition("-" + "+" * k + "-" * (l - 1), "+" * k + "-" * l), "-")
    return compose(first, second)


def x_single_coefficient(k: int) -> RingScalar:
    c = ONE / qint(k + 1)
    return -c if k % 2 else c


def clasp_recursion_rhs(k: int, l: int) -> Morphism:
    """Three-term expression for P_{+^(k+1) -^l} in terms of P_{+^k -^l}."""
    if k < 1 or l < 1:
        raise ClaspError("k, l >= 1 required")
    eps = "+" * k + "-" * l
    mid = "-" + "+" * k + "-" * (l - 1)
    inner = pad(block(k, l), "+")
    a_term = compose_all(inner, pad(i_web("+"), "", eps[1:]), inner)
    down = pad(transition(eps, mid), "+")
    up = pad(transition(mid, eps), "+")
    rest = mid[1:]
    b_term = compose_all(down, pad(gen("d[+-]"), "", rest), pad(gen("b[+-]"), "", rest), up)
    return linear_combination(
        "+" + eps,
        "+" + eps,
        [
            (ONE, inner),
            (-(qint(k) / qint(k + 1)), a_term),
            (-(qint(l) / (qint(k + 1) * qint(k + l + 2))), b_term),
        ],
    )


def cap_vertex_sides(k: int, l: int) -> tuple[Morphism, RingScalar, Morphism]:
    """Both sides of the identity turning a cup plus a merge into a split.

    Returns (left web, scalar, right web) with left = scalar * right.
    """
    if k < 1 or l < 1:
        raise ClaspError("k, l >= 1 required")
    low = "+" * k + "-" * (l - 1)
    left = compose_all(
        tensor(gen("b[+-]"), block(k, l - 1)),
        pad(transition("-" + low, "+" * k + "-" * l), "+"),
        pad(gen("t[++;-]"), "", "+" * (k - 1) + "-" * l),
        pad(block(k - 1, l), "-"),
    )
    right = compose_all(
        block(k, l - 1),
        pad(gen("t[+;--]"), "", low[1:]),
        pad(transition("-" + "+" * (k - 1) + "-" * (l - 1), "+" * (k - 1) + "-" * l), "-"),
    )
    scalar = qint(k + 1) / qint(k) * (ONE - qint(l + 1) / (qint(k + 1) * qint(k + l + 1)))
    return left, scalar, right


def partial_trace_sides(k: int, l: int) -> tuple[Morphism, RingScalar, Morphism]:
    """P_{+^k-^l} with P_{+^(k+1)-^l} traced over its first strand, versus a multiple of P."""
    p = block(k, l)
    left = compose_all(
        p,
        tensor(gen("b[-+]"), identity("+" * k + "-" * l)),
        pad(block(k + 1, l), "-"),
        tensor(gen("d[-+]"), identity("+" * k + "-" * l)),
        p,
    )
    scalar = qint(k + 2) * qint(k + l + 3) / (qint(k + 1) * qint(k + l + 2))
    return left, scalar, p


def closure_formula(k: int, l: int) -> RingScalar:
    return qint(k + 1) * qint(l + 1) * qint(k + l + 2) / qint(2)


# verification

@dataclass
class Check:
    name: str
    passed: bool
    residual: Morphism | None = None

    def to_json_obj(self) -> dict:
        obj = {"check": self.name, "pass": self.passed}
        if self.residual is not None and not self.passed:
            obj["residual"] = self.residual.to_json_obj()
        return obj


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, lhs: Morphism, rhs: Morphism | None = None) -> Check:
        """Record whether lhs equals rhs (or is zero when rhs is None)."""
        diff = lhs if rhs is None else lhs - rhs
        c = Check(name, diff.is_zero(), None if diff.is_zero() else diff)
        self.checks.append(c)
        return c

    def add_flag(self, name: str, ok: bool) -> Check:
        c = Check(name, bool(ok))
        self.checks.append(c)
        return c

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json_obj(self) -> dict:
        return {"subject": self.subject, "pass": self.passed, "checks": [c.to_json_obj() for c in self.checks]}

    def summary(self) -> str:
        n = len(self.checks)
        bad = self.failures()
        head = f"{self.subject}: {n - len(bad)}/{n} checks pass"
        return "\n".join([head] + [f"  FAIL {c.name}" for c in bad])


BOTTOM_ATTACHMENTS = ("b[+-]", "b[-+]", "t[-;++]", "t[+;--]")
TOP_ATTACHMENTS = ("d[+-]", "d[-+]", "t[++;-]", "t[--;+]")


def attachments(eps: str, names: Iterable[str], top: bool) -> list[tuple[str, int, Morphism]]:
    """Every placement of a generator whose codomain (bottom) or domain (top)
    matches a contiguous piece of eps."""
    out = []
    for name in names:
        g = W.generator(name)
        side = g.dom if top else g.cod
        for a in range(len(eps) - len(side) + 1):
            if eps[a : a + len(side)] == side:
                out.append((name, a, pad(gen(name), eps[:a], eps[a + len(side) :])))
    return out


def is_block_word(w: str) -> bool:
    """Whether w has the form a^s b^t with at most one sign change."""
    return sum(1 for x, y in zip(w, w[1:]) if x != y) <= 1


def verify_clasp(target: str | tuple[int, int]) -> Report:
    """Idempotency, absorption, annihilation and unit coefficient of a clasp."""
    if isinstance(target, tuple):
        k, l = target
        eps = "+" * k + "-" * l
    else:
        eps = W.normalize_signs(target)
    p = clasp_endo(eps)
    rep = Report(f"P[{eps}]")
    rep.add("idempotent", compose(p, p), p)
    for a in range(len(eps)):
        for b in range(a + 2, len(eps) + 1):
            piece = eps[a:b]
            if piece == eps or not is_block_word(piece):
                continue
            q = pad(clasp_endo(piece), eps[:a], eps[b:])
            rep.add(f"absorb P[{piece}] at {a} below", compose(q, p), p)
            rep.add(f"absorb P[{piece}] at {a} above", compose(p, q), p)
    for name, a, m in attachments(eps, BOTTOM_ATTACHMENTS, top=False):
        rep.add(f"annihilate {name} at {a} below", compose(m, p))
    for name, a, m in attachments(eps, TOP_ATTACHMENTS, top=True):
        rep.add(f"annihilate {name} at {a} above", compose(p, m))
    rep.add_flag("identity coefficient is 1", p.coefficient(W.identity(eps)) == ONE)
    return rep
