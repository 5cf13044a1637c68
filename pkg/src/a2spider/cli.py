"""Command-line frontend: a small web expression language and verification runner.

Expressions read bottom to top: ``f ; g`` is f followed by g (g stacked on top),
``f * g`` places f and g side by side, and ``(s) f`` scales f by the scalar s.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Sequence

from . import braiding as B
from . import clasp as C
from . import grothendieck as G
from . import web as W
from .rewrite import (
    Morphism,
    TermLimitExceeded,
    closure_trace,
    compose,
    gen,
    identity,
    random_diagram,
    reduce_random,
    reduce_web,
    set_term_limit,
    tensor,
    termination_metric,
)
from .scalar import RingScalar, ScalarSyntaxError, format_scalar, parse_scalar

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3
CACHE_ENV = "A2SPIDER_CACHE_DIR"


# syntax tree

@dataclass(frozen=True)
class Atom:
    """A generator such as ``t[-;++]`` or an identity ``id(+-)``."""

    name: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ClaspRef:
    """``P[SIGNS]``, ``P[eps=SIGNS]`` or the transition ``T[a=..,b=..]``."""

    source: str
    target: str
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class CrossRef:
    over: str
    under: str
    positive: bool = True
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Scale:
    scalar: RingScalar
    body: Expr
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Tensor:
    left: Expr
    right: Expr
    pos: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Compose:
    first: Expr
    then: Expr
    pos: int = field(default=0, compare=False)


Expr = Atom | ClaspRef | CrossRef | Scale | Tensor | Compose


class DSLError(ValueError):
    """Syntax or shape error carrying a source position."""

    def __init__(self, message: str, source: str, pos: int):
        line = source.count("\n", 0, pos) + 1
        col = pos - (source.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"line {line}, column {col}: {message}")
        self.line, self.column = line, col


_SIGNS = r"[+\-−]*"
_ATOM_RE = re.compile(
    r"id\((?P<id>" + _SIGNS + r")\)"
    r"|P\[(?:eps=)?(?P<p>" + _SIGNS + r")\]"
    r"|T\[a=(?P<ta>" + _SIGNS + r"),b=(?P<tb>" + _SIGNS + r")\]"
    r"|(?P<cross>ci|c)\[(?P<cs>[+\-−]),(?P<ct>[+\-−])\]"
    r"|(?P<gen>[tbdH]\[[+\-−;]*\])"
)


class _Parser:
    def __init__(self, source: str):
        self.src = source
        # whitespace-insensitive: strip it but remember original offsets
        self.chars = [(c, i) for i, c in enumerate(source) if not c.isspace()]
        self.text = "".join(c for c, _ in self.chars)
        self.i = 0

    def error(self, msg: str, at: int | None = None) -> DSLError:
        k = self.i if at is None else at
        pos = self.chars[k][1] if k < len(self.chars) else len(self.src)
        return DSLError(msg, self.src, pos)

    def offset(self, k: int) -> int:
        return self.chars[k][1] if k < len(self.chars) else len(self.src)

    def peek(self) -> str:
        return self.text[self.i] if self.i < len(self.text) else ""

    def parse(self) -> Expr:
        e = self.expr()
        if self.i != len(self.text):
            raise self.error(f"unexpected {self.peek()!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() == ";":
            at = self.i
            self.i += 1
            e = Compose(e, self.term(), self.offset(at))
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek() == "*":
            at = self.i
            self.i += 1
            e = Tensor(e, self.factor(), self.offset(at))
        return e

    def _matching(self, k: int) -> int:
        depth = 0
        for j in range(k, len(self.text)):
            if self.text[j] == "(":
                depth += 1
            elif self.text[j] == ")":
                depth -= 1
                if depth == 0:
                    return j
        raise self.error("unbalanced '('", k)

    def factor(self) -> Expr:
        start = self.i
        if self.peek() == "(":
            close = self._matching(start)
            after = self.text[close + 1 : close + 2]
            if after and after not in ";*)":
                try:
                    s = parse_scalar(self.text[start + 1 : close])
                except ScalarSyntaxError:
                    s = None
                if s is not None:
                    self.i = close + 1
                    return Scale(s, self.factor(), self.offset(start))
            self.i += 1
            e = self.expr()
            if self.peek() != ")":
                raise self.error("expected ')'")
            self.i += 1
            return e
        m = _ATOM_RE.match(self.text, self.i)
        if not m:
            raise self.error("expected a generator, id(..), P[..], T[..], c[..] or '('")
        self.i = m.end()
        pos = self.offset(start)
        if m.group("id") is not None:
            return Atom(f"id({W.normalize_signs(m.group('id'))})", pos)
        if m.group("p") is not None:
            eps = W.normalize_signs(m.group("p"))
            return ClaspRef(eps, eps, pos)
        if m.group("ta") is not None:
            return ClaspRef(W.normalize_signs(m.group("ta")), W.normalize_signs(m.group("tb")), pos)
        if m.group("cross"):
            return CrossRef(
                W.normalize_signs(m.group("cs")), W.normalize_signs(m.group("ct")), m.group("cross") == "c", pos
            )
        name = m.group("gen").replace("−", "-")
        if name not in W.GENERATOR_NAMES:
            raise self.error(f"unknown generator {name!r}", start)
        return Atom(name, pos)


def parse(source: str) -> Expr:
    """Parse an expression; errors report line and column."""
    return _Parser(source).parse()


def _prec(e: Expr) -> int:
    return 0 if isinstance(e, Compose) else 1 if isinstance(e, Tensor) else 2


def _at(e: Expr, level: int) -> str:
    return to_source(e) if _prec(e) >= level else f"({to_source(e)})"


def to_source(e: Expr) -> str:
    """Print an expression so that ``parse(to_source(e)) == e``."""
    if isinstance(e, Atom):
        return e.name
    if isinstance(e, ClaspRef):
        return f"P[{e.source}]" if e.source == e.target else f"T[a={e.source},b={e.target}]"
    if isinstance(e, CrossRef):
        return f"{'c' if e.positive else 'ci'}[{e.over},{e.under}]"
    if isinstance(e, Scale):
        return f"({format_scalar(e.scalar)}) {_at(e.body, 2)}"
    if isinstance(e, Tensor):
        return f"{_at(e.left, 1)} * {_at(e.right, 2)}"
    if isinstance(e, Compose):
        return f"{_at(e.first, 0)} ; {_at(e.then, 1)}"
    raise TypeError(e)


def elaborate(e: Expr, source: str = "") -> Morphism:
    """Evaluate an expression to a reduced morphism, checking shapes."""
    if isinstance(e, Atom):
        if e.name.startswith("id("):
            return identity(e.name[3:-1])
        return gen(e.name)
    if isinstance(e, ClaspRef):
        try:
            if e.source == e.target:
                return C.clasp_endo(e.source) if e.source else identity("")
            return C.transition(e.source, e.target)
        except C.ClaspError as exc:
            raise DSLError(str(exc), source, e.pos) from None
    if isinstance(e, CrossRef):
        return B.crossing(e.over, e.under, e.positive)
    if isinstance(e, Scale):
        return elaborate(e.body, source).scale(e.scalar)
    if isinstance(e, Tensor):
        return tensor(elaborate(e.left, source), elaborate(e.right, source))
    if isinstance(e, Compose):
        a, b = elaborate(e.first, source), elaborate(e.then, source)
        if a.cod != b.dom:
            raise DSLError(
                f"cannot compose: codomain {a.cod or '∅'!r} does not match domain {b.dom or '∅'!r}", source, e.pos
            )
        return compose(a, b)
    raise TypeError(e)


def evaluate(source: str) -> Morphism:
    return elaborate(parse(source), source)


# output

def describe(m: Morphism) -> str:
    """Human-readable listing of a morphism in canonical term order."""
    head = f"{m.dom or '∅'} -> {m.cod or '∅'}: {len(m)} term{'s' if len(m) != 1 else ''}"
    lines = [head]
    for w, s in m.sorted_terms():
        if w == W.canonical(W.identity(w.dom)) and w.dom == w.cod:
            label = f"id({w.dom})" if w.dom else "empty"
        else:
            label = f"web[{w.nv} vertices, key {W.canonical_key(w).hex()[:16]}]"
        lines.append(f"  {format_scalar(s)} {label}")
    return "\n".join(lines)


def _emit(args: argparse.Namespace, text: str, obj: object) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print(text)


# verification suites

def _words(max_len: int) -> list[str]:
    out = [""]
    for n in range(1, max_len + 1):
        out += ["".join(p) for p in _product("+-", n)]
    return [w for w in out if w]


def _product(alphabet: str, n: int) -> list[tuple[str, ...]]:
    from itertools import product

    return list(product(alphabet, repeat=n))


def suite_clasp(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    if len(args) == 1:
        return [C.verify_clasp(args[0])]
    if len(args) == 2:
        return [C.verify_clasp((int(args[0]), int(args[1])))]
    return [C.verify_clasp(w) for w in _words(opts.max_degree or 3)]


def suite_kim(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    ks = [int(args[0])] if args else range(1, (opts.max_degree or 5) + 1)
    reps = []
    for k in ks:
        r = C.Report(f"kim expansion k={k}")
        r.add("expansion equals the clasp", C.kim_expansion(k), C.clasp_single("+", k))
        reps.append(r)
    return reps


def suite_x_vanish(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    ks = [int(args[0])] if args else range(1, (opts.max_degree or 3) + 1)
    reps = []
    for k in ks:
        r = C.Report(f"X(k;i) for k={k}")
        for i in range(2, k + 2):
            r.add(f"X({k};{i}) vanishes", C.x_single(k, i))
        r.add(
            f"X({k};1) value",
            C.x_single(k, 1),
            C.x_single_rhs(k).scale(C.x_single_coefficient(k)),
        )
        reps.append(r)
    return reps


def suite_reidemeister(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    if args:
        return [B.verify_reidemeister(args[0], args[1] if len(args) > 1 else "+")]
    return B.all_reidemeister()


def suite_slide(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    if len(args) == 2:
        return [B.verify_clasp_slide(args[0].strip("'\""), args[1])]
    return [B.verify_clasp_slide(d, e) for d in ("", "+", "-") for e in _words(opts.max_degree or 3)]


def suite_ck1(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    return [G.verify_split_sum(G.witness_ck1())]


def suite_ck2(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    ks = [int(args[0])] if args else (1, 2, 3)
    return [G.verify_split_sum(G.witness_ck2(k)) for k in ks]


def suite_ck3(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    cases = [(int(args[0]), int(args[1]))] if len(args) == 2 else [(1, 1), (2, 1), (1, 2)]
    return [G.verify_split_sum(G.witness_ck3(k, l)) for k, l in cases]


def suite_qident(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    if args:
        which, nums = args[0], [int(a) for a in args[1:]]
        cases = [(which, *nums)]
    else:
        cases = [("single-split", k) for k in (1, 2, 3)] + [("double-split", k, l) for k, l in ((1, 1), (2, 1), (1, 2))]
    reps = []
    for case in cases:
        q = G.q_identity_report(*case)
        r = C.Report(q.name)
        r.add("both sides agree", q.lhs, q.rhs)
        reps.append(r)
    return reps


def suite_trace(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    if len(args) == 2:
        cases = [(int(args[0]), int(args[1]))]
    else:
        n = opts.max_degree or 4
        cases = [(k, d - k) for d in range(1, n + 1) for k in range(d + 1)]
    reps = []
    for k, l in cases:
        r = C.Report(f"trace of P({k},{l})")
        r.add_flag("closure equals [k+1][l+1][k+l+2]/[2]", closure_trace(C.block(k, l)) == C.closure_formula(k, l))
        reps.append(r)
    return reps


def suite_confluence(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    count = int(args[0]) if args else 100
    rng = random.Random(opts.seed)
    r = C.Report(f"confluence, {count} diagrams, seed {opts.seed}")
    for n in range(count):
        d = random_diagram(rng, layers=rng.randint(4, 12))
        ref = reduce_web(d)
        decreasing = True

        def step(before: W.WebDiagram, after: W.WebDiagram) -> None:
            nonlocal decreasing
            decreasing &= termination_metric(after) < termination_metric(before)

        same = all(reduce_random(d, random.Random(rng.random()), step) == ref for _ in range(5))
        r.add_flag(f"diagram {n}: five orders agree", same)
        r.add_flag(f"diagram {n}: metric decreases", decreasing)
    return [r]


def suite_dim(args: list[str], opts: argparse.Namespace) -> list[C.Report]:
    n = opts.max_degree or 8
    r = G.cheb_dim_check(n)
    for d in range(n + 1):
        for k in range(d + 1):
            l = d - k
            r.add_flag(f"class ({k},{l}) matches", G.grothendieck_class(k, l) == G.cheb(k, l))
            r.add_flag(f"swap ({k},{l})", G.cheb(l, k) == G.cheb(k, l).swap())
    return [r]


SUITES: dict[str, Callable[[list[str], argparse.Namespace], list[C.Report]]] = {
    "clasp": suite_clasp,
    "kim": suite_kim,
    "x-vanish": suite_x_vanish,
    "reidemeister": suite_reidemeister,
    "slide": suite_slide,
    "ck1": suite_ck1,
    "ck2": suite_ck2,
    "ck3": suite_ck3,
    "qident": suite_qident,
    "trace": suite_trace,
    "confluence": suite_confluence,
    "dim": suite_dim,
}


# commands

def cmd_reduce(args: argparse.Namespace) -> int:
    m = evaluate(args.expr)
    _emit(args, describe(m), m.to_json_obj())
    return EXIT_PASS


def cmd_clasp(args: argparse.Namespace) -> int:
    e = parse(args.descriptor)
    if not isinstance(e, ClaspRef):
        raise DSLError("expected P[..] or T[..]", args.descriptor, 0)
    m = elaborate(e, args.descriptor)
    _emit(args, describe(m), m.to_json_obj())
    return EXIT_PASS


def cmd_cheb(args: argparse.Namespace) -> int:
    p = G.cheb(args.k, args.l)
    _emit(args, str(p), {"k": args.k, "l": args.l, "poly": str(p), "terms": p.to_json_obj()})
    return EXIT_PASS


def cmd_cheb_table(args: argparse.Namespace) -> int:
    rows = [(k, d - k, G.cheb(k, d - k)) for d in range(args.n + 1) for k in range(d, -1, -1)]
    text = "\n".join(f"C({k},{l}) = {p}" for k, l, p in rows)
    obj = [{"k": k, "l": l, "poly": str(p), "terms": p.to_json_obj()} for k, l, p in rows]
    _emit(args, text, obj)
    return EXIT_PASS


def cmd_trace(args: argparse.Namespace) -> int:
    s = closure_trace(C.block(args.k, args.l))
    ok = s == C.closure_formula(args.k, args.l)
    _emit(args, format_scalar(s), {"k": args.k, "l": args.l, "trace": format_scalar(s), "matches_formula": ok})
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    suite = SUITES.get(args.suite)
    if suite is None:
        raise _Usage(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    try:
        reports = suite(list(args.args), args)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    ok = all(r.passed for r in reports)
    _emit(
        args,
        "\n".join(r.summary() for r in reports) + f"\n{'PASS' if ok else 'FAIL'}",
        {"suite": args.suite, "pass": ok, "reports": [r.to_json_obj() for r in reports]},
    )
    return EXIT_PASS if ok else EXIT_FAIL


def cmd_canon(args: argparse.Namespace) -> int:
    text = sys.stdin.read() if args.path == "-" else Path(args.path).read_text()
    w = W.from_json(text)
    print(W.to_json(W.canonical(w)))
    return EXIT_PASS


class _Usage(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message: str):
        raise _Usage(message)


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    common.add_argument("--max-degree", type=int, default=None, help="size bound for suites")
    common.add_argument("--limit-terms", type=int, default=None, help="abort (exit 3) past this many terms")

    p = _ArgumentParser(prog="a2spider", description="A2 web calculus, clasps and Chebyshev recursions.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)
    s = sub.add_parser("reduce", parents=[common], help="reduce a web expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_reduce)
    s = sub.add_parser("clasp", parents=[common], help="expand P[..] or T[a=..,b=..]")
    s.add_argument("descriptor")
    s.set_defaults(func=cmd_clasp)
    s = sub.add_parser("cheb", parents=[common], help="A2 Chebyshev polynomial")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)
    s.set_defaults(func=cmd_cheb)
    s = sub.add_parser("cheb-table", parents=[common], help="Chebyshev polynomials up to total degree N")
    s.add_argument("n", type=int, metavar="N")
    s.set_defaults(func=cmd_cheb_table)
    s = sub.add_parser("trace", parents=[common], help="closure of the clasp P(k,l)")
    s.add_argument("k", type=int)
    s.add_argument("l", type=int)
    s.set_defaults(func=cmd_trace)
    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", help=", ".join(SUITES))
    s.add_argument("args", nargs="*")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("canon", parents=[common], help="canonical form of a web JSON file ('-' for stdin)")
    s.add_argument("path")
    s.set_defaults(func=cmd_canon)
    return p


def _cache_file() -> Path | None:
    d = os.environ.get(CACHE_ENV)
    return Path(d) / "clasps.json" if d else None


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except _Usage as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cache = _cache_file()
    if cache is not None and cache.exists():
        C.CACHE.load(cache)
    set_term_limit(args.limit_terms)
    try:
        code = args.func(args)
    except (_Usage, DSLError, ScalarSyntaxError, W.WebError, C.ClaspError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TermLimitExceeded as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    finally:
        set_term_limit(None)
    if cache is not None:
        cache.parent.mkdir(parents=True, exist_ok=True)
        C.CACHE.save(cache)
    return code


if __name__ == "__main__":
    sys.exit(main())
