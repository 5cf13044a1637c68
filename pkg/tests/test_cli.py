from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from a2spider import cli
from a2spider import web as W
from a2spider.cli import Atom, ClaspRef, Compose, CrossRef, DSLError, Scale, Tensor, evaluate, parse, to_source
from a2spider.rewrite import identity
from a2spider.scalar import ONE, RingScalar, parse_scalar, qint


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_compose_and_evaluate():
    e = parse("b[+-] ; d[+-]")
    assert e == Compose(Atom("b[+-]"), Atom("d[+-]"))
    assert evaluate("b[+-] ; d[+-]") == identity("").scale(qint(3))


def test_parse_tensor_of_identities():
    assert evaluate("id(+) * id(-)") == identity("+-")


def test_scaled_expression():
    e = parse("(1/(v^6+1+v^-6)) b[+-] ; d[+-]")
    assert isinstance(e, Compose) and isinstance(e.first, Scale)
    assert evaluate("(1/(v^6+1+v^-6)) b[+-] ; d[+-]") == identity("")


def test_whitespace_insensitive():
    assert parse(" b [ + - ]  ;d[+-] ") == parse("b[+-];d[+-]")


def test_atoms():
    assert parse("P[eps=-+]") == ClaspRef("-+", "-+")
    assert parse("T[a=-+,b=+-]") == ClaspRef("-+", "+-")
    assert parse("ci[+,-]") == CrossRef("+", "-", False)
    assert evaluate("c[+,-] ; ci[-,+]") == identity("+-")


def test_syntax_error_position():
    with pytest.raises(DSLError) as exc:
        parse("b[+-] ;\n  d[+?]")
    assert (exc.value.line, exc.value.column) == (2, 3)


def test_shape_error_names_both_sides():
    with pytest.raises(DSLError, match="'\\+-' does not match domain '-\\+'"):
        evaluate("b[+-] ; d[-+]")


def test_unknown_generator():
    with pytest.raises(DSLError):
        parse("t[+;++]")


def test_cheb_command(capsys):
    assert run(capsys, "cheb", "1", "1")[:2] == (0, "x*y - 1\n")


def test_cheb_json_sorted_terms(capsys):
    code, out, _ = run(capsys, "cheb", "2", "1", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["terms"] == sorted(obj["terms"])


def test_cheb_table(capsys):
    code, out, _ = run(capsys, "cheb-table", "2")
    assert code == 0 and "C(1,1) = x*y - 1" in out


def test_trace_command(capsys):
    code, out, _ = run(capsys, "trace", "1", "1")
    assert code == 0
    assert parse_scalar(out.strip()) == qint(2) * qint(4)


def test_reduce_command_is_byte_stable(capsys):
    first = run(capsys, "reduce", "T[a=-+,b=+-] ; H[+-;-+]", "--json")
    second = run(capsys, "reduce", "T[a=-+,b=+-] ; H[+-;-+]", "--json")
    assert first == second and first[0] == 0


def test_clasp_command(capsys):
    code, out, _ = run(capsys, "clasp", "P[+-]")
    assert code == 0 and out.startswith("+- -> +-: 2 terms")
    assert run(capsys, "clasp", "b[+-]")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "ck1"),
        ("verify", "ck2", "1"),
        ("verify", "ck3", "1", "1"),
        ("verify", "qident", "single-split", "1"),
        ("verify", "clasp", "+-"),
        ("verify", "kim", "3"),
        ("verify", "x-vanish", "1"),
        ("verify", "reidemeister", "R2", "+-"),
        ("verify", "slide", "+", "+-"),
        ("verify", "trace", "--max-degree", "2"),
        ("verify", "dim", "--max-degree", "4"),
    ],
)
def test_verify_suites_pass(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    assert out.rstrip().endswith("PASS")


def test_confluence_deterministic(capsys):
    a = run(capsys, "verify", "confluence", "20", "--seed", "7", "--json")
    b = run(capsys, "verify", "confluence", "20", "--seed", "7", "--json")
    assert a == b and a[0] == 0


def test_usage_errors(capsys):
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "verify", "nosuch")[0] == 2
    assert run(capsys, "reduce", "b[+-] ; d[-+]")[0] == 2
    assert run(capsys, "cheb", "x", "1")[0] == 2


def test_term_limit_exit_code(capsys):
    cli.C.CACHE.clear()
    assert run(capsys, "clasp", "P[+++]", "--limit-terms", "2")[0] == 3


def test_canon_command(tmp_path, capsys):
    w = W.glue_compose(W.generator("t[++;-]"), W.generator("t[-;++]"))
    path = tmp_path / "web.json"
    path.write_text(W.to_json(w))
    code, out, _ = run(capsys, "canon", str(path))
    assert code == 0
    assert out.strip() == W.to_json(W.canonical(w))
    path.write_text(out)
    assert run(capsys, "canon", str(path))[1] == out


def test_cache_dir(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path))
    assert run(capsys, "clasp", "P[++-]")[0] == 0
    assert (tmp_path / "clasps.json").exists()
    assert run(capsys, "clasp", "P[++-]")[0] == 0


# round trip of printed expressions

atoms = st.sampled_from(
    [Atom(n) for n in W.GENERATOR_NAMES]
    + [Atom("id(+-)"), Atom("id()"), ClaspRef("+-", "+-"), ClaspRef("-+", "+-"), CrossRef("+", "-", False)]
)
scalars = st.sampled_from([ONE, qint(3), ONE / qint(2), -RingScalar.v(3)])
exprs = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Tensor, sub, sub),
        st.builds(Compose, sub, sub),
        st.builds(Scale, scalars, sub),
    ),
    max_leaves=6,
)


@settings(max_examples=100, deadline=None)
@given(exprs)
def test_print_parse_round_trip(e):
    assert parse(to_source(e)) == e

