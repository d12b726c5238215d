import pytest
from hypothesis import given
from hypothesis import strategies as st

from teamlogic.formula import (
    And,
    Bottom,
    Dep,
    NegLit,
    Or,
    ParseError,
    PosLit,
    Top,
    is_pl,
    node_count,
    parse,
    render,
    vars_of,
)

from conftest import formulas


def test_parse_basic_shapes():
    assert parse("T") == Top()
    assert parse("F") == Bottom()
    assert parse("p") == PosLit("p")
    assert parse("~p") == NegLit("p")
    assert parse("p & q") == And(PosLit("p"), PosLit("q"))
    assert parse("p | q") == Or(PosLit("p"), PosLit("q"))


def test_precedence_and_associativity():
    # '|' binds looser than '&'; chains associate left
    assert parse("a & b | c") == Or(And(PosLit("a"), PosLit("b")), PosLit("c"))
    assert parse("a | b & c") == Or(PosLit("a"), And(PosLit("b"), PosLit("c")))
    assert parse("a & b & c") == And(And(PosLit("a"), PosLit("b")), PosLit("c"))
    assert parse("a | b | c") == Or(Or(PosLit("a"), PosLit("b")), PosLit("c"))
    assert parse("a | (b | c)") == Or(PosLit("a"), Or(PosLit("b"), PosLit("c")))


def test_dep_forms():
    assert parse("dep(p)") == Dep((), "p")
    assert parse("dep(;p)") == Dep((), "p")
    assert parse("dep(p;q)") == Dep(("p",), "q")
    assert parse("dep(a,b;c)") == Dep(("a", "b"), "c")
    assert render(parse("dep(;p)")) == "dep(p)"


def test_dep_is_a_variable_without_paren():
    assert parse("dep") == PosLit("dep")
    assert parse("dep & p") == And(PosLit("dep"), PosLit("p"))
    # whitespace between 'dep' and '(' still reads as the atom
    assert parse("dep (p)") == Dep((), "p")


def test_whitespace_insensitive():
    assert parse(" dep( p ; q )&( a | ~b ) ") == parse("dep(p;q)&(a|~b)")


@pytest.mark.parametrize(
    "text,pos",
    [
        ("", 1),
        ("p &", 4),
        ("p | | q", 5),
        ("(p", 3),
        ("p)", 2),
        ("~(p)", 2),
        ("~T", 2),
        ("~dep(p)", 2),
        ("dep()", 5),
        ("dep(a,b)", 8),
        ("dep(p;q", 8),
        ("p ? q", 3),
        ("P", 1),
    ],
)
def test_positioned_errors(text, pos):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.pos == pos
    assert str(exc.value).startswith(f"syntax error at position {pos}")


def test_trailing_garbage_rejected():
    with pytest.raises(ParseError) as exc:
        parse("p q")
    assert exc.value.pos == 3


def test_vars_of_and_is_pl():
    f = parse("dep(a,b;c) | x & ~y")
    assert vars_of(f) == {"a", "b", "c", "x", "y"}
    assert not is_pl(f)
    assert is_pl(parse("x & ~y | T"))
    assert vars_of(parse("T | F")) == set()


def test_node_count():
    assert node_count(parse("p")) == 1
    assert node_count(parse("p & q | dep(r)")) == 5


def test_render_minimal_parens():
    cases = [
        "p & q | r",
        "(p | q) & r",
        "p | (q | r)",
        "p & (q & r)",
        "dep(p;q) & ~x",
    ]
    for text in cases:
        assert render(parse(text)) == text


@given(formulas(names=("p", "q", "r"), max_leaves=8))
def test_parse_render_roundtrip(f):
    assert parse(render(f)) == f


@given(st.text(max_size=30))
def test_parser_totality(text):
    # any input either parses or raises a positioned ParseError
    try:
        parse(text)
    except ParseError as exc:
        assert exc.pos >= 1
