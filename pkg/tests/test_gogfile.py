import pytest
from hypothesis import given, settings

from gogeuler.core import Custom, Finite, FreeOfRank, NilpotentInfinite, PolycyclicInfinite, SurfaceGenus
from gogeuler.gogfile import ParseError, parse, serialize
from gogeuler.graph import errors, validate
from graphgen import finite_graphs


def test_psl_file():
    g = parse("vertex v1 finite:2\nvertex v2 finite:3\nedge e1 v1 v2 1\n")
    assert g.vertices == {"v1": Finite(2), "v2": Finite(3)}
    assert [(e.id, e.u, e.v, e.order) for e in g.edges] == [("e1", "v1", "v2", 1)]
    assert validate(g) == []


def test_every_descriptor():
    g = parse("""
# all kinds
custom T omega=undef rg=1/2 b1l2=1/2 vb=0 vc_eq_rg=0 norm=unbounded hyp=1
vertex a finite:sym3
vertex b surface:2
vertex c free:3
vertex d nilpotent
vertex e polycyclic
vertex f custom:T
vertex g finite:12
""")
    v = g.vertices
    assert v["a"] == Finite(6, "sym3") and v["b"] == SurfaceGenus(2) and v["c"] == FreeOfRank(3)
    assert v["d"] == NilpotentInfinite() and v["e"] == PolycyclicInfinite() and v["g"] == Finite(12)
    assert isinstance(v["f"], Custom) and v["f"].record.omega is None


@pytest.mark.parametrize("text,line", [
    ("edge e1 v1 v1 2", 1),
    ("vertex a finite:2\nvertex a finite:3", 2),
    ("vertex a finite:2\nedge a a a 1", 2),
    ("vertex a finite:monster", 1),
    ("vertex a finite:0", 1),
    ("vertex a surface:x", 1),
    ("\n\nvertex a custom:T", 3),
    ("vertex a finite:2\nedge e a a 0", 2),
    ("vertex a finite:2\nedge e a a", 2),
    ("frobnicate", 1),
    ("custom T omega=1/2 rg=0 b1l2=0 vb=1 vc_eq_rg=0 norm=2 hyp=1", 1),  # vb > rg
    ("custom T omega=1/2 rg=0 b1l2=0 vb=0 vc_eq_rg=2 norm=2 hyp=1", 1),
    ("custom T omega=1/2 rg=0 b1l2=0 vb=0 vc_eq_rg=0 norm=2", 1),
    ("vertex 1a finite:2", 1),
])
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_single_surface():
    assert parse("vertex v surface:2").vertices == {"v": SurfaceGenus(2)}


def test_roundtrip_custom():
    text = ("custom T omega=-1/3 rg=1/2 b1l2=1/2 vb=0 vc_eq_rg=1 norm=4 hyp=1\n"
            "vertex x custom:T\nvertex y finite:quaternion8\nedge e x y 1\nedge l y y 2\n")
    g = parse(text)
    assert serialize(g) == text
    assert parse(serialize(g)) == g


@settings(max_examples=200, deadline=None)
@given(finite_graphs)
def test_roundtrip(g):
    assert errors(validate(g)) == []
    text = serialize(g)
    assert parse(text) == g
    assert serialize(parse(text)) == text
