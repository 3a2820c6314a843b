"""Line-oriented text format for graphs of groups.

::

    # comment
    custom T omega=undef rg=1/2 b1l2=1/2 vb=0 vc_eq_rg=0 norm=unbounded hyp=1
    vertex v1 finite:2
    vertex v2 finite:sym3
    vertex v3 custom:T
    edge e1 v1 v2 2
    edge e2 v3 v3 1
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Optional

from .core import (
    Custom,
    Finite,
    FreeOfRank,
    GroupDescriptor,
    InvariantRecord,
    NilpotentInfinite,
    PolycyclicInfinite,
    SurfaceGenus,
    describe,
    format_rational,
    parse_rational,
)
from .graph import EdgeRec, GraphOfGroups
from .oracle.groups import catalog_order

_ID = re.compile(r"^[A-Za-z_][A-Za-z0-9_.\-]*$")
_CUSTOM_KEYS = ("omega", "rg", "b1l2", "vb", "vc_eq_rg", "norm", "hyp")


class ParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _ident(tok: str, line: int) -> str:
    if not _ID.match(tok):
        raise ParseError(line, f"bad identifier {tok!r}")
    return tok


def _posint(tok: str, line: int, what: str) -> int:
    if not tok.isdigit() or int(tok) < 1:
        raise ParseError(line, f"{what} must be a positive integer, got {tok!r}")
    return int(tok)


def _flag(tok: str, line: int, key: str) -> bool:
    if tok not in ("0", "1"):
        raise ParseError(line, f"{key} must be 0 or 1")
    return tok == "1"


def _rational(tok: str, line: int, key: str) -> Fraction:
    try:
        return parse_rational(tok)
    except ValueError:
        raise ParseError(line, f"{key}: not a rational {tok!r}") from None


def _custom(parts: list[str], line: int) -> Custom:
    if len(parts) != 2 + len(_CUSTOM_KEYS):
        raise ParseError(line, "custom needs a name and " + " ".join(f"{k}=" for k in _CUSTOM_KEYS))
    name = _ident(parts[1], line)
    fields = {}
    for tok in parts[2:]:
        key, sep, val = tok.partition("=")
        if not sep or key not in _CUSTOM_KEYS or key in fields:
            raise ParseError(line, f"bad or repeated field {tok!r}")
        fields[key] = val
    omega = None if fields["omega"] == "undef" else _rational(fields["omega"], line, "omega")
    norm = fields["norm"]
    try:
        record = InvariantRecord(
            omega=omega,
            rank_gradient=_rational(fields["rg"], line, "rg"),
            l2_betti=_rational(fields["b1l2"], line, "b1l2"),
            betti_volume=_rational(fields["vb"], line, "vb"),
            vc_equals_rg=_flag(fields["vc_eq_rg"], line, "vc_eq_rg"),
            finite_order=None,
            max_finite_subgroup=None if norm == "unbounded" else _posint(norm, line, "norm"),
            hypothesis_ok=_flag(fields["hyp"], line, "hyp"),
        )
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(line, str(exc)) from None
    return Custom(name, record)


def _descriptor(tok: str, customs: dict[str, Custom], line: int) -> GroupDescriptor:
    kind, _, arg = tok.partition(":")
    if kind == "finite":
        if arg.isdigit():
            return Finite(_posint(arg, line, "finite order"))
        try:
            return Finite(catalog_order(arg), arg)
        except KeyError:
            raise ParseError(line, f"unknown catalog name {arg!r}") from None
    if kind == "surface":
        return SurfaceGenus(_posint(arg, line, "genus"))
    if kind == "free":
        if not arg.isdigit():
            raise ParseError(line, f"free rank must be a nonnegative integer, got {arg!r}")
        return FreeOfRank(int(arg))
    if kind == "nilpotent" and not arg:
        return NilpotentInfinite()
    if kind == "polycyclic" and not arg:
        return PolycyclicInfinite()
    if kind == "custom":
        if arg not in customs:
            raise ParseError(line, f"custom group {arg!r} used before declaration")
        return customs[arg]
    raise ParseError(line, f"unknown descriptor {tok!r}")


def parse_lines(lines: Iterable[str]) -> GraphOfGroups:
    customs: dict[str, Custom] = {}
    vertices: dict[str, GroupDescriptor] = {}
    edges: list[EdgeRec] = []
    ids: set[str] = set()
    for no, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        parts = text.split()
        head = parts[0]
        if head == "custom":
            c = _custom(parts, no)
            if c.name in customs:
                raise ParseError(no, f"duplicate custom name {c.name}")
            customs[c.name] = c
        elif head == "vertex":
            if len(parts) != 3:
                raise ParseError(no, "expected: vertex <id> <descriptor>")
            vid = _ident(parts[1], no)
            if vid in ids:
                raise ParseError(no, f"duplicate id {vid}")
            ids.add(vid)
            vertices[vid] = _descriptor(parts[2], customs, no)
        elif head == "edge":
            if len(parts) != 5:
                raise ParseError(no, "expected: edge <id> <u> <v> <order>")
            eid, u, v = (_ident(p, no) for p in parts[1:4])
            if eid in ids:
                raise ParseError(no, f"duplicate id {eid}")
            for end in (u, v):
                if end not in vertices:
                    raise ParseError(no, f"vertex {end} used before declaration")
            ids.add(eid)
            edges.append(EdgeRec(eid, u, v, _posint(parts[4], no, "edge order")))
        else:
            raise ParseError(no, f"unknown statement {head!r}")
    return GraphOfGroups(vertices, tuple(edges))


def parse(text: str) -> GraphOfGroups:
    return parse_lines(text.splitlines())


def load(path: str) -> GraphOfGroups:
    with open(path, encoding="utf-8") as fh:
        return parse_lines(fh)


def _custom_line(c: Custom) -> str:
    r = c.record
    omega = "undef" if r.omega is None else format_rational(r.omega)
    norm = "unbounded" if r.max_finite_subgroup is None else str(r.max_finite_subgroup)
    return (f"custom {c.name} omega={omega} rg={format_rational(r.rank_gradient)} "
            f"b1l2={format_rational(r.l2_betti)} vb={format_rational(r.betti_volume)} "
            f"vc_eq_rg={int(r.vc_equals_rg)} norm={norm} hyp={int(r.hypothesis_ok)}")


def serialize(g: GraphOfGroups) -> str:
    """Canonical text: custom declarations by name, then vertices and edges in stored order."""
    customs: dict[str, Custom] = {}
    for d in g.vertices.values():
        if isinstance(d, Custom):
            prev: Optional[Custom] = customs.get(d.name)
            if prev is not None and prev != d:
                raise ValueError(f"two different custom groups named {d.name}")
            customs[d.name] = d
    out = [_custom_line(customs[k]) for k in sorted(customs)]
    out += [f"vertex {vid} {describe(d)}" for vid, d in g.vertices.items()]
    out += [f"edge {e.id} {e.u} {e.v} {e.order}" for e in g.edges]
    return "\n".join(out) + "\n"
