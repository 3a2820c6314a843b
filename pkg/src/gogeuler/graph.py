"""Finite graphs of groups with finite edge groups.

Loops are HNN edges.  Only edge-group orders are stored; the embeddings
themselves never enter any formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .core import (
    Custom,
    FreeOfRank,
    GroupDescriptor,
    InvariantRecord,
    SurfaceGenus,
    base_invariants,
)


@dataclass(frozen=True)
class EdgeRec:
    id: str
    u: str
    v: str
    order: int

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Violation:
    severity: str  # "error" or "warning"
    subject: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.subject}: {self.message}"


@dataclass(frozen=True)
class GraphOfGroups:
    vertices: Mapping[str, GroupDescriptor]
    edges: tuple[EdgeRec, ...] = ()
    _records: dict = field(default_factory=dict, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", dict(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))

    def record(self, vid: str) -> InvariantRecord:
        rec = self._records.get(vid)
        if rec is None:
            rec = base_invariants(self.vertices[vid])
            self._records[vid] = rec
        return rec

    def relabel(self, mapping: Mapping[str, str]) -> "GraphOfGroups":
        return GraphOfGroups(
            {mapping[k]: d for k, d in self.vertices.items()},
            tuple(EdgeRec(e.id, mapping[e.u], mapping[e.v], e.order) for e in self.edges),
        )


def vertex_report(vid: str, d: GroupDescriptor) -> list[Violation]:
    try:
        rec = base_invariants(d)
    except ValueError as exc:
        return [Violation("error", vid, str(exc))]
    if not rec.hypothesis_ok:
        return [Violation("error", vid, "vertex group is neither residually finite nor virtually torsion free")]
    return []


def edge_report(e: EdgeRec, vertices: Mapping[str, GroupDescriptor]) -> list[Violation]:
    out: list[Violation] = []
    if e.order < 1:
        return [Violation("error", e.id, f"edge order {e.order} is not positive")]
    ends = [e.u] if e.is_loop else [e.u, e.v]
    for vid in ends:
        if vid not in vertices:
            out.append(Violation("error", e.id, f"unknown endpoint {vid}"))
            continue
        d = vertices[vid]
        if isinstance(d, Custom):
            out.append(Violation("warning", e.id, f"edge order unverified against custom vertex {vid}"))
            continue
        try:
            rec = base_invariants(d)
        except ValueError:
            continue  # reported by the vertex check
        if rec.finite_order is not None:
            if rec.finite_order % e.order:
                out.append(Violation(
                    "error", e.id,
                    f"edge order {e.order} does not divide |{vid}| = {rec.finite_order}"))
            elif not e.is_loop and e.order == rec.finite_order:
                out.append(Violation("warning", e.id, f"trivial edge: edge group equals vertex group {vid}"))
        elif isinstance(d, (SurfaceGenus, FreeOfRank)) and e.order != 1:
            out.append(Violation(
                "error", e.id,
                f"edge order must be 1: vertex {vid} is torsion free"))
    return out


def validate(g: GraphOfGroups) -> list[Violation]:
    """Every violated constraint of ``g``: vertex checks, then edge checks, then connectivity."""
    report: list[Violation] = []
    if not g.vertices:
        return [Violation("error", "graph", "graph has no vertices")]
    for vid, d in g.vertices.items():
        report.extend(vertex_report(vid, d))
    seen: set[str] = set()
    for e in g.edges:
        if e.id in seen or e.id in g.vertices:
            report.append(Violation("error", e.id, "duplicate id"))
        seen.add(e.id)
        report.extend(edge_report(e, g.vertices))
    if not _connected(g):
        report.append(Violation("error", "graph", "underlying graph is not connected"))
    return report


def errors(report: list[Violation]) -> list[Violation]:
    return [v for v in report if v.severity == "error"]


def _connected(g: GraphOfGroups) -> bool:
    adj: dict[str, set[str]] = {v: set() for v in g.vertices}
    for e in g.edges:
        if e.u in adj and e.v in adj:
            adj[e.u].add(e.v)
            adj[e.v].add(e.u)
    start = next(iter(adj))
    stack, seen = [start], {start}
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def is_total_group_finite(g: GraphOfGroups) -> Optional[int]:
    """Order of the fundamental group if it is finite, else ``None``.

    Trivial edges (edge group equal to a finite endpoint group) are contracted
    first, since ``A *_A B = B``; whatever remains with an edge or an infinite
    vertex has infinite fundamental group.
    """
    orders = {v: g.record(v).finite_order for v in g.vertices}
    edges = list(g.edges)
    changed = True
    while changed and edges:
        changed = False
        for i, e in enumerate(edges):
            if e.is_loop:
                continue
            if orders[e.u] == e.order:
                absorbed, keep = e.u, e.v
            elif orders[e.v] == e.order:
                absorbed, keep = e.v, e.u
            else:
                continue
            del edges[i]
            del orders[absorbed]
            edges = [EdgeRec(f.id, keep if f.u == absorbed else f.u,
                             keep if f.v == absorbed else f.v, f.order) for f in edges]
            changed = True
            break
    if edges or len(orders) != 1:
        return None
    return next(iter(orders.values()))


def max_finite_subgroup(g: GraphOfGroups) -> Optional[int]:
    """Largest finite subgroup order over the vertex groups; ``None`` if any is unbounded."""
    best = 1
    for v in g.vertices:
        m = g.record(v).max_finite_subgroup
        if m is None:
            return None
        best = max(best, m)
    return best
