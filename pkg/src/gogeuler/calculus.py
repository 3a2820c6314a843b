"""Closed-form Euler-characteristic invariants of graphs of groups.

Two affine shapes cover everything: the Euler sign (vertex values minus
``1/|G_e|`` per edge) for omega, and the co-Euler sign (plus ``1/|G_e|``) for
rank gradient, Betti volume, hom-volume and the shifted L2-Betti number.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .graph import GraphOfGroups, errors, is_total_group_finite, validate


class InvalidGraph(ValueError):
    pass


class UndefinedInvariant(ValueError):
    pass


def _require_valid(g: GraphOfGroups) -> None:
    errs = errors(validate(g))
    if errs:
        raise InvalidGraph("; ".join(str(v) for v in errs))


def chi_hnn(chi_g: Fraction, h: int) -> Fraction:
    if h < 1:
        raise ValueError("edge group order must be >= 1")
    return Fraction(chi_g) - Fraction(1, h)


def chi_amalgam(chi_1: Fraction, chi_2: Fraction, h: int) -> Fraction:
    if h < 1:
        raise ValueError("edge group order must be >= 1")
    return Fraction(chi_1) + Fraction(chi_2) - Fraction(1, h)


def _edge_sum(g: GraphOfGroups) -> Fraction:
    return sum((Fraction(1, e.order) for e in g.edges), Fraction(0))


def _vertex_sum(g: GraphOfGroups, vertex_val: Mapping[str, Fraction]) -> Fraction:
    missing = [v for v in g.vertices if v not in vertex_val]
    if missing:
        raise ValueError(f"incomplete chi assignment: no value for {', '.join(missing)}")
    return sum((Fraction(vertex_val[v]) for v in g.vertices), Fraction(0))


def graph_chi(g: GraphOfGroups, vertex_chi: Mapping[str, Fraction]) -> Fraction:
    """Iterated amalgam/HNN formula: vertex values minus ``1/|G_e|`` per edge."""
    _require_valid(g)
    return _vertex_sum(g, vertex_chi) - _edge_sum(g)


def graph_cochi(g: GraphOfGroups, vertex_val: Mapping[str, Fraction]) -> Fraction:
    _require_valid(g)
    return _vertex_sum(g, vertex_val) + _edge_sum(g)


def omega_graph(g: GraphOfGroups) -> Fraction:
    vals = {}
    for v in g.vertices:
        w = g.record(v).omega
        if w is None:
            raise UndefinedInvariant(f"omega undefined at vertex {v}")
        vals[v] = w
    return graph_chi(g, vals)


def rank_gradient_graph(g: GraphOfGroups) -> Fraction:
    return graph_cochi(g, {v: g.record(v).rank_gradient for v in g.vertices})


def betti_volume_graph(g: GraphOfGroups) -> Fraction:
    return graph_cochi(g, {v: g.record(v).betti_volume for v in g.vertices})


def _inv_order(n: Optional[int]) -> Fraction:
    return Fraction(0) if n is None else Fraction(1, n)


def l2_betti_graph(g: GraphOfGroups) -> Fraction:
    # the Euler characteristic here is b1^(2)(G) - 1/|G|, with 1/|G| = 0 for infinite G
    shifted = graph_cochi(g, {
        v: g.record(v).l2_betti - _inv_order(g.record(v).finite_order) for v in g.vertices
    })
    return shifted + _inv_order(is_total_group_finite(g))


def vc_graph(g: GraphOfGroups) -> Fraction:
    vals = {}
    for v in g.vertices:
        rec = g.record(v)
        if rec.finite_order is not None:
            vals[v] = -Fraction(1, rec.finite_order)
        elif rec.vc_equals_rg:
            vals[v] = rec.rank_gradient
        else:
            raise UndefinedInvariant(f"V_C not established for vertex {v}")
    return graph_cochi(g, vals)


@dataclass(frozen=True)
class InvariantReport:
    omega: Optional[Fraction]
    rank_gradient: Fraction
    l2_betti: Fraction
    betti_volume: Fraction
    vc: Optional[Fraction]
    finite_order: Optional[int]
    undefined: Mapping[str, str]

    def items(self) -> list[tuple[str, Optional[Fraction]]]:
        """Invariants in the fixed report order, keyed by their short names."""
        return [
            ("omega", self.omega),
            ("rg", self.rank_gradient),
            ("b1l2", self.l2_betti),
            ("vb", self.betti_volume),
            ("vc", self.vc),
        ]


def compute_invariants(g: GraphOfGroups) -> InvariantReport:
    _require_valid(g)
    undefined = {}
    try:
        omega = omega_graph(g)
    except UndefinedInvariant as exc:
        omega, undefined["omega"] = None, str(exc)
    try:
        vc = vc_graph(g)
    except UndefinedInvariant as exc:
        vc, undefined["vc"] = None, str(exc)
    return InvariantReport(
        omega=omega,
        rank_gradient=rank_gradient_graph(g),
        l2_betti=l2_betti_graph(g),
        betti_volume=betti_volume_graph(g),
        vc=vc,
        finite_order=is_total_group_finite(g),
        undefined=undefined,
    )


def ends_rg_lower_bound(kind: str, f: int) -> Fraction:
    """Rank-gradient floor for a group with infinitely many ends splitting over a group of order ``f``."""
    if f < 1:
        raise ValueError("finite edge group order must be >= 1")
    if kind == "amalgam":
        return Fraction(1, 6 * f)
    if kind == "hnn":
        return Fraction(1, 2 * f)
    raise ValueError(f"unknown splitting kind {kind!r}")


def accessibility_edge_bound(norm_g: int, rg: Fraction) -> int:
    """Most edges a minimal splitting can have: ``floor(||G|| * (1/2 + RG))``.

    Assumes the splitting has a nontrivial base vertex group (its rank
    gradient is then at least -1/2).
    """
    if norm_g is None or norm_g < 1:
        raise ValueError("largest finite subgroup order must be a positive integer")
    rg = Fraction(rg)
    if rg < Fraction(-1, 2):
        raise ValueError(f"rank gradient {rg} below -1/2")
    return max(0, math.floor(norm_g * (Fraction(1, 2) + rg)))


def torsion_free_edge_bound(rg_h: Fraction) -> int:
    rg_h = Fraction(rg_h)
    if rg_h < 0:
        raise ValueError("rank gradient of a torsion-free finite-index subgroup must be >= 0")
    return math.floor(rg_h)


def fixed_subgroup_complexity_bound(index_n: int, omega_n: Fraction) -> Fraction:
    """Upper bound ``[G:N]/2 - omega(N) + 1`` on the maximum complexity of a fixed subgroup."""
    if index_n < 1:
        raise ValueError("index must be >= 1")
    return Fraction(index_n, 2) - Fraction(omega_n) + 1
