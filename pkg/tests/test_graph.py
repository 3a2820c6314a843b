import random

import pytest
from hypothesis import given, settings

from gogeuler.core import Custom, Finite, FreeOfRank, InvariantRecord, NilpotentInfinite, SurfaceGenus
from gogeuler.graph import (
    EdgeRec,
    GraphOfGroups,
    edge_report,
    errors,
    is_total_group_finite,
    max_finite_subgroup,
    validate,
    vertex_report,
)
from graphgen import finite_graphs


def g2(a, b, order, loop=False):
    vs = {"v1": a, "v2": b}
    return GraphOfGroups(vs, (EdgeRec("e1", "v1", "v2", order),))


def test_valid_psl():
    assert validate(g2(Finite(2), Finite(3), 1)) == []


def test_lagrange_violation():
    errs = errors(validate(g2(Finite(4), Finite(6), 3)))
    assert len(errs) == 1 and "does not divide" in errs[0].message and "v1" in errs[0].message


def test_torsion_free_loop():
    g = GraphOfGroups({"v": SurfaceGenus(2)}, (EdgeRec("e", "v", "v", 2),))
    errs = errors(validate(g))
    assert len(errs) == 1 and "must be 1" in errs[0].message
    g = GraphOfGroups({"v": FreeOfRank(2)}, (EdgeRec("e", "v", "v", 1),))
    assert validate(g) == []


def test_disconnected_and_duplicates():
    g = GraphOfGroups({"a": Finite(2), "b": Finite(2)})
    assert any("connected" in v.message for v in errors(validate(g)))
    g = GraphOfGroups({"a": Finite(2)}, (EdgeRec("a", "a", "a", 1),))
    assert any("duplicate" in v.message for v in errors(validate(g)))
    g = GraphOfGroups({"a": Finite(2)}, (EdgeRec("e", "a", "a", 1), EdgeRec("e", "a", "a", 2)))
    assert any("duplicate" in v.message for v in errors(validate(g)))
    assert errors(validate(GraphOfGroups({})))


def test_warnings_are_not_errors():
    g = g2(Finite(2), Finite(4), 2)
    report = validate(g)
    assert report and not errors(report) and "trivial edge" in report[0].message
    rec = InvariantRecord(None, 0, 0, 0, False, None, None, True)
    g = g2(Custom("T", rec), Finite(2), 2)
    report = validate(g)
    assert not errors(report) and "unverified" in report[0].message


def test_custom_without_hypothesis_is_error():
    rec = InvariantRecord(None, 0, 0, 0, False, None, None, False)
    assert errors(validate(GraphOfGroups({"x": Custom("T", rec)})))


@pytest.mark.parametrize("g,want", [
    (GraphOfGroups({"v": Finite(5)}), 5),
    (GraphOfGroups({"v": Finite(2)}, (EdgeRec("e", "v", "v", 2),)), None),
    (g2(Finite(2), Finite(2), 1), None),
    (g2(Finite(2), Finite(6), 2), 6),
    (GraphOfGroups({"v": NilpotentInfinite()}), None),
])
def test_is_total_group_finite(g, want):
    assert is_total_group_finite(g) == want


def test_max_finite_subgroup():
    assert max_finite_subgroup(g2(Finite(4), Finite(6), 2)) == 6
    assert max_finite_subgroup(g2(Finite(4), NilpotentInfinite(), 1)) is None
    assert max_finite_subgroup(GraphOfGroups({"v": SurfaceGenus(2)})) == 1


def _bad_random_graph(rng):
    """Possibly invalid: edge orders drawn without regard to Lagrange."""
    n = rng.randint(1, 4)
    vs = {f"v{i}": rng.choice([Finite(rng.randint(1, 8)), SurfaceGenus(1), NilpotentInfinite()]) for i in range(n)}
    es = tuple(EdgeRec(f"e{k}", f"v{rng.randrange(n)}", f"v{rng.randrange(n)}", rng.randint(1, 4))
               for k in range(rng.randint(0, 4)))
    return GraphOfGroups(vs, es)


def test_report_is_union_of_local_reports():
    rng = random.Random(7)
    for _ in range(300):
        g = _bad_random_graph(rng)
        local = [v for vid, d in g.vertices.items() for v in vertex_report(vid, d)]
        local += [v for e in g.edges for v in edge_report(e, g.vertices)]
        report = validate(g)
        assert [v for v in report if v.subject != "graph"] == local
        assert validate(g) == report


@settings(max_examples=200, deadline=None)
@given(finite_graphs)
def test_relabel_invariance(g):
    assert errors(validate(g)) == []
    mapping = {v: f"w_{v}" for v in reversed(list(g.vertices))}
    h = g.relabel(mapping)
    assert errors(validate(h)) == []
    assert is_total_group_finite(h) == is_total_group_finite(g)
