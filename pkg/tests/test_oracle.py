import itertools
import math
from fractions import Fraction as F

import pytest

from gogeuler.calculus import rank_gradient_graph
from gogeuler.decompose import free_product_finite_index, kurosh_rank_finite_index
from gogeuler.oracle import kernels
from gogeuler.oracle.groups import (
    AmbiguousCharacterData,
    FiniteGroupTable,
    GroupTableError,
    build_group,
    catalog_names,
    commutator_subgroup,
    conjugacy_class_count,
    hom_count,
    irrep_dimensions,
    min_generators,
)
from gogeuler.oracle.homs import (
    BudgetExceeded,
    hom_count_free_product,
    hom_count_surface,
    mednykh_eval,
)
from gogeuler.oracle.subgroups import (
    certificate_hom_count,
    enumerate_subgroups,
    floor_log,
    index_formula_free_rank,
    rank_gradient_estimate,
    subgroup_keys,
    vc_rate_witness,
    volume_estimates,
)
from gogeuler.verify import one_edge_graph

G = build_group


# finite groups

@pytest.mark.parametrize("name", catalog_names())
def test_catalog_tables_are_groups(name):
    t = G(name)
    n = t.order
    assert all(t.mul[0][x] == x == t.mul[x][0] for x in range(n))
    for x, y, z in itertools.product(range(n), repeat=3):
        assert t.mul[t.mul[x][y]][z] == t.mul[x][t.mul[y][z]]


def test_bad_table_rejected():
    with pytest.raises(GroupTableError):
        FiniteGroupTable(((0, 1), (1, 1)))


@pytest.mark.parametrize("name,order,classes,abelian", [
    ("cyclic4", 4, 4, True), ("sym3", 6, 3, False), ("quaternion8", 8, 5, False),
    ("sym4", 24, 5, False), ("alt4", 12, 4, False), ("dihedral4", 8, 5, False), ("klein4", 4, 4, True),
])
def test_group_facts(name, order, classes, abelian):
    t = G(name)
    assert (t.order, conjugacy_class_count(t), t.is_abelian()) == (order, classes, abelian)


def test_unknown_catalog_name():
    with pytest.raises(KeyError):
        G("monster")


@pytest.mark.parametrize("name,dims", [("cyclic4", (1, 1, 1, 1)), ("sym3", (1, 1, 2)),
                                       ("quaternion8", (1, 1, 1, 1, 2)), ("sym4", (1, 1, 2, 3, 3)),
                                       ("alt4", (1, 1, 1, 3))])
def test_irrep_dimensions(name, dims):
    assert tuple(sorted(irrep_dimensions(G(name)).dims)) == dims


@pytest.mark.parametrize("name", catalog_names())
def test_irrep_invariants(name):
    t = G(name)
    d = irrep_dimensions(t).dims
    assert sum(x * x for x in d) == t.order
    assert len(d) == conjugacy_class_count(t)
    assert d.count(1) == t.order // len(commutator_subgroup(t))
    assert all(t.order % x == 0 for x in d)


def test_ambiguous_is_an_error_type():
    assert issubclass(AmbiguousCharacterData, ValueError)


def _brute_min_generators(t):
    for k in range(0, t.order + 1):
        for combo in itertools.combinations(range(1, t.order), k):
            seen, frontier = {0}, [0]
            while frontier:
                x = frontier.pop()
                for g in combo:
                    y = t.mul[x][g]
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if len(seen) == t.order:
                return k


@pytest.mark.parametrize("name,want", [("cyclic6", 1), ("klein4", 2), ("sym3", 2), ("cyclic1", 0),
                                       ("quaternion8", 2), ("dihedral2", 2)])
def test_min_generators(name, want):
    t = G(name)
    assert min_generators(t) == want == _brute_min_generators(t)


# homomorphism counts

@pytest.mark.parametrize("name", [n for n in catalog_names() if G(n).order <= 8])
@pytest.mark.parametrize("g", [0, 1])
def test_mednykh_small(name, g):
    t = G(name)
    assert mednykh_eval(g, t) == hom_count_surface(g, t)
    if g == 0:
        assert mednykh_eval(0, t) == 1
    else:
        assert mednykh_eval(1, t) == t.order * conjugacy_class_count(t)


@pytest.mark.parametrize("name,want", [("cyclic2", 16), ("cyclic3", 81), ("cyclic4", 256),
                                       ("klein4", 256), ("sym3", 486)])
def test_mednykh_genus_two(name, want):
    assert mednykh_eval(2, G(name)) == hom_count_surface(2, G(name)) == want


def test_surface_examples():
    assert hom_count_surface(1, G("cyclic2")) == 4
    assert hom_count_surface(1, G("sym3")) == 18
    assert hom_count_surface(2, G("cyclic3")) == 81


def test_surface_budget():
    with pytest.raises(BudgetExceeded):
        hom_count_surface(3, G("sym4"), budget=10**6)


def test_brute_surface_against_naive_loop():
    t = G("dihedral4")
    inv = t.inv
    naive = sum(1 for a, b in itertools.product(range(8), repeat=2)
                if t.mul[t.mul[a][b]][t.mul[inv[a]][inv[b]]] == 0)
    assert naive == hom_count_surface(1, t)


@pytest.mark.parametrize("a,b,c,want", [("cyclic2", "cyclic3", "sym3", 12), ("cyclic2", "cyclic2", "cyclic2", 4),
                                        ("cyclic2", "cyclic3", "cyclic2", 2)])
def test_free_product_homs(a, b, c, want):
    assert hom_count_free_product(G(a), G(b), G(c)) == want


def test_hom_count_matches_order_count():
    # homs from a cyclic group of order m: elements x with x^m = 1
    s4 = G("sym4")
    for m in range(1, 9):
        t = G(f"cyclic{m}")
        want = sum(1 for x in range(24) if _power(s4, x, m) == 0)
        assert hom_count(t, s4) == want


def _power(t, x, m):
    y = 0
    for _ in range(m):
        y = t.mul[y][x]
    return y


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_backends_agree_on_surface(backend):
    for name in ("sym3", "quaternion8", "klein4", "cyclic5"):
        t = G(name)
        assert kernels.surface_hom_count(t.mul, t.inv, 2 if t.order <= 6 else 1, backend=backend) == \
            kernels.surface_hom_count(t.mul, t.inv, 2 if t.order <= 6 else 1, backend="python")


def test_cython_backend_is_built():
    assert "cython" in kernels.available_backends()


# subgroup enumeration

def _naive_hom_to_sym(t, n):
    """|Hom(t, S_n)| by trying every assignment of generator images and walking the Cayley graph."""
    gens = t.generators
    total = 0
    for images in itertools.product(itertools.permutations(range(n)), repeat=len(gens)):
        phi = {0: tuple(range(n))}
        frontier, ok = [0], True
        while frontier and ok:
            x = frontier.pop()
            for g, p in zip(gens, images):
                y = t.mul[x][g]
                img = tuple(p[i] for i in phi[x])  # right multiplication by g
                if y in phi:
                    ok = phi[y] == img
                    if not ok:
                        break
                else:
                    phi[y] = img
                    frontier.append(y)
        total += ok
    return total


def _hall_counts(h, nmax):
    """Index-n subgroup counts from |Hom(G, S_n)| by Hall's recursion."""
    t = {}
    for n in range(1, nmax + 1):
        t[n] = h[n] - sum(math.comb(n - 1, k - 1) * t[k] * h[n - k] for k in range(1, n))
    return [t[n] // math.factorial(n - 1) for n in range(1, nmax + 1)]


@pytest.mark.parametrize("a,b,nmax", [("cyclic2", "cyclic3", 5), ("cyclic2", "cyclic2", 5),
                                      ("klein4", "cyclic3", 4), ("cyclic4", "sym3", 4)])
def test_subgroup_counts_against_hall(a, b, nmax):
    ta, tb = G(a), G(b)
    h = {0: 1}
    for n in range(1, nmax + 1):
        h[n] = _naive_hom_to_sym(ta, n) * _naive_hom_to_sym(tb, n)
    want = _hall_counts(h, nmax)
    assert [len(enumerate_subgroups(ta, tb, n)) for n in range(1, nmax + 1)] == want


def test_modular_group_counts():
    ta, tb = G("cyclic2"), G("cyclic3")
    assert [len(enumerate_subgroups(ta, tb, n)) for n in range(1, 7)] == [1, 1, 4, 8, 5, 22]


def test_infinite_dihedral_index_two():
    certs = enumerate_subgroups(G("cyclic2"), G("cyclic2"), 2)
    assert len(certs) == 3
    shapes = sorted((c.free_rank, sum(len(h) > 1 for _, h in c.stabilizers)) for c in certs)
    assert shapes == [(0, 2), (0, 2), (1, 0)]


def test_index_one():
    (c,) = enumerate_subgroups(G("cyclic2"), G("cyclic2"), 1)
    assert c.free_rank == 0 and sorted(len(h) for _, h in c.stabilizers) == [2, 2]


def test_torsion_free_index_six():
    ta, tb = G("cyclic2"), G("cyclic3")
    free = [c for c in enumerate_subgroups(ta, tb, 6) if c.all_stabilizers_trivial]
    assert free and all(c.free_rank == 2 == c.min_rank for c in free)
    assert free_product_finite_index(2, 3, 6).free_rank == 2


@pytest.mark.parametrize("a,b", [("cyclic2", "cyclic2"), ("cyclic2", "cyclic3"), ("klein4", "cyclic2"),
                                 ("cyclic3", "cyclic4")])
def test_kurosh_and_free_rank(a, b):
    ta, tb = G(a), G(b)
    for s in range(1, 7):
        for c in enumerate_subgroups(ta, tb, s):
            assert c.decomposition.total_kurosh_count == kurosh_rank_finite_index(2, s) == s + 1
            assert sum(c.orbits_a) == sum(c.orbits_b) == s
            if c.all_stabilizers_trivial:
                assert c.free_rank == index_formula_free_rank(ta, tb, s) == c.min_rank


def test_rank_gradient_estimates():
    ta, tb = G("cyclic2"), G("cyclic3")
    assert rank_gradient_estimate(ta, tb, 1) == 1
    assert rank_gradient_estimate(ta, tb, 6) == F(1, 6) == rank_gradient_graph(one_edge_graph(2, 3))
    assert rank_gradient_estimate(G("cyclic2"), G("cyclic2"), 4) == 0


@pytest.mark.parametrize("backend", kernels.available_backends())
def test_enumeration_backends_and_workers_agree(backend):
    ta, tb = G("cyclic3"), G("cyclic3")
    base = subgroup_keys(ta, tb, 6, backend="python", workers=1)
    assert subgroup_keys(ta, tb, 6, backend=backend, workers=1) == base
    assert subgroup_keys(ta, tb, 6, backend=backend, workers=2) == base


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_subgroups(G("sym4"), G("sym4"), 8, budget=1000)


def test_enumeration_bad_index():
    with pytest.raises(ValueError):
        enumerate_subgroups(G("cyclic2"), G("cyclic2"), 0)


# volumes and hom-volume witnesses

def test_volume_estimates():
    assert volume_estimates([(F(1), 1)]) == volume_estimates([(1, 1)])
    v = volume_estimates([(1, 1)])
    assert v.lower == v.upper == 1
    v = volume_estimates([(0, 2), (1, 3)])
    assert (v.lower, v.upper) == (F(1, 3), 0)
    with pytest.raises(ValueError):
        volume_estimates([])


def test_betti_volume_sample():
    certs = enumerate_subgroups(G("cyclic2"), G("cyclic3"), 6)
    assert all(c.b1 == c.free_rank for c in certs)
    assert volume_estimates([(c.b1 - 1, c.degree) for c in certs]).lower == F(1, 6)


@pytest.mark.parametrize("base,value,want", [(2, 1, 0), (2, 2, 1), (2, 7, 2), (2, 8, 3), (3, 80, 3), (6, 6**5, 5)])
def test_floor_log(base, value, want):
    assert floor_log(base, value) == want


def test_certificate_hom_counts_match_free_product():
    ta, tb, tc = G("cyclic2"), G("cyclic3"), G("sym3")
    (whole,) = enumerate_subgroups(ta, tb, 1)
    assert certificate_hom_count(ta, tb, tc, whole) == hom_count_free_product(ta, tb, tc)


def test_vc_rate_witness():
    w = vc_rate_witness(G("cyclic2"), G("cyclic3"), G("cyclic2"), 6)
    assert w.best_rate >= F(1, 6) and w.witness_index == 6
    w = vc_rate_witness(G("cyclic2"), G("cyclic2"), G("cyclic2"), 2, all_indices=True)
    assert (w.best_rate, w.witness_index, w.hom_count) == (1, 1, 4)
    w = vc_rate_witness(G("cyclic2"), G("cyclic2"), G("cyclic2"), 2)
    assert w.best_rate >= F(1, 2)
    with pytest.raises(ValueError):
        vc_rate_witness(G("cyclic2"), G("cyclic2"), G("cyclic1"), 2)


def test_degenerate_rate_is_zero():
    # Z/2 * Z/3 -> Z/2 has exactly |C| homomorphisms
    w = vc_rate_witness(G("cyclic2"), G("cyclic3"), G("cyclic2"), 1)
    assert (w.best_rate, w.hom_count) == (0, 2)
