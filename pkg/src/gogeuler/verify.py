"""Named oracle cross-check suites behind ``gogeuler verify``."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .calculus import rank_gradient_graph
from .core import Finite
from .decompose import (
    amalgam_finite_index,
    chi_of_decomposition,
    free_product_finite_index,
    hnn_finite_index,
    kurosh_rank_finite_index,
)
from .graph import EdgeRec, GraphOfGroups
from .oracle.groups import (
    build_group,
    catalog_names,
    commutator_subgroup,
    conjugacy_class_count,
    irrep_dimensions,
)
from .oracle.homs import hom_count_surface, mednykh_eval
from .oracle.subgroups import (
    enumerate_subgroups,
    index_formula_free_rank,
    rank_gradient_estimate,
)


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tail = f" ({self.detail})" if self.detail else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.suite}: {self.name}{tail}"


MEDNYKH_G2_GROUPS = ("cyclic2", "cyclic3", "cyclic4", "klein4", "sym3")


def small_catalog(max_order: int) -> list[str]:
    return [n for n in catalog_names() if build_group(n).order <= max_order]


def suite_mednykh() -> list[Check]:
    out = []
    for name in small_catalog(8):
        t = build_group(name)
        dims = irrep_dimensions(t)
        ok_dims = (sum(d * d for d in dims) == t.order
                   and dims.dims.count(1) == t.order // len(commutator_subgroup(t))
                   and len(dims.dims) == conjugacy_class_count(t))
        out.append(Check("mednykh", f"irrep degrees {name}", ok_dims, str(dims.dims)))
        for g in (0, 1):
            f, b = mednykh_eval(g, t, dims), hom_count_surface(g, t)
            out.append(Check("mednykh", f"{name} g={g}", f == b, f"formula={f} brute_force={b}"))
        k1 = t.order * conjugacy_class_count(t)
        out.append(Check("mednykh", f"{name} g=1 equals |C|*classes", mednykh_eval(1, t, dims) == k1, str(k1)))
    for name in MEDNYKH_G2_GROUPS:
        t = build_group(name)
        f, b = mednykh_eval(2, t), hom_count_surface(2, t)
        out.append(Check("mednykh", f"{name} g=2", f == b, f"formula={f} brute_force={b}"))
    return out


KUROSH_GROUPS = ("cyclic1", "cyclic2", "cyclic3", "cyclic4", "klein4")


def suite_kurosh(max_index: int = 6) -> list[Check]:
    out = []
    for i, a in enumerate(KUROSH_GROUPS):
        for b in KUROSH_GROUPS[i:]:
            ta, tb = build_group(a), build_group(b)
            for s in range(1, max_index + 1):
                certs = enumerate_subgroups(ta, tb, s)
                want = kurosh_rank_finite_index(2, s)
                bad = [c for c in certs if c.decomposition.total_kurosh_count != want]
                bad += [c for c in certs if c.all_stabilizers_trivial
                        and c.free_rank != index_formula_free_rank(ta, tb, s)]
                out.append(Check("kurosh", f"{a}*{b} index {s}", not bad and (s > 1 or len(certs) == 1),
                                 f"{len(certs)} subgroups"))
    return out


RG_PAIRS = (("cyclic2", "cyclic2"), ("cyclic2", "cyclic3"), ("cyclic3", "cyclic3"))


def one_edge_graph(a: int, b: int, edge: int = 1) -> GraphOfGroups:
    return GraphOfGroups({"u": Finite(a), "v": Finite(b)}, (EdgeRec("e", "u", "v", edge),))


def suite_rank_gradient() -> list[Check]:
    out = []
    for a, b in RG_PAIRS:
        ta, tb = build_group(a), build_group(b)
        formula = rank_gradient_graph(one_edge_graph(ta.order, tb.order))
        top = ta.order * tb.order
        estimates = [rank_gradient_estimate(ta, tb, s) for s in range(1, top + 1)]
        out.append(Check("rank-gradient", f"{a}*{b} squeeze at index {top}", estimates[-1] == formula,
                         f"estimate={estimates[-1]} formula={formula}"))
        out.append(Check("rank-gradient", f"{a}*{b} estimates nonincreasing and above formula",
                         all(x >= y for x, y in zip(estimates, estimates[1:]))
                         and all(x >= formula for x in estimates)))
    return out


def _check_mult(d, values: dict[str, Fraction], parent: Fraction) -> bool:
    return chi_of_decomposition(d, values) == d.index * parent


def suite_decomposition_chi() -> list[Check]:
    """Multiplicativity of the Euler characteristic across every constructed decomposition.

    Base groups are finite with trivial chosen subgroups, so a factor of
    index ``m`` over a group of Euler characteristic ``1/m`` has value 1.
    """
    failures = total = rejected = 0
    for m in range(1, 9):
        for n in range(1, 9):
            step = math.lcm(m, n)
            for s in range(step, 4 * m * n + 1, step):
                total += 1
                if s + 1 - s // m - s // n < 0:
                    rejected += 1
                    try:
                        free_product_finite_index(m, n, s)
                        failures += 1
                    except ValueError:
                        pass
                    continue
                d = free_product_finite_index(m, n, s)
                parent = Fraction(1, m) + Fraction(1, n) - 1
                ok = _check_mult(d, {"H1": Fraction(1), "H2": Fraction(1)}, parent)
                if s == m * n:
                    ok = ok and d.free_rank == d.printed_d
                failures += not ok
    checks = [Check("decomposition-chi", "free products m,n <= 8, s <= 4mn", failures == 0, f"{total} cases, {rejected} without a connected covering")]
    failures = total = 0
    for k in range(1, 25):
        for c in range(1, k + 1):
            if k % c:
                continue
            # G finite of order k, K trivial
            d = hnn_finite_index(k, c)
            total += 1
            failures += not _check_mult(d, {"K": Fraction(1)}, Fraction(1, k) - Fraction(1, c))
    checks.append(Check("decomposition-chi", "HNN extensions c | k <= 24", failures == 0, f"{total} cases"))
    failures = total = 0
    for n1 in range(1, 13):
        for n2 in range(1, 13):
            for c in range(1, min(n1, n2) + 1):
                if n1 % c or n2 % c:
                    continue
                d = amalgam_finite_index(n1, n2, c)
                total += 1
                parent = Fraction(1, n1) + Fraction(1, n2) - Fraction(1, c)
                failures += not _check_mult(d, {"N1": Fraction(1), "N2": Fraction(1)}, parent)
    checks.append(Check("decomposition-chi", "amalgams c | n1, n2 <= 12", failures == 0, f"{total} cases"))
    return checks


def suite_dihedral_count() -> list[Check]:
    c2 = build_group("cyclic2")
    certs = enumerate_subgroups(c2, c2, 2)
    shapes = sorted((c.free_rank, tuple(sorted(len(h) for _, h in c.stabilizers if len(h) > 1)))
                    for c in certs)
    want = [(0, (2, 2)), (0, (2, 2)), (1, ())]
    return [Check("dihedral-count", "infinite dihedral has 3 index-2 subgroups: Z/2*Z/2 twice and Z",
                  shapes == want, f"{len(certs)} subgroups")]


SUITES: dict[str, Callable[[], list[Check]]] = {
    "mednykh": suite_mednykh,
    "kurosh": suite_kurosh,
    "rank-gradient": suite_rank_gradient,
    "decomposition-chi": suite_decomposition_chi,
    "dihedral-count": suite_dihedral_count,
}
