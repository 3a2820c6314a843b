"""Finite-index subgroups of a free product ``A * B`` of two finite groups.

An index-``s`` subgroup is the stabilizer of point 0 in a transitive action
of ``A * B`` on ``s`` points, i.e. a pair of actions of ``A`` and ``B``.
Up to relabeling, the ``A``-action can be taken from a fixed list of
representatives (one per isomorphism class of ``A``-sets), so only the
``B``-actions are enumerated in full.  Each (action pair, basepoint) is
reduced to a canonical key by breadth-first relabeling from the basepoint;
equal keys mean the same subgroup.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from ..decompose import Factor, FreeProductDecomposition
from . import kernels
from .groups import (
    FiniteGroupTable,
    Perm,
    compose,
    extend_hom,
    hom_count,
    min_generators,
    perms_with_cycle_lengths_dividing,
    subgroup_class_reps,
)
from .homs import BudgetExceeded

DEFAULT_BUDGET = 2 * 10**7


@dataclass(frozen=True)
class PermutationAction:
    degree: int
    images: tuple[Perm, ...]  # images[a] is the permutation of element a

    def orbits(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for x in range(self.degree):
            if x in seen:
                continue
            orb = tuple(sorted({p[x] for p in self.images}))
            seen.update(orb)
            out.append(orb)
        return out

    def stabilizer(self, x: int) -> frozenset[int]:
        return frozenset(a for a, p in enumerate(self.images) if p[x] == x)


@dataclass(frozen=True)
class SubgroupCertificate:
    action_a: PermutationAction
    action_b: PermutationAction
    degree: int
    decomposition: FreeProductDecomposition
    min_rank: int
    b1: int
    orbits_a: tuple[int, ...]  # orbit sizes, descending
    orbits_b: tuple[int, ...]
    stabilizers: tuple[tuple[str, frozenset[int]], ...]  # ("A" | "B", stabilizer of an orbit point)
    key: bytes

    @property
    def free_rank(self) -> int:
        return self.decomposition.free_rank

    @property
    def all_stabilizers_trivial(self) -> bool:
        return all(len(h) == 1 for _, h in self.stabilizers)

    def format(self) -> str:
        oa = ",".join(map(str, self.orbits_a))
        ob = ",".join(map(str, self.orbits_b))
        return (f"index={self.degree} orbitsA={oa} orbitsB={ob} "
                f"free_rank={self.free_rank} min_rank={self.min_rank}")


def aset_representatives(t: FiniteGroupTable, s: int) -> list[tuple[Perm, ...]]:
    """Generator images of one action per isomorphism class of ``t``-sets of size ``s``."""
    reps = subgroup_class_reps(t)
    comps = [(t.order // len(h), h) for h in reps]
    out = []

    def coset_action(h: frozenset[int]) -> list[list[int]]:
        cosets: list[frozenset[int]] = []
        where = {}
        for x in range(t.order):
            if x in where:
                continue
            c = frozenset(t.mul[x][y] for y in h)
            for y in c:
                where[y] = len(cosets)
            cosets.append(c)
        reps_ = [min(c) for c in cosets]
        return [[where[t.mul[g][r]] for r in reps_] for g in t.generators]

    def build(start: int, remaining: int, chosen: list[int]) -> None:
        if remaining == 0:
            images = [[] for _ in t.generators]
            offset = 0
            for i in chosen:
                size, h = comps[i]
                for gi, perm in enumerate(coset_action(h)):
                    images[gi].extend(offset + p for p in perm)
                offset += size
            out.append(tuple(tuple(p) for p in images))
            return
        for i in range(start, len(comps)):
            if comps[i][0] <= remaining:
                build(i, remaining - comps[i][0], chosen + [i])

    build(0, s, [])
    return out


def _candidate_count(t: FiniteGroupTable, s: int) -> int:
    total = 1
    for g in t.generators:
        total *= len(_perm_pool(s, t.element_orders[g]))
    return total


@lru_cache(maxsize=None)
def _perm_pool(s: int, k: int) -> tuple[Perm, ...]:
    return tuple(perms_with_cycle_lengths_dividing(s, k))


def homs_into_symmetric(t: FiniteGroupTable, s: int, budget: int = DEFAULT_BUDGET) -> list[tuple[Perm, ...]]:
    """Every homomorphism ``t -> Sym(s)``, as images of ``t.generators``."""
    if _candidate_count(t, s) > budget:
        raise BudgetExceeded(f"too many candidate actions of {t.name or 'group'} on {s} points")
    gens = t.generators
    pools = [_perm_pool(s, t.element_orders[g]) for g in gens]
    ident = tuple(range(s))
    out = []

    def rec(i: int, chosen: list[Perm]) -> None:
        if i == len(gens):
            if len(gens) == 1 or extend_hom(t, gens, chosen, compose, ident) is not None:
                out.append(tuple(chosen))
            return
        for p in pools[i]:
            chosen.append(p)
            rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("GOGEULER_WORKERS", "1")))
    except ValueError:
        return 1


def _keys_job(args):
    a_gens, b_homs, s, backend = args
    return kernels.pointed_keys(a_gens, b_homs, s, backend=backend)


def subgroup_keys(
    ta: FiniteGroupTable,
    tb: FiniteGroupTable,
    s: int,
    budget: int = DEFAULT_BUDGET,
    workers: Optional[int] = None,
    backend: Optional[str] = None,
) -> list[bytes]:
    """Sorted canonical keys, one per index-``s`` subgroup of ``ta * tb``."""
    if s < 1:
        raise ValueError("index must be >= 1")
    a_reps = aset_representatives(ta, s)
    b_homs = homs_into_symmetric(tb, s, budget)
    work = len(a_reps) * len(b_homs) * s
    if work > budget:
        raise BudgetExceeded(f"enumeration work {work} exceeds budget {budget}")
    workers = _default_workers() if workers is None else workers
    jobs = [(list(a), b_homs, s, backend) for a in a_reps]
    keys: set[bytes] = set()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_keys_job, jobs):
                keys |= part
    else:
        for job in jobs:
            keys |= _keys_job(job)
    return sorted(keys)


def _split_key(key: bytes, ka: int, kb: int, s: int) -> tuple[list[Perm], list[Perm]]:
    perms = [tuple(key[i * s:(i + 1) * s]) for i in range(ka + kb)]
    return perms[:ka], perms[ka:]


def _full_action(t: FiniteGroupTable, gen_images: Sequence[Perm], s: int) -> PermutationAction:
    img = extend_hom(t, t.generators, gen_images, compose, tuple(range(s)))
    if img is None:
        raise AssertionError("key does not encode a homomorphism")
    return PermutationAction(s, tuple(img[a] for a in range(t.order)))


def certificate_from_key(ta: FiniteGroupTable, tb: FiniteGroupTable, s: int, key: bytes) -> SubgroupCertificate:
    ga, gb = _split_key(key, len(ta.generators), len(tb.generators), s)
    act_a, act_b = _full_action(ta, ga, s), _full_action(tb, gb, s)
    factors: dict[tuple[str, int], int] = {}
    stabs = []
    min_rank = 0
    sizes = {}
    for side, t, act in (("A", ta, act_a), ("B", tb, act_b)):
        orbs = act.orbits()
        sizes[side] = tuple(sorted((len(o) for o in orbs), reverse=True))
        for orb in orbs:
            h = act.stabilizer(orb[0])
            stabs.append((side, h))
            factors[(side, len(h))] = factors.get((side, len(h)), 0) + 1
            if len(h) > 1:
                min_rank += _min_gens(t, h)
    n_orbits = len(sizes["A"]) + len(sizes["B"])
    free_rank = s - n_orbits + 1
    decomposition = FreeProductDecomposition(
        factors=tuple(Factor(f"{side}{order}", mult, order) for (side, order), mult in sorted(factors.items())),
        free_rank=free_rank,
        index=s,
    )
    return SubgroupCertificate(
        action_a=act_a,
        action_b=act_b,
        degree=s,
        decomposition=decomposition,
        min_rank=min_rank + free_rank,
        b1=free_rank,
        orbits_a=sizes["A"],
        orbits_b=sizes["B"],
        stabilizers=tuple(stabs),
        key=key,
    )


_MIN_GENS_CACHE: dict[tuple[int, frozenset[int]], int] = {}


def _min_gens(t: FiniteGroupTable, h: frozenset[int]) -> int:
    ck = (id(t), h)
    if ck not in _MIN_GENS_CACHE:
        _MIN_GENS_CACHE[ck] = min_generators(t, h)
    return _MIN_GENS_CACHE[ck]


def enumerate_subgroups(
    ta: FiniteGroupTable,
    tb: FiniteGroupTable,
    s: int,
    budget: int = DEFAULT_BUDGET,
    workers: Optional[int] = None,
    backend: Optional[str] = None,
) -> list[SubgroupCertificate]:
    """One certificate per index-``s`` subgroup of ``ta * tb``, in canonical key order."""
    keys = subgroup_keys(ta, tb, s, budget=budget, workers=workers, backend=backend)
    return [certificate_from_key(ta, tb, s, k) for k in keys]


def certificates_up_to(
    ta: FiniteGroupTable, tb: FiniteGroupTable, max_index: int, **kw
) -> Iterator[SubgroupCertificate]:
    for s in range(1, max_index + 1):
        yield from enumerate_subgroups(ta, tb, s, **kw)


def rank_gradient_estimate(ta: FiniteGroupTable, tb: FiniteGroupTable, max_index: int, **kw) -> Fraction:
    """Smallest ``(r(H) - 1)/[G:H]`` over all subgroups of index at most ``max_index``."""
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    return min(Fraction(c.min_rank - 1, c.degree) for c in certificates_up_to(ta, tb, max_index, **kw))


@dataclass(frozen=True)
class VolumeEstimate:
    lower: Fraction
    upper: Fraction


def volume_estimates(samples: Sequence[tuple[Fraction, int]]) -> VolumeEstimate:
    """Truncated lower/upper volumes: max and min of ``sigma/index`` over the sample."""
    if not samples:
        raise ValueError("empty sample")
    rates = [Fraction(sigma) / index for sigma, index in samples]
    return VolumeEstimate(lower=max(rates), upper=min(rates))


def floor_log(base: int, value: int) -> int:
    """Largest ``e`` with ``base**e <= value``, by integer powers only."""
    if base < 2 or value < 1:
        raise ValueError("need base >= 2 and value >= 1")
    e, p = 0, base
    while p <= value:
        e += 1
        p *= base
    return e


def certificate_hom_count(
    ta: FiniteGroupTable, tb: FiniteGroupTable, tc: FiniteGroupTable, cert: SubgroupCertificate
) -> int:
    """``|Hom(H, C)|`` from the Kurosh decomposition: product over factors times ``|C|^free_rank``."""
    total = tc.order ** cert.free_rank
    for side, h in cert.stabilizers:
        if len(h) > 1:
            total *= _hom_count_sub(ta if side == "A" else tb, h, tc)
    return total


_HOM_CACHE: dict[tuple[int, frozenset[int], int], int] = {}


def _hom_count_sub(t: FiniteGroupTable, h: frozenset[int], tc: FiniteGroupTable) -> int:
    ck = (id(t), h, id(tc))
    if ck not in _HOM_CACHE:
        _HOM_CACHE[ck] = hom_count(t, tc, h)
    return _HOM_CACHE[ck]


@dataclass(frozen=True)
class RateWitness:
    best_rate: Fraction
    witness_index: int
    hom_count: int


def vc_rate_witness(
    ta: FiniteGroupTable,
    tb: FiniteGroupTable,
    tc: FiniteGroupTable,
    max_index: int,
    all_indices: bool = False,
    **kw,
) -> RateWitness:
    """Largest certified ``(floor(log_|C| |Hom(H,C)|) - 1)/[G:H]`` among subgroups of index ``max_index``.

    Growth of ``|Hom(H, C)|`` is a statement about deep subgroups, so by
    default only the deepest enumerated level competes; ``all_indices=True``
    takes the maximum over every index up to ``max_index`` instead (ties go to
    the larger index).
    """
    if tc.order < 2:
        raise ValueError("target group must be nontrivial")
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    certs = (certificates_up_to(ta, tb, max_index, **kw) if all_indices
             else enumerate_subgroups(ta, tb, max_index, **kw))
    best: Optional[RateWitness] = None
    for cert in certs:
        homs = certificate_hom_count(ta, tb, tc, cert)
        rate = Fraction(floor_log(tc.order, homs) - 1, cert.degree)
        if best is None or rate > best.best_rate or (rate == best.best_rate and cert.degree > best.witness_index):
            best = RateWitness(rate, cert.degree, homs)
    if best is None:
        raise ValueError(f"no subgroups of index {max_index}")
    return best


def index_formula_free_rank(ta: FiniteGroupTable, tb: FiniteGroupTable, s: int) -> Fraction:
    """Free rank forced on a torsion-free index-``s`` subgroup: ``1 - s(1/|A| + 1/|B| - 1)``."""
    return 1 - s * (Fraction(1, ta.order) + Fraction(1, tb.order) - 1)
