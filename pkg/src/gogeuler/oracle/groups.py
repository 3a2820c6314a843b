"""Concrete finite groups as multiplication tables, and brute-force facts about them."""
from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

Perm = tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """``p o q``: apply ``q`` first."""
    return tuple(p[i] for i in q)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def cycle_perm(n: int, *cycles: Sequence[int]) -> Perm:
    img = list(range(n))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            img[a] = b
    return tuple(img)


class GroupTableError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroupTable:
    """Multiplication table with the identity at index 0; ``mul[a][b]`` is ``a*b``."""

    mul: tuple[tuple[int, ...], ...]
    name: str = ""

    def __post_init__(self) -> None:
        mul = tuple(tuple(int(x) for x in row) for row in self.mul)
        object.__setattr__(self, "mul", mul)
        n = len(mul)
        if n == 0 or any(len(row) != n for row in mul):
            raise GroupTableError("table must be square and nonempty")
        rng = range(n)
        if any(x not in rng for row in mul for x in row):
            raise GroupTableError("table entry out of range")
        if any(mul[0][a] != a or mul[a][0] != a for a in rng):
            raise GroupTableError("index 0 is not a two-sided identity")
        for a in rng:
            if sorted(mul[a]) != list(rng):
                raise GroupTableError(f"row {a} is not a permutation: inverses fail")
            if sorted(mul[b][a] for b in rng) != list(rng):
                raise GroupTableError(f"column {a} is not a permutation: inverses fail")
        for a in rng:
            ra = mul[a]
            for b in rng:
                rab = mul[ra[b]]
                rb = mul[b]
                for c in rng:
                    if rab[c] != ra[rb[c]]:
                        raise GroupTableError(f"associativity fails at ({a}, {b}, {c})")

    @property
    def order(self) -> int:
        return len(self.mul)

    @cached_property
    def inv(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.mul)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            k, x = 1, a
            while x != 0:
                x = self.mul[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A smallest generating set, lexicographically first among those of its size."""
        return minimal_generating_subset(self, range(self.order))

    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(self.order) for b in range(a))

    def __repr__(self) -> str:
        return f"FiniteGroupTable({self.name or '?'}, order={self.order})"


def table_from_perms(gens: Sequence[Perm], name: str = "") -> FiniteGroupTable:
    """Close ``gens`` under composition and tabulate, identity first, elements in BFS order."""
    degree = len(gens[0]) if gens else 1
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    i = 0
    while i < len(elems):
        for g in gens:
            y = compose(elems[i], g)
            if y not in index:
                index[y] = len(elems)
                elems.append(y)
        i += 1
    mul = tuple(tuple(index[compose(a, b)] for b in elems) for a in elems)
    return FiniteGroupTable(mul, name)


def _quaternion_perms() -> list[Perm]:
    # left-regular action on the eight units; unit u*s encoded as index 4*(s<0) + u, u in 1,i,j,k
    table = {
        (0, 0): (0, 1), (0, 1): (1, 1), (0, 2): (2, 1), (0, 3): (3, 1),
        (1, 0): (1, 1), (1, 1): (0, -1), (1, 2): (3, 1), (1, 3): (2, -1),
        (2, 0): (2, 1), (2, 1): (3, -1), (2, 2): (0, -1), (2, 3): (1, 1),
        (3, 0): (3, 1), (3, 1): (2, 1), (3, 2): (1, -1), (3, 3): (0, -1),
    }

    def left(u: int) -> Perm:
        img = []
        for x in range(8):
            xs, xu = (-1 if x >= 4 else 1), x % 4
            pu, ps = table[(u, xu)]
            sign = ps * xs
            img.append(pu + (4 if sign < 0 else 0))
        return tuple(img)

    return [left(1), left(2)]


CATALOG_FIXED = ("klein4", "sym3", "sym4", "alt4", "quaternion8")


def catalog_names() -> list[str]:
    names = [f"cyclic{n}" for n in range(1, 13)]
    names += [f"dihedral{n}" for n in range(2, 7)]
    names += list(CATALOG_FIXED)
    return names


def catalog_perms(name: str) -> list[Perm]:
    m = re.fullmatch(r"cyclic(\d+)", name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= 12:
            raise KeyError(name)
        return [cycle_perm(n, list(range(n)))] if n > 1 else []
    m = re.fullmatch(r"dihedral(\d+)", name)
    if m:
        n = int(m.group(1))
        if not 2 <= n <= 6:
            raise KeyError(name)
        if n == 2:
            return catalog_perms("klein4")
        rot = cycle_perm(n, list(range(n)))
        refl = tuple((-i) % n for i in range(n))
        return [rot, refl]
    if name == "klein4":
        return [cycle_perm(4, [0, 1], [2, 3]), cycle_perm(4, [0, 2], [1, 3])]
    if name == "sym3":
        return [cycle_perm(3, [0, 1]), cycle_perm(3, [0, 1, 2])]
    if name == "sym4":
        return [cycle_perm(4, [0, 1]), cycle_perm(4, [0, 1, 2, 3])]
    if name == "alt4":
        return [cycle_perm(4, [0, 1, 2]), cycle_perm(4, [1, 2, 3])]
    if name == "quaternion8":
        return _quaternion_perms()
    raise KeyError(name)


_BUILT: dict[str, FiniteGroupTable] = {}


def build_group(name: str) -> FiniteGroupTable:
    """Catalog group by name: cyclic1..12, dihedral2..6 (order 2n), klein4, sym3, sym4, alt4, quaternion8."""
    t = _BUILT.get(name)
    if t is None:
        try:
            gens = catalog_perms(name)
        except KeyError:
            raise KeyError(f"unknown catalog group {name!r}") from None
        t = table_from_perms(gens, name)
        _BUILT[name] = t
    return t


def catalog_order(name: str) -> int:
    return build_group(name).order


def closure(t: FiniteGroupTable, gens: Iterable[int]) -> frozenset[int]:
    gens = list(gens)
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            row = t.mul[x]
            for g in gens:
                y = row[g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def minimal_generating_subset(t: FiniteGroupTable, elems: Iterable[int]) -> tuple[int, ...]:
    """Smallest subset of the subgroup ``elems`` generating all of it (exhaustive by size)."""
    target = frozenset(elems)
    cands = sorted(target - {0})
    for k in range(len(cands) + 1):
        for sub in itertools.combinations(cands, k):
            if closure(t, sub) == target:
                return sub
    raise GroupTableError("elements do not form a subgroup")


def min_generators(t: FiniteGroupTable, elems: Optional[Iterable[int]] = None) -> int:
    """Size of a smallest generating set of ``t`` (or of its subgroup ``elems``)."""
    if elems is None:
        return len(t.generators)
    return len(minimal_generating_subset(t, elems))


def conjugacy_classes(t: FiniteGroupTable) -> list[frozenset[int]]:
    m, inv = t.mul, t.inv
    left = set(range(t.order))
    classes = []
    while left:
        x = min(left)
        cls = frozenset(m[m[g][x]][inv[g]] for g in range(t.order))
        classes.append(cls)
        left -= cls
    return classes


def conjugacy_class_count(t: FiniteGroupTable) -> int:
    return len(conjugacy_classes(t))


def commutator_subgroup(t: FiniteGroupTable) -> frozenset[int]:
    m, inv = t.mul, t.inv
    comms = {m[m[a][b]][m[inv[a]][inv[b]]] for a in range(t.order) for b in range(t.order)}
    return closure(t, comms)


@dataclass(frozen=True)
class IrrepDimensions:
    dims: tuple[int, ...]

    def __iter__(self):
        return iter(self.dims)


class AmbiguousCharacterData(ValueError):
    pass


def irrep_dimensions(t: FiniteGroupTable) -> IrrepDimensions:
    """Degrees of the complex irreducible representations, recovered by constrained search.

    Uses only the class count k, the group order and the number of linear
    characters ``|G/[G,G]|``; raises if those do not pin the answer down.
    """
    n = t.order
    k = conjugacy_class_count(t)
    linear = n // len(commutator_subgroup(t))
    rest, slots = n - linear, k - linear
    top = math.isqrt(n)
    solutions = []

    def search(remaining: int, slots_left: int, lo: int, acc: list[int]) -> None:
        if slots_left == 0:
            if remaining == 0:
                solutions.append(tuple(acc))
            return
        for d in range(lo, top + 1):
            if d * d * slots_left > remaining:
                break
            acc.append(d)
            search(remaining - d * d, slots_left - 1, d, acc)
            acc.pop()

    if slots >= 0:
        search(rest, slots, 2, [])
    if len(solutions) != 1:
        raise AmbiguousCharacterData(
            f"ambiguous character data for {t.name or 'group'}: {len(solutions)} candidate degree lists")
    return IrrepDimensions((1,) * linear + solutions[0])


def all_subgroups(t: FiniteGroupTable) -> list[frozenset[int]]:
    """Every subgroup, by joining cyclic subgroups until nothing new appears."""
    subs = {closure(t, [a]) for a in range(t.order)}
    frontier = set(subs)
    while frontier:
        new = set()
        for h in frontier:
            for k in list(subs):
                j = closure(t, h | k)
                if j not in subs and j not in new:
                    new.add(j)
        subs |= new
        frontier = new
    return sorted(subs, key=lambda h: (len(h), sorted(h)))


def subgroup_class_reps(t: FiniteGroupTable) -> list[frozenset[int]]:
    """One subgroup per conjugacy class, ordered by size then elements."""
    m, inv = t.mul, t.inv
    reps, seen = [], set()
    for h in all_subgroups(t):
        if h in seen:
            continue
        for g in range(t.order):
            seen.add(frozenset(m[m[g][x]][inv[g]] for x in h))
        reps.append(h)
    return reps


def extend_hom(
    t: FiniteGroupTable,
    gens: Sequence[int],
    images: Sequence,
    comp: Callable,
    ident,
) -> Optional[dict[int, object]]:
    """Extend generator images to a homomorphism on the subgroup generated by ``gens``.

    ``comp(x, y)`` multiplies in the target.  Returns element -> image, or
    ``None`` when the assignment respects no homomorphism.
    """
    img = {0: ident}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            ix = img[x]
            row = t.mul[x]
            for g, ig in zip(gens, images):
                y = row[g]
                iy = comp(ix, ig)
                prev = img.get(y)
                if prev is None:
                    img[y] = iy
                    nxt.append(y)
                elif prev != iy:
                    return None
        frontier = nxt
    return img


def hom_count(t: FiniteGroupTable, target: FiniteGroupTable, elems: Optional[Iterable[int]] = None) -> int:
    """Number of homomorphisms from ``t`` (or its subgroup ``elems``) into ``target``, exhaustively."""
    gens = t.generators if elems is None else minimal_generating_subset(t, elems)
    tm = target.mul
    orders = t.element_orders
    pools = [[c for c in range(target.order) if orders[g] % target.element_orders[c] == 0] for g in gens]
    count = 0
    for images in itertools.product(*pools):
        if extend_hom(t, gens, images, lambda x, y: tm[x][y], 0) is not None:
            count += 1
    return count


def perms_with_cycle_lengths_dividing(s: int, k: int) -> list[Perm]:
    """All permutations of ``range(s)`` whose order divides ``k``, in a fixed order."""
    out: list[Perm] = []
    img = [-1] * s
    lengths = [d for d in range(1, s + 1) if k % d == 0]

    def place(free: list[int]) -> None:
        if not free:
            out.append(tuple(img))
            return
        first, rest = free[0], free[1:]
        for length in lengths:
            if length - 1 > len(rest):
                break
            for others in itertools.permutations(rest, length - 1):
                cyc = (first,) + others
                for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                    img[a] = b
                place([x for x in rest if x not in others])
        img[first] = -1

    place(list(range(s)))
    return out
