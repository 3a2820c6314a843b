"""Pure-Python hot loops; same algorithms and results as the compiled ``_ckernels``."""
from __future__ import annotations

from typing import Sequence


def surface_hom_count(mul: Sequence[Sequence[int]], inv: Sequence[int], g: int) -> int:
    """Count 2g-tuples (a1, b1, ..., ag, bg) with [a1,b1]...[ag,bg] = 1, one tuple at a time."""
    if g == 0:
        return 1
    n = len(mul)
    comm = [mul[mul[a][b]][mul[inv[a]][inv[b]]] for a in range(n) for b in range(n)]
    npairs = n * n
    # odometer over g pair indices; prefix[i] = product of the first i commutators
    idx = [0] * g
    prefix = [0] * (g + 1)
    for i in range(g):
        prefix[i + 1] = mul[prefix[i]][comm[0]]
    count = 0
    last = g - 1
    while True:
        if prefix[g] == 0:
            count += 1
        pos = last
        while pos >= 0:
            idx[pos] += 1
            if idx[pos] < npairs:
                break
            idx[pos] = 0
            pos -= 1
        if pos < 0:
            return count
        for i in range(pos, g):
            prefix[i + 1] = mul[prefix[i]][comm[idx[i]]]


def _canonical(gens: Sequence[Sequence[int]], base: int, s: int):
    label = [-1] * s
    order = [base]
    label[base] = 0
    i = 0
    while i < len(order):
        x = order[i]
        for gp in gens:
            y = gp[x]
            if label[y] < 0:
                label[y] = len(order)
                order.append(y)
        i += 1
    if len(order) < s:
        return None
    return bytes(label[gp[x]] for gp in gens for x in order)


def pointed_keys(a_gens: Sequence[Sequence[int]], b_homs: Sequence[Sequence[Sequence[int]]], s: int) -> set[bytes]:
    """Canonical keys of every jointly transitive pointed action (A-images fixed, B-images varying).

    Two pointed actions get equal keys iff a basepoint-preserving relabeling
    carries one onto the other.
    """
    keys: set[bytes] = set()
    a_gens = [list(p) for p in a_gens]
    for b in b_homs:
        gens = a_gens + [list(p) for p in b]
        if _canonical(gens, 0, s) is None:
            continue
        for base in range(s):
            keys.add(_canonical(gens, base, s))
    return keys
