"""Compare the compiled and pure-Python oracle kernels.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from gogeuler.oracle import kernels
from gogeuler.oracle.groups import build_group
from gogeuler.oracle.subgroups import aset_representatives, homs_into_symmetric


def surface_case(name, genus):
    t = build_group(name)
    return f"surface_hom_count {name} g={genus}", lambda b: kernels.surface_hom_count(t.mul, t.inv, genus, backend=b)


def keys_case(a, b, s):
    ta, tb = build_group(a), build_group(b)
    reps, homs = aset_representatives(ta, s), homs_into_symmetric(tb, s)

    def go(backend):
        keys = set()
        for r in reps:
            keys |= kernels.pointed_keys(list(r), homs, s, backend=backend)
        return len(keys)
    return f"pointed_keys {a}*{b} s={s}", go


CASES = [
    surface_case("sym3", 2),
    surface_case("dihedral6", 2),
    surface_case("sym4", 2),
    keys_case("cyclic2", "cyclic3", 8),
    keys_case("cyclic3", "cyclic3", 9),
    keys_case("klein4", "cyclic3", 6),
]


def best_of(fn, backend, repeat):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(backend)
        times.append(time.perf_counter() - start)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)}")
    print(f"{'case':40s} {'python s':>10s} {'cython s':>10s} {'speedup':>8s}")
    for label, fn in CASES:
        t_py, r_py = best_of(fn, "python", args.repeat)
        if "cython" in backends:
            t_c, r_c = best_of(fn, "cython", args.repeat)
            if r_c != r_py:
                raise SystemExit(f"{label}: backends disagree ({r_py} vs {r_c})")
            print(f"{label:40s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:7.1f}x")
        else:
            print(f"{label:40s} {t_py:10.4f} {'n/a':>10s}")


if __name__ == "__main__":
    main()
