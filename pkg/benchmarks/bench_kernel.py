"""Compare the compiled and pure-Python orbit kernels.

Usage: python benchmarks/bench_kernel.py [--n N] [--q Q] [--repeat R]

Enumerates the right orbit of the largest single-hook verge (n,1), which
has q^(n-2) members, plus a batch of root operations, with both kernel
implementations, and reports wall times.
"""

import argparse
import time

from superverge import _kernel_py
from superverge.action import NilMatrix
from superverge.field import make_field, parse_field_name
from superverge.rootcomb import tri_positions

try:
    from superverge import _kernel_c
except ImportError:
    _kernel_c = None


def tables(F):
    mul = bytes(F.mul_table)
    sub = bytes(F.add_table[x * F.q + F.neg_table[y]]
                for x in range(F.q) for y in range(F.q))
    return mul, sub


def bench_orbit(kernel, n, F, repeat):
    mul, sub = tables(F)
    gens = [(i, j, F.p ** t) for (i, j) in tri_positions(n)
            for t in range(F.k)]
    seed = NilMatrix.of(n, F, [((n, 1), 1)]).to_vec()
    best = float("inf")
    size = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        members = kernel.orbit_closure(seed, n, F.q, "right",
                                       mul, sub, gens, 1 << 24)
        best = min(best, time.perf_counter() - t0)
        size = len(members)
    return best, size


def bench_ops(kernel, n, F, repeat):
    mul, sub = tables(F)
    vec = NilMatrix.of(n, F, [((n, 1), 1), ((n - 1, 1), 1)]).to_vec()
    positions = tri_positions(n)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        v = vec
        for _ in range(2000):
            for (i, j) in positions:
                v = kernel.right_op(v, n, i, j, 1, mul, sub, F.q)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=8)
    ap.add_argument("--q", default="3")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    F = parse_field_name(args.q)

    kernels = [("python", _kernel_py)]
    if _kernel_c is not None:
        kernels.append(("cython", _kernel_c))
    else:
        print("compiled kernel unavailable; benchmarking python only")

    results = {}
    for name, kernel in kernels:
        t_orbit, size = bench_orbit(kernel, args.n, F, args.repeat)
        t_ops = bench_ops(kernel, args.n, F, args.repeat)
        results[name] = (t_orbit, t_ops)
        print(f"{name:>7}: orbit({size} members) {t_orbit * 1e3:9.2f} ms"
              f"   root-ops {t_ops * 1e3:9.2f} ms")
    if len(results) == 2:
        po, pp = results["python"]
        co, cp = results["cython"]
        print(f"speedup: orbit {po / co:5.1f}x   root-ops {pp / cp:5.1f}x")


if __name__ == "__main__":
    main()
