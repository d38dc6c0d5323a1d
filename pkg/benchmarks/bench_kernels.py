"""Time the compiled kernels against the pure-Python fallback on the same inputs.

    python benchmarks/bench_kernels.py [--pairs 200] [--repeat 3]
"""

import argparse
import time

from brinthompson import _kernels_py, random_element

try:
    from brinthompson import _kernels_c
except ImportError:
    _kernels_c = None


def workload(pairs: int):
    out = []
    for s in range(pairs):
        n = 2 + s % 2
        f = random_element(s, n, 5, None).triples()
        g = random_element(s + 50_000, n, 5, None).triples()
        out.append((f, g))
    return out


def run(impl, data):
    for f, g in data:
        fg = impl.compose_triples(f, g)
        red = impl.reduce_triples(fg)
        impl.equal_triples(fg, red)
        impl.intersect_blocks([t[1] for t in f], [t[0] for t in g])


def best_of(impl, data, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        run(impl, data)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--pairs", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    data = workload(args.pairs)
    blocks = sum(len(f) + len(g) for f, g in data)
    print(f"{args.pairs} pairs, {blocks} input blocks, best of {args.repeat}")
    py = best_of(_kernels_py, data, args.repeat)
    print(f"python  {py:8.3f} s")
    if _kernels_c is None:
        print("cython  not built")
        return
    cy = best_of(_kernels_c, data, args.repeat)
    print(f"cython  {cy:8.3f} s   speedup x{py / cy:.2f}")


if __name__ == "__main__":
    main()
