"""Compare the compiled and pure-numpy ball-enumeration backends.

Usage: python3 benchmarks/bench_enumeration.py [--cap N] [--repeat R]

Times `count_ball` on a small corpus of finite and infinite groups under
both backends (selected via the ARTINACYL_KERNEL environment variable)
and verifies that the counts agree.
"""
import argparse
import os
import statistics
import time

from artinacyl.graphs import make_defining_graph
from artinacyl import kernel


def corpus():
    def g(vertices, edges):
        return make_defining_graph(list(vertices), [list(e) for e in edges])

    return [
        ("H3", g("abc", [("a", "b", 5), ("b", "c", 3), ("a", "c", 2)])),
        ("B4", g("abcd", [("a", "b", 4), ("b", "c", 3), ("c", "d", 3),
                          ("a", "c", 2), ("a", "d", 2), ("b", "d", 2)])),
        ("A5-ball", g("abcde", [("a", "b", 3), ("b", "c", 3), ("c", "d", 3),
                                ("d", "e", 3), ("a", "c", 2), ("a", "d", 2),
                                ("a", "e", 2), ("b", "d", 2), ("b", "e", 2),
                                ("c", "e", 2)])),
        ("affine-333", g("abc", [("a", "b", 3), ("b", "c", 3),
                                 ("a", "c", 3)])),
    ]


def run_backend(backend, graphs, cap, repeat):
    os.environ["ARTINACYL_KERNEL"] = backend
    results = {}
    for name, g in graphs:
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = kernel.count_ball(g, cap)
            times.append(time.perf_counter() - t0)
        results[name] = (out, min(times), statistics.median(times))
    return results


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cap", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    graphs = corpus()
    saved = os.environ.get("ARTINACYL_KERNEL")
    try:
        numba = run_backend("numba", graphs, args.cap, args.repeat)
        numpy = run_backend("numpy", graphs, args.cap, args.repeat)
    finally:
        if saved is None:
            os.environ.pop("ARTINACYL_KERNEL", None)
        else:
            os.environ["ARTINACYL_KERNEL"] = saved

    print(f"cap={args.cap}  repeat={args.repeat}  (times are best-of)")
    print(f"{'graph':<12}{'count':>10}{'sat':>5}{'numba s':>10}"
          f"{'numpy s':>10}{'speedup':>9}")
    for name, _ in graphs:
        (out_b, best_b, _), (out_n, best_n, _) = numba[name], numpy[name]
        assert out_b == out_n, f"backend mismatch on {name}: {out_b} {out_n}"
        size, sat = out_b
        print(f"{name:<12}{size:>10}{str(sat):>5}{best_b:>10.4f}"
              f"{best_n:>10.4f}{best_n / best_b:>8.1f}x")


if __name__ == "__main__":
    main()
