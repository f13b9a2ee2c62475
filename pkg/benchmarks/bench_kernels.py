"""Compiled versus pure-Python kernels on the same inputs.

Run:  python3 benchmarks/bench_kernels.py [--repeat 3]
Each row prints the best wall time of both backends and checks that their
outputs are identical.
"""

from __future__ import annotations

import argparse
import random
import time

from hamrel import kernels
from hamrel._purekernels import count_pathsets as pure_count
from hamrel._purekernels import refine_simple as pure_refine
from hamrel.constructions import fcg, petersen, wagner
from hamrel.enumeration import hd_chord_sets
from hamrel.graph import make_graph


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def masks(G):
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def refine_workload(n, limit=3000):
    """Initial equitable refinements of diametrical-chord graphs."""
    cases = []
    for i, chords in enumerate(hd_chord_sets(n)):
        if i == limit:
            break
        G = make_graph(n, [(j, (j + 1) % n) for j in range(n)] + list(chords))
        cases.append(masks(G))
    return cases


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.compiled is None:
        print("compiled extension not built; nothing to compare (backend=pure)")
        return
    comp = kernels.compiled
    rng = random.Random(7)
    print(f"{'case':34s} {'pure s':>9s} {'compiled s':>11s} {'speedup':>8s}")
    graphs = [("wagner m=12", wagner()), ("petersen m=15", petersen()), ("fcg(16,3) m=19", fcg(16, 3))]
    for m in (20, 22):
        n = 8
        edges = [(rng.randrange(i), i) for i in range(1, n)]
        edges += [tuple(rng.sample(range(n), 2)) for _ in range(m - len(edges))]
        graphs.append((f"random multigraph n=8 m={m}", make_graph(n, edges)))
    for name, G in graphs:
        e = list(G.edges)
        tp, a = best_of(lambda: pure_count(G.n, e), args.repeat)
        tc, b = best_of(lambda: comp.count_pathsets(G.n, e), args.repeat)
        assert list(a) == list(b), name
        label = "count_pathsets " + name
        print(f"{label:34s} {tp:9.4f} {tc:11.4f} {tp / tc:7.1f}x")
    for n in (20, 34):
        cases = refine_workload(n)
        run = lambda f: [f(adj, [list(range(n))], [0]) for adj in cases]  # noqa: E731
        tp, a = best_of(lambda: run(pure_refine), args.repeat)
        tc, b = best_of(lambda: run(comp.refine_simple), args.repeat)
        assert a == b
        label = f"refine_simple n={n} x{len(cases)}"
        print(f"{label:34s} {tp:9.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
