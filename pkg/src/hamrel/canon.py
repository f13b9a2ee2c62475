"""Canonical labeling by partition refinement and individualization.

The canonical code of a graph is the minimum, over all leaves of the search
tree, of (refinement traces along the path, adjacency encoding under the
leaf labeling).  Subtrees whose trace prefix is already worse than the best
leaf are cut, and children in the same orbit of the automorphisms found so
far (restricted to those fixing the current prefix) are skipped.  Neither
cut changes the minimum, so the code is exact: equal codes iff isomorphic.
"""

from __future__ import annotations

from itertools import permutations
from typing import Callable

from . import kernels
from .graph import GraphError, Multigraph


def _orbit_roots(autos: list[list[int]], n: int) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def _search(
    n: int,
    refine: Callable[[list[list[int]], list[int]], tuple[list[list[int]], list[int]]],
    encode: Callable[[list[int]], tuple],
) -> tuple[tuple, list[int]]:
    cells, trace = refine([list(range(n))], [0])
    best: list = [None, None]  # [(traces, encoding), order]
    autos: list[list[int]] = []

    def leaf(cells, tpath):
        order = [c[0] for c in cells]
        key = (tpath, encode(order))
        if best[0] is None or key < best[0]:
            best[0], best[1] = key, order
        elif key == best[0]:
            g = [0] * n
            for a, b in zip(order, best[1]):
                g[a] = b
            if any(g[x] != x for x in range(n)):
                autos.append(g)

    def dfs(cells, prefix, tpath):
        if best[0] is not None:
            head = best[0][0][: len(tpath)]
            if tpath > head:
                return
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells, tpath)
            return
        cell = sorted(cells[target])
        done: list[int] = []
        for v in cell:
            if done and autos:
                fixing = [g for g in autos if all(g[x] == x for x in prefix)]
                if fixing:
                    roots = _orbit_roots(fixing, n)
                    if any(roots[v] == roots[u] for u in done):
                        continue
            rest = [w for w in cells[target] if w != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            sub, tr = refine(split, [target])
            dfs(sub, prefix + [v], tpath + (tuple(tr),))
            done.append(v)

    dfs(cells, [], (tuple(trace),))
    return best[0], best[1]


# --- simple graphs -------------------------------------------------------------


def _masks(G: Multigraph) -> list[int]:
    adj = [0] * G.n
    for u, v in G.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return adj


def canonical_labeling(G: Multigraph) -> tuple[bytes, list[int]]:
    """Canonical code and the vertex order realizing it (position -> vertex)."""
    if not G.is_simple():
        raise GraphError("canonical_form expects a simple graph; use multigraph_code")
    n = G.n
    adj = _masks(G)

    def refine(cells, splitters):
        return kernels.refine_simple(adj, cells, splitters)

    def encode(order):
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            a = adj[v]
            while a:
                low = a & -a
                r |= 1 << pos[low.bit_length() - 1]
                a ^= low
            rows.append(r)
        return tuple(rows)

    (_, rows), order = _search(n, refine, encode)
    width = (n + 7) // 8
    code = n.to_bytes(2, "big") + b"".join(r.to_bytes(width, "big") for r in rows)
    return code, order


def canonical_form(G: Multigraph) -> bytes:
    return canonical_labeling(G)[0]


def canonical_graph(G: Multigraph) -> Multigraph:
    """The representative of G's isomorphism class with canonical labels."""
    _, order = canonical_labeling(G)
    perm = [0] * G.n
    for i, v in enumerate(order):
        perm[v] = i
    return G.relabel(perm)


def brute_force_code(G: Multigraph) -> tuple:
    """Minimum sorted edge list over all n! relabelings (small n only)."""
    best = None
    for perm in permutations(range(G.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in G.edges))
        if best is None or key < best:
            best = key
    return (G.n, best)


# --- weighted graphs (multigraphs, reduced kernels) -------------------------------------


def _weighted_code(n: int, weight: list[dict[int, int]]) -> bytes:
    def refine(cells, splitters):
        cells = [list(c) for c in cells]
        queue = [set(cells[i]) for i in splitters]
        trace: list = []
        qi = 0
        while qi < len(queue) and len(cells) < n:
            W = queue[qi]
            qi += 1
            out = []
            for c in cells:
                if len(c) == 1:
                    out.append(c)
                    continue
                cnt = [tuple(sorted(k for w, k in weight[v].items() if w in W)) for v in c]
                if len(set(cnt)) == 1:
                    out.append(c)
                    continue
                groups: dict = {}
                for v, k in zip(c, cnt):
                    groups.setdefault(k, []).append(v)
                trace.append(len(out))
                for k in sorted(groups):
                    trace.append(k)
                    trace.append(len(groups[k]))
                    out.append(groups[k])
                    queue.append(set(groups[k]))
            cells = out
        trace.append(len(cells))
        return cells, trace

    def encode(order):
        pos = {v: i for i, v in enumerate(order)}
        return tuple(
            tuple(sorted((pos[w], k) for w, k in weight[v].items())) for v in order
        )

    (_, rows), _ = _search(n, refine, encode)
    return repr((n, rows)).encode()


def multigraph_code(G: Multigraph) -> bytes:
    """Canonical code of a multigraph, parallel multiplicities included."""
    weight: list[dict[int, int]] = [dict() for _ in range(G.n)]
    for (u, v), k in G.multiplicity().items():
        weight[u][v] = k
        weight[v][u] = k
    return b"M" + _weighted_code(G.n, weight)


def kernel_code(K) -> bytes:
    """Canonical code of a reduced factoring kernel (edge polynomials as colors)."""
    verts = sorted(K.inc)
    idx = {v: i for i, v in enumerate(verts)}
    labels = sorted({(tuple(c), tuple(d)) for _, _, c, d in K.edges.values()})
    color = {lab: i + 1 for i, lab in enumerate(labels)}
    weight: list[dict[int, int]] = [dict() for _ in verts]
    for u, v, c, d in K.edges.values():
        k = color[(tuple(c), tuple(d))]
        weight[idx[u]][idx[v]] = k
        weight[idx[v]][idx[u]] = k
    return b"K" + repr(labels).encode() + _weighted_code(len(verts), weight)
