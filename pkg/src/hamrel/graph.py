"""Immutable multigraph value type.

Vertices are ``0..n-1``.  Edges are stored as a sorted tuple of ``(u, v)``
pairs with ``u < v``; parallel edges repeat, loops are never stored.  The
position of an edge in that tuple is its :data:`EdgeRef`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

EdgeRef = int


class GraphError(ValueError):
    pass


@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    _adj: tuple[tuple[int, ...], ...] | None = field(
        default=None, init=False, repr=False, compare=False, hash=False
    )

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, edges={list(self.edges)})"

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists with multiplicity, one entry per incident edge."""
        if self._adj is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for u, v in self.edges:
                lists[u].append(v)
                lists[v].append(u)
            object.__setattr__(self, "_adj", tuple(tuple(a) for a in lists))
        return self._adj  # type: ignore[return-value]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def multiplicity(self) -> Counter:
        return Counter(self.edges)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def simple_support(self) -> "Multigraph":
        return Multigraph(self.n, tuple(sorted(set(self.edges))))

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return (u, v) in self.edge_set()

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def relabel(self, perm: Sequence[int]) -> "Multigraph":
        """Image of the graph under the vertex map ``v -> perm[v]``."""
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> "Multigraph":
        return make_graph(self.n, list(self.edges) + list(extra))


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Multigraph:
    if n < 1:
        raise GraphError(f"graph needs at least one vertex, got n={n}")
    out = []
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n - 1}]")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a loop")
        out.append(_norm(u, v))
    out.sort()
    return Multigraph(n, tuple(out))


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise GraphError(f"a simple cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Multigraph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complement(G: Multigraph) -> Multigraph:
    present = G.edge_set()
    return make_graph(
        G.n,
        [(i, j) for i in range(G.n) for j in range(i + 1, G.n) if (i, j) not in present],
    )


def _check_ref(G: Multigraph, e: EdgeRef) -> None:
    if not (0 <= e < G.m):
        raise GraphError(f"edge reference {e} invalid for a graph with {G.m} edges")


def delete_edge(G: Multigraph, e: EdgeRef) -> Multigraph:
    _check_ref(G, e)
    return Multigraph(G.n, G.edges[:e] + G.edges[e + 1:])


def contract_edge(G: Multigraph, e: EdgeRef) -> Multigraph:
    """Merge the endpoints of edge ``e``.

    The merged vertex keeps the smaller label and labels above the larger
    endpoint shift down by one.  Parallel copies of ``e`` would become loops
    and are dropped.
    """
    _check_ref(G, e)
    a, b = G.edges[e]

    def lab(x: int) -> int:
        if x == b:
            return a
        return x - 1 if x > b else x

    out = []
    for u, v in G.edges:
        if (u, v) == (a, b):
            continue
        out.append(_norm(lab(u), lab(v)))
    out.sort()
    return Multigraph(G.n - 1, tuple(out))


def components(G: Multigraph) -> list[list[int]]:
    seen = [False] * G.n
    comps = []
    adj = G.adj
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
                    comp.append(y)
        comps.append(sorted(comp))
    return comps


def is_connected(G: Multigraph) -> bool:
    if G.n == 1:
        return True
    seen = {0}
    stack = [0]
    adj = G.adj
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == G.n


def bridges(G: Multigraph) -> set[EdgeRef]:
    """Edge refs of all cut-edges; a parallel copy is never a bridge."""
    adj_e: list[list[tuple[int, int]]] = [[] for _ in range(G.n)]
    for i, (u, v) in enumerate(G.edges):
        adj_e[u].append((v, i))
        adj_e[v].append((u, i))
    disc = [-1] * G.n
    low = [0] * G.n
    out: set[int] = set()
    t = 0
    for root in range(G.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = t
        t += 1
        # iterative DFS; skip only the tree edge itself, not its parallels
        stack = [(root, -1, iter(adj_e[root]))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for y, ei in it:
                if ei == via:
                    continue
                if disc[y] == -1:
                    disc[y] = low[y] = t
                    t += 1
                    stack.append((y, ei, iter(adj_e[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                px = stack[-1][0]
                low[px] = min(low[px], low[x])
                if low[x] > disc[px]:
                    out.add(via)
    return out


def is_bridge(G: Multigraph, e: EdgeRef) -> bool:
    _check_ref(G, e)
    return e in bridges(G)


# --- graph6 -----------------------------------------------------------------


class Graph6Error(ValueError):
    pass


def encode_graph6(G: Multigraph) -> str:
    if not G.is_simple():
        raise GraphError("graph6 cannot represent parallel edges")
    n = G.n
    if n > 62:
        raise GraphError(f"only the short graph6 form (n <= 62) is supported, got n={n}")
    present = G.edge_set()
    bits = [1 if (i, j) in present else 0 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return "".join(chars)


def decode_graph6(text: str) -> Multigraph:
    s = text.strip("\n")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("empty graph6 string (byte offset 0)")
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 byte {ch!r} at byte offset {i}")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported (byte offset 0)")
    if n == 0:
        raise Graph6Error("graph6 string encodes an empty graph (byte offset 0)")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for n={n}, got {len(body)} "
            f"(byte offset {1 + min(len(body), need)})"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> (5 - k)) & 1 for k in range(6))
    edges = []
    k = 0
    for j in range(n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits:]):
        raise Graph6Error(f"nonzero padding bits (byte offset {len(s) - 1})")
    return make_graph(n, edges)


# --- edge-list text ---------------------------------------------------------


def format_edge_list(G: Multigraph) -> str:
    lines = [f"{G.n} {G.m}"] + [f"{u} {v}" for u, v in G.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Multigraph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphError("empty edge-list input")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge-list input: {exc}") from None
    if len(edges) != m:
        raise GraphError(f"edge-list header says m={m} but {len(edges)} edges follow")
    return make_graph(n, edges)


def read_graphs(text: str) -> list[Multigraph]:
    """Graphs from text: graph6 lines, or a single edge-list document."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphError("no graphs in input")
    if len(lines[0].split()) >= 2:
        return [parse_edge_list(text)]
    return [decode_graph6(ln) for ln in lines]
