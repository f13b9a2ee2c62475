"""Hamiltonian cycles, Ore's condition, the degree-2 obstruction and two-chord classes."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Multigraph, is_connected


class HamiltonianError(ValueError):
    pass


KIND_A = "A"
KIND_A_HAT = "A-hat"
KIND_B = "B"


@dataclass(frozen=True)
class ChordClass:
    kind: str
    vector: tuple[int, int, int, int]


def _simple_adj(G: Multigraph) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def find_hamiltonian_cycle(G: Multigraph) -> list[int] | None:
    """A hamiltonian cycle as a vertex sequence starting at 0, or None.

    Depth-first path extension from vertex 0, trying low-degree neighbors
    first.  A branch is cut when some unvisited vertex has fewer than two
    usable neighbors left, or when two unvisited vertices both need the
    current path end (degree-2 forcing).
    """
    n = G.n
    if n < 3:
        raise HamiltonianError(f"hamiltonian cycles need n >= 3, got n={n}")
    adj = _simple_adj(G)
    if not is_connected(G) or any(len(a) < 2 for a in adj):
        return None
    deg = [len(a) for a in adj]
    start = 0
    path = [start]
    visited = [False] * n
    visited[start] = True

    def feasible(end: int) -> bool:
        needs_end = 0
        for x in range(n):
            if visited[x]:
                continue
            usable = 0
            touches_end = False
            for y in adj[x]:
                if not visited[y] or y == start:
                    usable += 1
                elif y == end:
                    usable += 1
                    touches_end = True
            if usable < 2:
                return False
            if usable == 2 and touches_end:
                needs_end += 1
                if needs_end > 1:
                    return False
        return True

    def extend(end: int) -> bool:
        if len(path) == n:
            return start in adj[end]
        for w in sorted((w for w in adj[end] if not visited[w]), key=lambda w: (deg[w], w)):
            visited[w] = True
            path.append(w)
            if feasible(w) and extend(w):
                return True
            path.pop()
            visited[w] = False
        return False

    return list(path) if extend(start) else None


def is_hamiltonian(G: Multigraph) -> bool:
    return find_hamiltonian_cycle(G) is not None


def ore_condition(G: Multigraph) -> bool:
    """Every non-adjacent pair has degree sum at least n (simple support degrees)."""
    adj = _simple_adj(G)
    n = G.n
    for u in range(n):
        for v in range(u + 1, n):
            if v not in adj[u] and len(adj[u]) + len(adj[v]) < n:
                return False
    return True


def degree_obstruction(G: Multigraph) -> bool:
    """Some vertex of degree >= 3 has three or more neighbors of degree 2."""
    adj = _simple_adj(G)
    for v in range(G.n):
        if len(adj[v]) >= 3 and sum(1 for w in adj[v] if len(adj[w]) == 2) >= 3:
            return True
    return False


def _check_cycle(G: Multigraph, C: list[int]) -> list[set[int]]:
    adj = _simple_adj(G)
    if sorted(C) != list(range(G.n)):
        raise HamiltonianError("cycle must visit every vertex exactly once")
    for i, v in enumerate(C):
        if C[(i + 1) % len(C)] not in adj[v]:
            raise HamiltonianError(f"cycle step {v}-{C[(i + 1) % len(C)]} is not an edge")
    return adj


def _min_rotation(v, step: int = 1) -> tuple[int, int, int, int]:
    return min(tuple(v[i:] + v[:i]) for i in range(0, 4, step))


def normalize_vector(kind: str, v) -> tuple[int, int, int, int]:
    """Lexicographically least cyclic rotation.

    Type B vectors list the two chord-spanned arcs at positions 2 and 4, so
    only rotations by two keep their meaning.
    """
    v = list(v)
    return _min_rotation(v, 2 if kind == KIND_B else 1)


def classify_two_chord(G: Multigraph, C: list[int]) -> ChordClass:
    if not G.is_simple():
        raise HamiltonianError("classify_two_chord expects a simple graph")
    n = G.n
    if G.m != n + 2:
        raise HamiltonianError(f"need m = n + 2 = {n + 2}, got m={G.m}")
    _check_cycle(G, C)
    pos = {v: i for i, v in enumerate(C)}
    ring = {frozenset((C[i], C[(i + 1) % n])) for i in range(n)}
    chords = [tuple(sorted((pos[u], pos[v]))) for u, v in G.edges if frozenset((u, v)) not in ring]
    (a1, b1), (a2, b2) = chords
    shared = {a1, b1} & {a2, b2}
    if shared:
        s = shared.pop()
        t = sorted({a1, b1, a2, b2} - {s}, key=lambda x: (x - s) % n)
        # cyclic order s, t[0], t[1]: gaps t[1]->s, 0, s->t[0], t[0]->t[1]
        vec = ((s - t[1]) % n, 0, (t[0] - s) % n, (t[1] - t[0]) % n)
        return ChordClass(KIND_A_HAT, normalize_vector(KIND_A_HAT, vec))
    P = sorted((a1, b1, a2, b2))
    gaps = [P[1] - P[0], P[2] - P[1], P[3] - P[2], n - P[3] + P[0]]
    crossing = (a1 < a2 < b1 < b2) or (a2 < a1 < b2 < b1)
    if crossing:
        return ChordClass(KIND_A, normalize_vector(KIND_A, gaps))
    if {(P[0], P[1]), (P[2], P[3])} == {(a1, b1), (a2, b2)}:
        # chords span gaps 1 and 3 of this listing; shift them to 2 and 4
        gaps = gaps[1:] + gaps[:1]
    return ChordClass(KIND_B, normalize_vector(KIND_B, gaps))
