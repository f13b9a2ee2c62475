"""Non-isomorphic hamiltonian graphs built as a fixed cycle plus chords."""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Iterator

from .canon import canonical_form
from .graph import GraphError, Multigraph, encode_graph6, make_graph


class EnumerationError(ValueError):
    pass


def _cycle_edges(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


def non_cycle_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 2, n) if not (u == 0 and v == n - 1)]


def dedupe_isomorphic(graphs: Iterable[Multigraph]) -> list[Multigraph]:
    """Keep the first graph of each isomorphism class, in input order."""
    seen: set[bytes] = set()
    out = []
    for G in graphs:
        code = canonical_form(G)
        if code not in seen:
            seen.add(code)
            out.append(G)
    return out


def iter_cycle_plus_chords(n: int, c: int) -> Iterator[Multigraph]:
    """Every labeled graph C_n + c chords, with repeats up to isomorphism."""
    if n < 4:
        raise EnumerationError(f"need n >= 4, got n={n}")
    pairs = non_cycle_pairs(n)
    if not 0 <= c <= len(pairs):
        raise EnumerationError(f"c must lie in [0, {len(pairs)}] for n={n}, got c={c}")
    base = _cycle_edges(n)
    for chords in combinations(pairs, c):
        yield make_graph(n, base + list(chords))


def enumerate_hamiltonian(n: int, c: int) -> list[Multigraph]:
    """All hamiltonian graphs with n vertices and n+c edges, up to isomorphism.

    Every hamiltonian graph relabels to one that contains the cycle
    0,1,...,n-1, so cycle-plus-chords generation is complete.
    """
    return dedupe_isomorphic(iter_cycle_plus_chords(n, c))


def hd_chord_sets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Chord triples: the diametrical chord (0, n//2) plus two chords across it.

    Chords touching 0 or n//2 are left out, as are chords within one arc.
    """
    if n < 6:
        raise EnumerationError(f"need n >= 6, got n={n}")
    h = n // 2
    left = range(1, h)
    right = range(h + 1, n)
    cross = [(u, v) for u in left for v in right]
    for a, b in combinations(cross, 2):
        yield ((0, h), a, b)


def enumerate_hd(n: int) -> list[Multigraph]:
    base = _cycle_edges(n)
    return dedupe_isomorphic(make_graph(n, base + list(ch)) for ch in hd_chord_sets(n))


def write_graph6(graphs: Iterable[Multigraph], stream) -> int:
    k = 0
    for G in graphs:
        try:
            stream.write(encode_graph6(G) + "\n")
        except GraphError as exc:
            raise EnumerationError(str(exc)) from exc
        k += 1
    return k


def summary_json(kind: str, n: int, c: int | None, count: int, seconds: float) -> str:
    return json.dumps(
        {"family": kind, "n": n, "chords": c, "count": count, "seconds": round(seconds, 3)},
        sort_keys=True,
    )


def enumerate_graphs(n: int, m: int, connected: bool = True) -> list[Multigraph]:
    """All simple graphs with n vertices and m edges up to isomorphism (small n only).

    Grows one edge at a time from the empty graph and keeps one
    representative per canonical code at each size.
    """
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not 0 <= m <= len(pairs):
        raise EnumerationError(f"m must lie in [0, {len(pairs)}] for n={n}, got m={m}")
    level = [make_graph(n, [])]
    for _ in range(m):
        seen: dict[bytes, Multigraph] = {}
        for G in level:
            present = G.edge_set()
            for e in pairs:
                if e not in present:
                    H = make_graph(n, list(G.edges) + [e])
                    seen.setdefault(canonical_form(H), H)
        level = list(seen.values())
    if connected:
        from .graph import is_connected

        level = [G for G in level if is_connected(G)]
    return level
