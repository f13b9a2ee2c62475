"""Named graphs and closed-form families for hamiltonian reliability."""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations
from math import floor

from .graph import Multigraph, complement, complete_graph, cycle_graph, make_graph
from .hamiltonian import KIND_A, KIND_A_HAT, KIND_B


class ConstructionError(ValueError):
    pass


def _cycle(n: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % n) for i in range(n)]


# --- one chord ---------------------------------------------------------------------


def _check_one_chord(n: int, x1: int) -> None:
    if n < 4:
        raise ConstructionError(f"need n >= 4, got n={n}")
    if not 2 <= x1 <= n // 2:
        raise ConstructionError(f"x1 must lie in [2, {n // 2}] for n={n}, got x1={x1}")


def cycle_with_one_chord(n: int, x1: int) -> Multigraph:
    _check_one_chord(n, x1)
    return make_graph(n, _cycle(n) + [(0, x1)])


def tau_one_chord(n: int, x1: int) -> int:
    _check_one_chord(n, x1)
    return n + x1 * (n - x1)


# --- two chords --------------------------------------------------------------------


def _check_vector(v, n: int | None = None) -> tuple[int, int, int, int]:
    v = tuple(int(x) for x in v)
    if len(v) != 4 or any(x < 0 for x in v):
        raise ConstructionError(f"c-path vector needs four nonnegative entries, got {v}")
    if n is not None and sum(v) != n:
        raise ConstructionError(f"c-path vector {v} must sum to n={n}")
    return v


def graph_from_cpath_vector(v, kind: str = KIND_A) -> Multigraph:
    """C_n plus two chords cutting the cycle into arcs of lengths v.

    Kind A: chords (P0, P2) and (P1, P3), which cross.  Kind A-hat is kind A
    with one zero arc, so the chords share an endpoint.  Kind B: chords
    (P1, P2) and (P3, P0), each spanning one arc (the second and fourth).
    Here P0 = 0 and P_{i+1} = P_i + x_{i+1}.
    """
    v = _check_vector(v)
    n = sum(v)
    if n < 4:
        raise ConstructionError(f"vector {v} gives n={n}; need n >= 4")
    P = [0, v[0], v[0] + v[1], v[0] + v[1] + v[2]]
    zeros = v.count(0)
    if kind == KIND_A:
        if zeros:
            raise ConstructionError(f"type A needs positive entries, got {v}; use A-hat")
        chords = [(P[0], P[2]), (P[1], P[3])]
    elif kind == KIND_A_HAT:
        if zeros != 1:
            raise ConstructionError(f"type A-hat needs exactly one zero entry, got {v}")
        chords = [(P[0], P[2]), (P[1], P[3])]
    elif kind == KIND_B:
        if zeros:
            raise ConstructionError(f"type B needs positive entries, got {v}")
        chords = [(P[1], P[2]), (P[3], P[0])]
    else:
        raise ConstructionError(f"unknown kind {kind!r}; use 'A', 'A-hat' or 'B'")
    G = make_graph(n, _cycle(n) + chords)
    if not G.is_simple():
        raise ConstructionError(f"vector {v} of kind {kind} puts a chord on a cycle edge")
    return G


def _pair_sum(v) -> int:
    return sum(a * b for a, b in combinations(v, 2))


def _triple_sum(v) -> int:
    return sum(a * b * c for a, b, c in combinations(v, 3))


def coeffs_type_A(v) -> tuple[int, int]:
    """(N_{m-2}, tau) of the crossing-chord graph with arc vector v."""
    x1, x2, x3, x4 = v = _check_vector(v)
    n = sum(v)
    N = 1 + 2 * n + _pair_sum(v)
    tau = n + (x1 + x2) * (x3 + x4) + (x1 + x4) * (x2 + x3) + _triple_sum(v)
    return N, tau


def coeffs_type_B(v) -> tuple[int, int]:
    """(N_{m-2}, tau) of the non-crossing graph whose chords span x2 and x4.

    Relative to type A on the same vector, N drops by x1*x3 and tau by
    x1*x3*(x2 + x4 + 2).
    """
    x1, x2, x3, x4 = v = _check_vector(v)
    N, tau = coeffs_type_A(v)
    return N - x1 * x3, tau - x1 * x3 * (x2 + x4 + 2)


def optimal_cpath_vector(n: int) -> tuple[int, int, int, int]:
    if n < 4:
        raise ConstructionError(f"need n >= 4, got n={n}")
    k, a = divmod(n, 4)
    return [(k, k, k, k), (k + 1, k, k, k), (k + 1, k, k + 1, k), (k + 1, k + 1, k + 1, k)][a]


def sigma_move(v) -> tuple[int, int, int, int]:
    x1, x2, x3, x4 = _check_vector(v)
    return (x1, x2 + 1, x3 - 1, x4)


def omega_move(v) -> tuple[int, int, int, int]:
    x1, x2, x3, x4 = _check_vector(v)
    return (x1, x2 + 1, x3, x4 - 1)


def d_measure(v, n: int | None = None) -> int:
    v = tuple(v)
    k = (sum(v) if n is None else n) // 4
    return sum(abs(x - k) for x in v)


def cpath_vectors(n: int, minimum: int = 1) -> list[tuple[int, int, int, int]]:
    """All vectors with entries >= minimum summing to n, one per rotation class."""
    seen = set()
    out = []
    for x1 in range(minimum, n + 1):
        for x2 in range(minimum, n - x1 + 1):
            for x3 in range(minimum, n - x1 - x2 + 1):
                x4 = n - x1 - x2 - x3
                if x4 < minimum:
                    continue
                v = (x1, x2, x3, x4)
                r = min(v[i:] + v[:i] for i in range(4))
                if r not in seen:
                    seen.add(r)
                    out.append(r)
    return out


# --- fair cake cutting -------------------------------------------------------------


def fcg_positions(n: int, c: int) -> list[tuple[Fraction, int, int]]:
    """Per chord: exact position, and the chord's two cycle vertices."""
    if n % 2:
        raise ConstructionError(f"fair cake graphs need even n (diametrical chords), got n={n}")
    if c < 1 or 2 * c > n:
        raise ConstructionError(f"need 1 <= c <= n/2, got n={n}, c={c}")
    sep = Fraction(n, 2 * c)
    rows = []
    for i in range(1, c + 1):
        p = i * sep
        rows.append((p, floor(p) - 1, floor(p + Fraction(n, 2)) - 1))
    return rows


def fcg(n: int, c: int) -> Multigraph:
    """Cycle C_n plus c evenly spaced diametrical chords."""
    chords = [(u, v) for _, u, v in fcg_positions(n, c)]
    return make_graph(n, _cycle(n) + chords)


# --- named graphs ------------------------------------------------------------------


def wagner() -> Multigraph:
    return make_graph(8, _cycle(8) + [(i, i + 4) for i in range(4)])


def petersen() -> Multigraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return make_graph(10, outer + inner + spokes)


def complete_bipartite(a: int, b: int) -> Multigraph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


CATALOG = ("wagner", "petersen", "k4", "k33", "kN", "cN", "monma-base")


def named_graph(name: str) -> Multigraph:
    key = name.strip().lower()
    if key == "wagner":
        return wagner()
    if key == "petersen":
        return petersen()
    if key == "k33":
        return complete_bipartite(3, 3)
    if key == "monma-base":
        return complete_bipartite(2, 3)
    mt = re.fullmatch(r"([kc])\(?(\d+)\)?", key)
    if mt:
        k = int(mt.group(2))
        if mt.group(1) == "k" and k >= 1:
            return complete_graph(k)
        if mt.group(1) == "c" and k >= 3:
            return cycle_graph(k)
    raise ConstructionError(f"unknown graph {name!r}; catalog: {', '.join(CATALOG)}")


# --- subdivisions of the UMR base graphs -----------------------------------------------

# Base graph per excess m - n, edges listed in subdivision order A, B, C, ...
# Theta base: K_{2,3} as three 2-paths between hubs 0 and 1, one label per
# path.  K4: the 4-cycle 0-1-2-3 read as A, C, B, D (so A and B are
# opposite), then the diagonals E, F.  K_{3,3}: the 6-cycle 0-3-1-4-2-5 read
# as A, D, B, E, C, F (A, B, C alternate), then the matching G, H, I.
_UMR_BASES = {
    1: (5, [[(0, 2), (2, 1)], [(0, 3), (3, 1)], [(0, 4), (4, 1)]]),
    2: (4, [[(0, 1)], [(2, 3)], [(1, 2)], [(3, 0)], [(0, 2)], [(1, 3)]]),
    3: (
        6,
        [[(0, 3)], [(1, 4)], [(2, 5)], [(3, 1)], [(4, 2)], [(5, 0)], [(0, 4)], [(1, 5)], [(2, 3)]],
    ),
}


def umr_subdivision(n: int, m: int) -> Multigraph:
    """Round-robin subdivision of the base graph for m - n in {1, 2, 3}.

    Extra vertices go to labels A, B, C, ... cyclically; a label that owns a
    path gets its new vertices in the path's last segment.
    """
    excess = m - n
    if excess not in _UMR_BASES:
        raise ConstructionError(f"UMR subdivisions cover m - n in {{1, 2, 3}}, got (n, m)=({n}, {m})")
    n0, labels = _UMR_BASES[excess]
    if n < n0:
        raise ConstructionError(f"m = n+{excess} needs n >= {n0}, got n={n}")
    extra = [0] * len(labels)
    for i in range(n - n0):
        extra[i % len(labels)] += 1
    edges: list[tuple[int, int]] = []
    nxt = n0
    for path, k in zip(labels, extra):
        edges.extend(path[:-1])
        u, v = path[-1]
        for _ in range(k):
            edges.append((u, nxt))
            u = nxt
            nxt += 1
        edges.append((u, v))
    return make_graph(n, edges)


# --- complement families ---------------------------------------------------------------


def _disjoint_union(parts: list[tuple[int, list[tuple[int, int]]]]) -> tuple[int, list]:
    off = 0
    edges = []
    for k, es in parts:
        edges.extend((u + off, v + off) for u, v in es)
        off += k
    return off, edges


_P3 = (3, [(0, 1), (1, 2)])
_P4 = (4, [(0, 1), (1, 2), (2, 3)])
_C3 = (3, [(0, 1), (1, 2), (0, 2)])
_C5 = (5, [(i, (i + 1) % 5) for i in range(5)])
_K2 = (2, [(0, 1)])

_FAMILIES = {
    "g1": ([_P3, _P3], 6, 0),
    "g2": ([_P4, _K2], 6, 0),
    "g3": ([_C3, _P4], 7, 1),
    "g4": ([_C5, _K2], 7, 1),
}


def complement_family(name: str, n: int, removed: int | None = None) -> Multigraph:
    """Complements of small forests and cycles padded with a matching.

    g1 = co(2P3 + K2s), g2 = co(P4 + K2s) for even n >= 6; g3 = co(C3 + P4 +
    K2s), g4 = co(C5 + K2s) for odd n >= 7.  ``matching-complement`` is K_n
    minus ``removed`` independent edges (default n // 2).
    """
    key = name.lower()
    if key == "matching-complement":
        j = n // 2 if removed is None else removed
        if not 0 <= j <= n // 2:
            raise ConstructionError(f"K_{n} has at most {n // 2} independent edges, asked for {j}")
        return complement(make_graph(n, [(2 * i, 2 * i + 1) for i in range(j)]))
    if key not in _FAMILIES:
        raise ConstructionError(
            f"unknown family {name!r}; choose from g1, g2, g3, g4, matching-complement"
        )
    parts, n0, parity = _FAMILIES[key]
    if n < n0 or n % 2 != parity:
        want = "even" if parity == 0 else "odd"
        raise ConstructionError(f"{key} needs {want} n >= {n0}, got n={n}")
    k, edges = _disjoint_union(parts + [_K2] * ((n - n0) // 2))
    assert k == n
    return complement(make_graph(n, edges))
