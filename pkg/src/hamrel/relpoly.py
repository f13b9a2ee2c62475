"""Exact all-terminal reliability polynomials.

A reliability polynomial is stored as its pathset-count vector ``N`` where
``N[i]`` is the number of connected spanning edge subsets with ``i`` edges,
so that ``Rel(G, p) = sum(N[i] * p**i * (1-p)**(m-i))``.  Internally the
vector is handled as an integer polynomial in a formal variable ``x`` (one
factor per operational edge); products of vectors are then plain
convolutions, which is what makes block decompositions and bundle
contractions cheap.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable, Sequence

from . import kernels, sturm
from .graph import Multigraph, is_connected

BRUTEFORCE_MAX_EDGES = 24
DEFAULT_MEMO_LIMIT = 100_000  # entries of the per-call cache used by memo="auto"; 0 disables


class ReliabilityError(ValueError):
    pass


@dataclass(frozen=True)
class RelPoly:
    m: int
    N: tuple[int, ...]

    def __post_init__(self):
        if len(self.N) != self.m + 1:
            raise ReliabilityError(f"N must have m+1={self.m + 1} entries, got {len(self.N)}")

    def to_json(self) -> str:
        return json.dumps({"m": self.m, "N": [str(c) for c in self.N]})

    @classmethod
    def from_json(cls, text: str) -> "RelPoly":
        obj = json.loads(text)
        return cls(int(obj["m"]), tuple(int(c) for c in obj["N"]))

    def __str__(self) -> str:
        return f"RelPoly(m={self.m}, N={list(self.N)})"


# --- integer polynomial helpers (ascending coefficients) ----------------------


def _mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _add_into(acc: list[int], b: Sequence[int], shift: int = 0) -> None:
    need = len(b) + shift
    if len(acc) < need:
        acc.extend([0] * (need - len(acc)))
    for j, y in enumerate(b):
        acc[j + shift] += y


def _bundle(k: int) -> list[int]:
    """Subsets of a k-edge bundle that keep its endpoints joined: (1+x)^k - 1."""
    row = [comb(k, i) for i in range(k + 1)]
    row[0] = 0
    return row


def _padded(v: Sequence[int], length: int) -> tuple[int, ...]:
    v = list(v)
    while len(v) > length and v[-1] == 0:
        v.pop()
    if len(v) > length:
        raise ReliabilityError("internal degree overflow")
    return tuple(v) + (0,) * (length - len(v))


# --- closed forms for the shortcut families ---------------------------------------


def multitree_poly(bundles: Sequence[int]) -> list[int]:
    """Tree skeleton whose edges are bundles of the given sizes."""
    out = [1]
    for k in bundles:
        out = _mul(out, _bundle(k))
    return out


def multicycle_poly(bundles: Sequence[int]) -> list[int]:
    """Cycle skeleton of bundles: connected iff at most one bundle fails."""
    parts = [_bundle(k) for k in bundles]
    total = multitree_poly(bundles)
    for j in range(len(parts)):
        _add_into(total, multitree_poly([k for i, k in enumerate(bundles) if i != j]))
    return total


def glued_cycles_poly(first: Sequence[int], second: Sequence[int]) -> list[int]:
    """Two bundle cycles sharing one vertex fail independently."""
    return _mul(multicycle_poly(first), multicycle_poly(second))


# --- generalized-edge kernel ----------------------------------------------------------
#
# A kernel edge stands for a subgraph hanging between two kernel vertices.  It
# carries two polynomials in x (x marks an operational original edge):
#   c: its inner vertices are attached and it joins its two ends;
#   d: its inner vertices are attached but it does not join its ends.
# A bundle of k parallel edges has c = (1+x)^k - 1, d = 1.  Series and
# parallel compositions, pendant and loop removal, and factoring
#   Rel(K) = c_e Rel(K/e) + d_e Rel(K-e)
# are exact and keep every original edge accounted for, so the result is the
# pathset vector of the input graph in its own basis.


def _series(c1, d1, c2, d2):
    d = _mul(c1, d2)
    _add_into(d, _mul(d1, c2))
    return _mul(c1, c2), d


def _parallel(c1, d1, c2, d2):
    c = _mul(c1, c2)
    _add_into(c, _mul(c1, d2))
    _add_into(c, _mul(d1, c2))
    return c, _mul(d1, d2)


class _Kernel:
    __slots__ = ("inc", "edges", "next_id")

    def __init__(self, inc, edges, next_id):
        self.inc: dict[int, set[int]] = inc
        self.edges: dict[int, tuple[int, int, list[int], list[int]]] = edges
        self.next_id = next_id

    @classmethod
    def from_graph(cls, G: Multigraph) -> "_Kernel":
        inc: dict[int, set[int]] = {v: set() for v in range(G.n)}
        edges = {}
        for i, ((u, v), k) in enumerate(sorted(G.multiplicity().items())):
            edges[i] = (u, v, _bundle(k), [1])
            inc[u].add(i)
            inc[v].add(i)
        return cls(inc, edges, len(edges))

    def copy(self) -> "_Kernel":
        return _Kernel({v: set(s) for v, s in self.inc.items()}, dict(self.edges), self.next_id)

    def add(self, u: int, v: int, c, d) -> int:
        i = self.next_id
        self.next_id += 1
        self.edges[i] = (u, v, c, d)
        self.inc[u].add(i)
        self.inc[v].add(i)
        return i

    def remove(self, i: int):
        u, v, c, d = self.edges.pop(i)
        self.inc[u].discard(i)
        self.inc[v].discard(i)
        return u, v, c, d

    def other(self, i: int, x: int) -> int:
        u, v = self.edges[i][0], self.edges[i][1]
        return v if u == x else u

    def connected(self) -> bool:
        start = next(iter(self.inc))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for i in self.inc[x]:
                y = self.other(i, x)
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == len(self.inc)

    def reduce(self) -> list[int] | None:
        """Apply loop, parallel, pendant and series rules to a fixpoint.

        Returns the polynomial factor pulled out, or None when some vertex
        was left isolated (the graph is disconnected).
        """
        factor = [1]
        work = sorted(self.inc)
        while work:
            x = work.pop()
            if x not in self.inc:
                continue
            inc = self.inc[x]
            # loops and parallels at x
            seen: dict[int, int] = {}
            for i in sorted(inc):
                if i not in self.edges:
                    continue
                u, v, c, d = self.edges[i]
                if u == v:
                    self.remove(i)
                    cd = list(c)
                    _add_into(cd, d)
                    factor = _mul(factor, cd)
                    continue
                y = v if u == x else u
                j = seen.get(y)
                if j is None:
                    seen[y] = i
                    continue
                _, _, c2, d2 = self.remove(j)
                self.remove(i)
                c, d = _parallel(c2, d2, c, d)
                seen[y] = self.add(x, y, c, d)
                work.append(y)
            deg = len(inc)
            if len(self.inc) == 1:
                continue
            if deg == 0:
                return None
            if deg == 1:
                (i,) = inc
                u, v, c, d = self.remove(i)
                y = v if u == x else u
                del self.inc[x]
                factor = _mul(factor, c)
                work.append(y)
            elif deg == 2:
                i, j = sorted(inc)
                u1, v1, c1, d1 = self.remove(i)
                u2, v2, c2, d2 = self.remove(j)
                a = v1 if u1 == x else u1
                b = v2 if u2 == x else u2
                del self.inc[x]
                c, d = _series(c1, d1, c2, d2)
                self.add(a, b, c, d)
                work.append(a)
                work.append(b)
        return factor


# --- pivot policies -----------------------------------------------------------------


def pivot_hub(K: _Kernel) -> int:
    """Kernel edge whose endpoints have the largest degrees."""
    deg = {v: len(s) for v, s in K.inc.items()}

    def key(i):
        u, v = K.edges[i][0], K.edges[i][1]
        return (-min(deg[u], deg[v]), -(deg[u] + deg[v]), min(u, v), max(u, v), i)

    return min(K.edges, key=key)


def pivot_shortest_cycle(K: _Kernel) -> int:
    """An edge on a shortest cycle of the kernel."""
    best = None
    for s in sorted(K.inc):
        dist = {s: 0}
        via = {s: -1}
        queue = [s]
        for x in queue:
            for i in sorted(K.inc[x]):
                if i == via[x]:
                    continue
                y = K.other(i, x)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    via[y] = i
                    queue.append(y)
                else:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < best[0]:
                        best = (length, i)
    assert best is not None
    return best[1]


def pivot_first(K: _Kernel) -> int:
    return min(K.edges, key=lambda i: (min(K.edges[i][:2]), max(K.edges[i][:2]), i))


PIVOTS: dict[str, Callable[[_Kernel], int]] = {
    "hub": pivot_hub,
    "shortest-cycle": pivot_shortest_cycle,
    "first": pivot_first,
}


# --- factoring ----------------------------------------------------------------------


class MemoTable:
    """Bounded cache from canonical kernel codes to pathset polynomials.

    Inserting an existing key is a no-op, so concurrent duplicate inserts of
    equal values are harmless.
    """

    def __init__(self, limit: int = 100_000):
        self.limit = limit
        self.data: dict[bytes, tuple[int, ...]] = {}
        self.hits = 0

    def get(self, key: bytes):
        val = self.data.get(key)
        if val is not None:
            self.hits += 1
        return val

    def put(self, key: bytes, val) -> None:
        if key in self.data or len(self.data) >= self.limit:
            return
        self.data[key] = tuple(val)


class _Factoring:
    def __init__(self, pivot: str, memo: MemoTable | None):
        try:
            self.pick = PIVOTS[pivot]
        except KeyError:
            raise ReliabilityError(f"unknown pivot policy {pivot!r}; choose from {sorted(PIVOTS)}") from None
        self.memo = memo
        self.steps = 0

    def run(self, K: _Kernel) -> list[int]:
        factor = K.reduce()
        if factor is None:
            return [0]
        if len(K.inc) == 1:
            return factor
        if not K.connected():
            return [0]
        key = None
        if self.memo is not None:
            from .canon import kernel_code

            key = kernel_code(K)
            hit = self.memo.get(key)
            if hit is not None:
                return _mul(factor, hit)
        self.steps += 1
        e = self.pick(K)
        deleted = K.copy()
        u, v, c, d = deleted.remove(e)
        contracted = deleted.copy()
        for i in list(contracted.inc[v]):
            a, b, ci, di = contracted.remove(i)
            contracted.add(u if a == v else a, u if b == v else b, ci, di)
        del contracted.inc[v]
        out = _mul(c, self.run(contracted))
        _add_into(out, _mul(d, self.run(deleted)))
        if key is not None:
            self.memo.put(key, out)
        return _mul(factor, out)


def rel_factoring(G: Multigraph, pivot: str = "hub", memo: MemoTable | str | None = "auto") -> RelPoly:
    """Reliability polynomial by the factoring theorem on a reduced kernel.

    Bundles, degree-2 chains, pendant subgraphs and loops created by
    contraction are absorbed exactly (trees, cycles of bundles, glued cycles
    and multi-path blocks all reduce to a single vertex without branching);
    any remaining kernel is factored on a pivot edge chosen by ``pivot``.
    ``memo`` caches kernels by canonical code and may be shared across
    calls.  ``"auto"`` uses a fresh cache only for dense graphs (m > 2n),
    where repeated kernels are common; on sparse graphs hashing costs more
    than it saves.
    """
    if not is_connected(G):
        return RelPoly(G.m, (0,) * (G.m + 1))
    if memo == "auto":
        memo = MemoTable(DEFAULT_MEMO_LIMIT) if G.m > 2 * G.n and DEFAULT_MEMO_LIMIT > 0 else None
    run = _Factoring(pivot, memo)
    return RelPoly(G.m, _padded(run.run(_Kernel.from_graph(G)), G.m + 1))


def factoring_steps(G: Multigraph, pivot: str = "hub") -> int:
    """Number of pivot expansions rel_factoring performs on G."""
    if not is_connected(G):
        return 0
    run = _Factoring(pivot, None)
    run.run(_Kernel.from_graph(G))
    return run.steps


def rel_bruteforce(G: Multigraph) -> RelPoly:
    """Count connected spanning edge subsets directly, all ``2**m`` of them."""
    if G.m > BRUTEFORCE_MAX_EDGES:
        raise ReliabilityError(
            f"brute force is limited to m <= {BRUTEFORCE_MAX_EDGES} edges, got m={G.m}"
        )
    return RelPoly(G.m, tuple(kernels.count_pathsets(G.n, list(G.edges))))


def rel_vertex_subsets(G: Multigraph) -> RelPoly:
    """Pathset vector by inclusion-exclusion over vertex subsets.

    For a vertex set S let A(S) = (1+x)^e(S) count all edge subsets inside S.
    Splitting off the component that holds the lowest vertex of S gives
    A(S) = sum over T (lowest vertex in T, T within S) of C(T) * A(S - T),
    which is solved for the connected counts C.  Cost is O(3^n) polynomial
    products, so it suits small dense graphs where factoring branches a lot.
    """
    n = G.n
    if n > 16:
        raise ReliabilityError(f"vertex-subset method limited to n <= 16, got n={n}")
    full = (1 << n) - 1
    inside = [0] * (1 << n)
    ecount = [(u, v) for u, v in G.edges]
    for S in range(1 << n):
        inside[S] = sum(1 for u, v in ecount if (S >> u) & 1 and (S >> v) & 1)
    binrows: dict[int, list[int]] = {}

    def A(S: int) -> list[int]:
        k = inside[S]
        row = binrows.get(k)
        if row is None:
            row = binrows[k] = [comb(k, i) for i in range(k + 1)]
        return row

    conn: dict[int, list[int]] = {}
    for S in range(1, full + 1):
        low = S & -S
        rest = S ^ low
        acc = list(A(S))
        # proper subsets T of S containing the lowest vertex
        sub = (rest - 1) & rest
        while True:
            if sub != rest:
                T = sub | low
                prod = _mul(conn[T], A(S ^ T))
                for i, c in enumerate(prod):
                    acc[i] -= c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        conn[S] = acc
    return RelPoly(G.m, _padded(conn[full], G.m + 1))


def reliability(G: Multigraph, memo: MemoTable | str | None = "auto") -> RelPoly:
    """Pathset vector by the cheapest exact route for the graph's shape.

    Dense graphs on few vertices go through vertex subsets; everything else
    is factored.
    """
    if G.n <= 10 and G.m > 2 * G.n:
        return rel_vertex_subsets(G)
    return rel_factoring(G, memo=memo)


# --- spanning trees ------------------------------------------------------------------


def _bareiss_det(M: list[list[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    M = [row[:] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k] != 0:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def spanning_tree_count(G: Multigraph) -> int:
    """Matrix-tree theorem: a Laplacian cofactor, by fraction-free elimination."""
    if G.n == 1:
        return 1
    L = [[0] * G.n for _ in range(G.n)]
    for u, v in G.edges:
        L[u][u] += 1
        L[v][v] += 1
        L[u][v] -= 1
        L[v][u] -= 1
    minor = [row[1:] for row in L[1:]]
    return _bareiss_det(minor)


def edge_connectivity(G: Multigraph) -> int:
    """Minimum edge cut, by scanning vertex bipartitions (small n only)."""
    if G.n == 1:
        return 0
    if not is_connected(G):
        return 0
    if G.n > 20:
        raise ReliabilityError("edge_connectivity scans 2^(n-1) cuts; n <= 20 only")
    best = G.m
    for S in range(1, 1 << (G.n - 1)):
        S <<= 1  # vertex 0 stays on the other side
        cut = sum(1 for u, v in G.edges if ((S >> u) & 1) != ((S >> v) & 1))
        best = min(best, cut)
    return best


# --- evaluation and ordering ------------------------------------------------------------


def evaluate(P: RelPoly, p) -> Fraction:
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ReliabilityError(f"p must lie in [0, 1], got {p}")
    q = 1 - p
    return sum((Fraction(c) * p**i * q ** (P.m - i) for i, c in enumerate(P.N) if c), Fraction(0))


def dominates(A: RelPoly, B: RelPoly) -> str:
    """Coefficient-wise order: "yes" (A >= B), "no" (B > A somewhere, A <= B), "incomparable".

    "yes" is returned whenever every N_i(A) >= N_i(B), including equality.
    "no" means B dominates A strictly; mixed signs give "incomparable".
    """
    if A.m != B.m:
        raise ReliabilityError(f"cannot compare coefficient vectors with m={A.m} and m={B.m}")
    ge = all(a >= b for a, b in zip(A.N, B.N))
    le = all(a <= b for a, b in zip(A.N, B.N))
    if ge:
        return "yes"
    if le:
        return "no"
    return "incomparable"


def coefficient_vector_descending(P: RelPoly, n: int) -> list[int]:
    """``[N_m, N_{m-1}, ..., N_{n-1}]``, the layout of published coefficient tables."""
    return [P.N[i] for i in range(P.m, n - 2, -1)]


def bernstein_combine(deleted: RelPoly, contracted: RelPoly, loops: int = 0) -> RelPoly:
    """Re-expand (1-p)Rel(G-e) + pRel(G/e) as a degree-m pathset vector.

    ``loops`` is the number of parallel copies of e that contraction turned
    into (discarded) loops.
    """
    m = deleted.m + 1
    out = list(deleted.N) + [0]
    lifted = _mul([comb(loops, i) for i in range(loops + 1)], list(contracted.N))
    _add_into(out, lifted, shift=1)
    return RelPoly(m, _padded(out, m + 1))


# --- exact comparison on (0, 1) --------------------------------------------------------

FIRST = "FirstDominates"
SECOND = "SecondDominates"
EQUAL = "Equal"
CROSSING = "Crossing"


@dataclass(frozen=True)
class ComparisonVerdict:
    kind: str
    intervals: tuple[tuple[Fraction, Fraction], ...] = ()
    sign_near_zero: int = 0
    sign_near_one: int = 0

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "intervals": [[_frac(a), _frac(b)] for a, b in self.intervals],
            "sign_near_zero": self.sign_near_zero,
            "sign_near_one": self.sign_near_one,
        }


def _frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def to_power(P: RelPoly) -> list[int]:
    """Power-basis coefficients in p, ascending, trailing zeros trimmed."""
    return sturm.from_pathsets(P.N)


def compare_on_unit_interval(A: RelPoly, B: RelPoly) -> ComparisonVerdict:
    """Decide the sign pattern of Rel(A) - Rel(B) on (0, 1) exactly.

    Roots of even multiplicity are touch points and do not break dominance;
    only odd-multiplicity roots strictly inside (0, 1) count as crossings.
    """
    if A.m != B.m:
        raise ReliabilityError(f"cannot compare polynomials with m={A.m} and m={B.m}")
    d = to_power(RelPoly(A.m, tuple(a - b for a, b in zip(A.N, B.N))))
    if not d:
        return ComparisonVerdict(EQUAL)
    s0 = sturm.lowest_sign(d)
    s1 = sturm.lowest_sign(sturm.reflect(d))
    core = sturm.odd_multiplicity_core(d)
    # drop roots at the endpoints; the core is square-free so one division each
    if core and core[0] == 0:
        core = core[1:]
    if core and sturm.horner(core, 1) == 0:
        core = sturm.divmod_poly(core, [-1, 1])[0]
    intervals = tuple(sturm.isolate_roots(core)) if len(core) > 1 else ()
    if intervals:
        return ComparisonVerdict(CROSSING, intervals, s0, s1)
    return ComparisonVerdict(FIRST if s0 > 0 else SECOND, (), s0, s1)
