import json
import random
from fractions import Fraction
from math import comb

import pytest
from conftest import multigraphs, random_multigraph
from hypothesis import given, settings

from hamrel.constructions import (
    complement_family,
    cycle_with_one_chord,
    graph_from_cpath_vector,
)
from hamrel.graph import (
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    is_bridge,
    is_connected,
    make_graph,
    path_graph,
)
from hamrel.relpoly import (
    CROSSING,
    EQUAL,
    FIRST,
    PIVOTS,
    SECOND,
    MemoTable,
    ReliabilityError,
    RelPoly,
    bernstein_combine,
    coefficient_vector_descending,
    compare_on_unit_interval,
    dominates,
    edge_connectivity,
    evaluate,
    factoring_steps,
    glued_cycles_poly,
    multicycle_poly,
    multitree_poly,
    rel_bruteforce,
    rel_factoring,
    rel_vertex_subsets,
    reliability,
    spanning_tree_count,
    to_power,
)


def test_cycle_and_tree():
    for n in range(3, 9):
        P = rel_factoring(cycle_graph(n))
        assert P.N[n] == 1 and P.N[n - 1] == n and sum(P.N) == n + 1
        T = rel_factoring(path_graph(n))
        assert T.N[n - 1] == 1 and sum(T.N) == 1


def test_small_examples():
    assert rel_bruteforce(cycle_graph(3)).N == (0, 0, 3, 1)
    assert rel_bruteforce(complete_graph(4)).N[3] == 16
    # m = n here, so the list stops right after the leading 1 at tau = N_3
    assert coefficient_vector_descending(rel_factoring(cycle_graph(4)), 4) == [1, 4]
    k33 = make_graph(6, [(i, 3 + j) for i in range(3) for j in range(3)])
    assert coefficient_vector_descending(rel_factoring(k33), 6) == [1, 9, 36, 78, 81]


def test_hamiltonian_optimum_11_13():
    G = graph_from_cpath_vector((3, 3, 3, 2), "A")
    P = rel_factoring(G)
    assert (P.N[G.m - 2], P.N[G.n - 1]) == (68, 152)


def test_disconnected_is_zero():
    P = rel_factoring(make_graph(4, [(0, 1), (2, 3)]))
    assert P.N == (0, 0, 0)


def test_bruteforce_limit():
    with pytest.raises(ReliabilityError, match="24"):
        rel_bruteforce(complete_graph(8))


def test_oracle_corpus_1000():
    rng = random.Random(1)
    bad = []
    for _ in range(1000):
        G = random_multigraph(rng, n_max=7, m_max=16)
        P = rel_factoring(G)
        if P != rel_bruteforce(G) or P.N[G.n - 1] != spanning_tree_count(G):
            bad.append(G)
    assert bad == []


def test_vertex_subset_method_agrees(rng):
    for _ in range(150):
        G = random_multigraph(rng, n_max=7, m_max=14)
        assert rel_vertex_subsets(G) == rel_bruteforce(G)
    assert rel_vertex_subsets(complete_graph(8)) == rel_factoring(complete_graph(8), memo=None)


def test_pivot_independence(rng):
    for _ in range(200):
        G = random_multigraph(rng, n_max=8, m_max=18)
        results = {pol: rel_factoring(G, pivot=pol) for pol in PIVOTS}
        assert len(set(results.values())) == 1


def test_unknown_pivot():
    with pytest.raises(ReliabilityError, match="hub"):
        rel_factoring(cycle_graph(4), pivot="random")


def test_memo_is_transparent_and_reused():
    memo = MemoTable(limit=10_000)
    first = rel_factoring(complete_graph(7), memo=memo)
    assert first == rel_factoring(complete_graph(7), memo=None)
    size = len(memo.data)
    assert size > 0
    assert rel_factoring(complete_graph(7), memo=memo) == first
    assert len(memo.data) == size and memo.hits > 0


def test_memo_limit_respected():
    memo = MemoTable(limit=3)
    rel_factoring(complete_graph(7), memo=memo)
    assert len(memo.data) <= 3


def test_memo_insert_is_idempotent():
    memo = MemoTable()
    memo.put(b"k", [1, 2])
    memo.put(b"k", [1, 2])
    assert memo.get(b"k") == (1, 2) and len(memo.data) == 1


def test_shortcuts_avoid_branching():
    # chains, bundles, cycles of bundles and glued cycles all reduce without a pivot
    assert factoring_steps(cycle_graph(30)) == 0
    assert factoring_steps(make_graph(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2)])) == 0
    glued = make_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert factoring_steps(glued) == 0
    assert factoring_steps(cycle_with_one_chord(20, 10)) == 0


def test_closed_forms_match_bruteforce():
    # multitree: path 0-1-2 with bundles 2 and 3
    G = make_graph(3, [(0, 1)] * 2 + [(1, 2)] * 3)
    assert list(rel_bruteforce(G).N) == multitree_poly([2, 3])
    C = make_graph(3, [(0, 1)] * 2 + [(1, 2)] + [(0, 2)] * 3)
    assert list(rel_bruteforce(C).N) == multicycle_poly([2, 1, 3])
    glued = make_graph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    assert list(rel_bruteforce(glued).N) == glued_cycles_poly([1, 1, 1], [1, 1, 1])


def test_matrix_tree():
    assert spanning_tree_count(complete_graph(4)) == 16
    assert spanning_tree_count(cycle_graph(7)) == 7
    assert spanning_tree_count(cycle_with_one_chord(6, 3)) == 15
    assert spanning_tree_count(make_graph(3, [(0, 1)])) == 0
    assert spanning_tree_count(make_graph(2, [(0, 1)] * 3)) == 3


@settings(max_examples=200, deadline=None)
@given(multigraphs(n_max=6, m_max=12))
def test_factoring_identity_single_edge(G):
    for e in range(G.m):
        if is_bridge(G, e):
            continue
        loops = G.multiplicity()[G.edges[e]] - 1
        combined = bernstein_combine(
            rel_bruteforce(delete_edge(G, e)), rel_bruteforce(contract_edge(G, e)), loops
        )
        assert combined == rel_bruteforce(G)


@settings(max_examples=150, deadline=None)
@given(multigraphs(n_max=6, m_max=12))
def test_invariants(G):
    P = rel_factoring(G)
    assert P.N[G.m] == 1
    assert all(c == 0 for c in P.N[: G.n - 1])
    assert all(0 <= c <= comb(G.m, i) for i, c in enumerate(P.N))
    assert evaluate(P, 1) == 1
    if G.n >= 2:
        assert evaluate(P, 0) == 0
    lam = edge_connectivity(G)
    assert all(P.N[i] == comb(G.m, i) for i in range(G.m - lam + 1, G.m + 1))


def test_evaluate():
    P = rel_bruteforce(cycle_graph(3))
    assert evaluate(P, Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(ReliabilityError):
        evaluate(P, Fraction(3, 2))


def test_dominates():
    A = rel_factoring(graph_from_cpath_vector((3, 3, 3, 2), "A"))
    assert dominates(A, A) == "yes"
    B = RelPoly(13, A.N[:10] + (160, 70, 13, 1))
    assert B.N[-3:] == (70, 13, 1)
    assert dominates(B, A) == "yes" and dominates(A, B) == "no"
    g1 = rel_bruteforce(complement_family("g1", 6))
    g2 = rel_bruteforce(complement_family("g2", 6))
    assert dominates(g1, g2) == "incomparable"
    with pytest.raises(ReliabilityError):
        dominates(A, rel_bruteforce(cycle_graph(3)))


def test_json_roundtrip_big_ints():
    P = RelPoly(2, (0, 10**40, 1))
    obj = json.loads(P.to_json())
    assert obj["N"][1] == str(10**40)
    assert RelPoly.from_json(P.to_json()) == P


def test_relpoly_length_checked():
    with pytest.raises(ReliabilityError):
        RelPoly(3, (1, 2))


def test_power_conversion():
    # C3: 3p^2(1-p) + p^3 = 3p^2 - 2p^3
    assert to_power(rel_bruteforce(cycle_graph(3))) == [0, 0, 3, -2]


def test_compare_examples():
    a = rel_factoring(cycle_with_one_chord(6, 3))
    b = rel_factoring(cycle_with_one_chord(6, 2))
    assert compare_on_unit_interval(a, a).kind == EQUAL
    assert compare_on_unit_interval(a, b).kind == FIRST
    assert compare_on_unit_interval(b, a).kind == SECOND
    g1 = rel_factoring(complement_family("g1", 6))
    g2 = rel_factoring(complement_family("g2", 6))
    v = compare_on_unit_interval(g1, g2)
    assert v.kind == CROSSING
    assert v.sign_near_zero == 1 and v.sign_near_one == -1
    for lo, hi in v.intervals:
        assert 0 < lo < hi < 1
    with pytest.raises(ReliabilityError):
        compare_on_unit_interval(a, rel_factoring(cycle_graph(3)))


def test_compare_antisymmetric(rng):
    pairs = 0
    while pairs < 60:
        n = rng.randint(3, 6)
        G = random_multigraph(rng, n_max=n, m_max=9)
        H = random_multigraph(rng, n_max=n, m_max=9)
        if (G.n, G.m) != (H.n, H.m) or not (is_connected(G) and is_connected(H)):
            continue
        pairs += 1
        a, b = rel_factoring(G), rel_factoring(H)
        x, y = compare_on_unit_interval(a, b), compare_on_unit_interval(b, a)
        swap = {FIRST: SECOND, SECOND: FIRST, EQUAL: EQUAL, CROSSING: CROSSING}
        assert y.kind == swap[x.kind]
        assert x.intervals == y.intervals


def test_reliability_dispatch_agrees():
    for G in (complete_graph(7), cycle_with_one_chord(9, 4), complement_family("g3", 7)):
        assert reliability(G) == rel_factoring(G, memo=None)
