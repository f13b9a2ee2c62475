
import networkx as nx
import pytest
from conftest import random_simple

from hamrel.constructions import (
    complement_family,
    cpath_vectors,
    graph_from_cpath_vector,
    petersen,
    umr_subdivision,
    wagner,
)
from hamrel.graph import complete_graph, cycle_graph, make_graph
from hamrel.hamiltonian import (
    HamiltonianError,
    classify_two_chord,
    degree_obstruction,
    find_hamiltonian_cycle,
    normalize_vector,
    ore_condition,
)


def _valid(G, C):
    return sorted(C) == list(range(G.n)) and all(
        G.has_edge(C[i], C[(i + 1) % G.n]) for i in range(G.n)
    )


def _nx_hamiltonian(G):
    # exhaustive DP over subsets; fine for n <= 10
    n = G.n
    adj = [set() for _ in range(n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    reach = {(1, 0)}
    for mask in range(1, 1 << n):
        if not mask & 1:
            continue
        for v in range(n):
            if (mask, v) in reach:
                for w in adj[v]:
                    if not mask >> w & 1:
                        reach.add((mask | 1 << w, w))
    full = (1 << n) - 1
    return any((full, v) in reach and 0 in adj[v] for v in range(1, n))


def test_examples():
    C = find_hamiltonian_cycle(wagner())
    assert C is not None and _valid(wagner(), C)
    assert find_hamiltonian_cycle(petersen()) is None
    assert find_hamiltonian_cycle(cycle_graph(9)) == list(range(9))


def test_deterministic():
    G = complete_graph(7)
    assert find_hamiltonian_cycle(G) == find_hamiltonian_cycle(G)


def test_parallels_reduced_to_support():
    G = make_graph(3, [(0, 1), (0, 1), (1, 2), (0, 2)])
    assert find_hamiltonian_cycle(G) == [0, 1, 2]
    assert find_hamiltonian_cycle(make_graph(3, [(0, 1), (0, 1), (1, 2)])) is None


def test_small_n_rejected():
    with pytest.raises(HamiltonianError):
        find_hamiltonian_cycle(make_graph(2, [(0, 1)]))


def test_matches_exhaustive_search(rng):
    for _ in range(300):
        n = rng.randint(3, 10)
        G = random_simple(rng, n, rng.uniform(0.15, 0.6))
        C = find_hamiltonian_cycle(G)
        assert (C is not None) == _nx_hamiltonian(G)
        if C is not None:
            assert _valid(G, C)


def test_ore_implies_hamiltonian(rng):
    hits = 0
    for _ in range(300):
        n = rng.randint(3, 12)
        G = random_simple(rng, n, rng.uniform(0.6, 0.95))
        if ore_condition(G):
            hits += 1
            assert find_hamiltonian_cycle(G) is not None
    assert hits > 50


def test_ore_examples():
    assert ore_condition(complete_graph(5))
    assert not ore_condition(cycle_graph(6))
    assert ore_condition(complement_family("g1", 6))


def test_obstruction_examples():
    assert all(degree_obstruction(umr_subdivision(n, n + 1)) for n in range(5, 13))
    assert degree_obstruction(umr_subdivision(9, 11))
    assert not degree_obstruction(cycle_graph(7))


def test_obstruction_implies_nonhamiltonian():
    fixtures = [umr_subdivision(n, n + k) for k, lo in ((1, 5), (2, 4), (3, 6)) for n in range(lo, 17)]
    for G in fixtures:
        if degree_obstruction(G):
            assert find_hamiltonian_cycle(G) is None


def test_classify_examples():
    crossing = cycle_graph(8).add_edges([(0, 4), (2, 6)])
    c = classify_two_chord(crossing, list(range(8)))
    assert (c.kind, c.vector) == ("A", (2, 2, 2, 2))
    parallel = cycle_graph(8).add_edges([(0, 2), (4, 6)])
    c = classify_two_chord(parallel, list(range(8)))
    assert (c.kind, c.vector) == ("B", (2, 2, 2, 2))
    shared = cycle_graph(8).add_edges([(0, 2), (2, 5)])
    c = classify_two_chord(shared, list(range(8)))
    assert c.kind == "A-hat" and 0 in c.vector and sum(c.vector) == 8


def test_classify_errors():
    with pytest.raises(HamiltonianError):
        classify_two_chord(cycle_graph(6).add_edges([(0, 3)]), list(range(6)))
    G = cycle_graph(6).add_edges([(0, 3), (1, 4)])
    with pytest.raises(HamiltonianError):
        classify_two_chord(G, [0, 2, 1, 3, 4, 5])


def test_classify_roundtrip_and_sum():
    for n in range(4, 13):
        for v in cpath_vectors(n):
            for kind in ("A", "B"):
                try:
                    G = graph_from_cpath_vector(v, kind)
                except ValueError:
                    continue
                c = classify_two_chord(G, list(range(n)))
                assert sum(c.vector) == n
                assert (c.kind, c.vector) == (kind, normalize_vector(kind, v))


def test_classify_under_other_cycles(rng):
    # any hamiltonian cycle of the graph gives a sum-n vector of a consistent kind family
    for _ in range(50):
        n = rng.randint(5, 12)
        G = graph_from_cpath_vector(rng.choice(cpath_vectors(n)), "A")
        perm = list(range(n))
        rng.shuffle(perm)
        H = G.relabel(perm)
        C = find_hamiltonian_cycle(H)
        assert sum(classify_two_chord(H, C).vector) == n


def test_nx_oracle_sanity():
    assert not _nx_hamiltonian(petersen())
    assert nx.is_connected(nx.petersen_graph())
