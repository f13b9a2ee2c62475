from itertools import combinations, permutations

import pytest

from hamrel.canon import brute_force_code, canonical_form
from hamrel.enumeration import (
    EnumerationError,
    dedupe_isomorphic,
    enumerate_graphs,
    enumerate_hamiltonian,
    enumerate_hd,
    iter_cycle_plus_chords,
    non_cycle_pairs,
)
from hamrel.graph import cycle_graph, make_graph
from hamrel.hamiltonian import find_hamiltonian_cycle


def test_examples():
    assert len(enumerate_hamiltonian(11, 2)) == 56
    assert len(enumerate_hamiltonian(4, 1)) == 1


def test_one_chord_counts():
    for n in range(4, 13):
        assert len(enumerate_hamiltonian(n, 1)) == n // 2 - 1


def test_six_three_against_bruteforce_dedupe():
    n = 6
    codes = set()
    for chords in combinations(non_cycle_pairs(n), 3):
        codes.add(brute_force_code(make_graph(n, [(i, (i + 1) % n) for i in range(n)] + list(chords))))
    assert len(enumerate_hamiltonian(6, 3)) == len(codes)


def test_members_distinct_and_hamiltonian():
    for n, c in ((7, 2), (8, 3), (9, 2)):
        L = enumerate_hamiltonian(n, c)
        assert len({canonical_form(G) for G in L}) == len(L)
        assert all(find_hamiltonian_cycle(G) is not None for G in L)
        assert all(G.m == n + c for G in L)


def test_complete_against_all_graphs():
    # every hamiltonian graph with these sizes shows up exactly once
    for n, m in ((6, 8), (7, 9)):
        ham = [G for G in enumerate_graphs(n, m) if find_hamiltonian_cycle(G) is not None]
        assert {canonical_form(G) for G in ham} == {
            canonical_form(G) for G in enumerate_hamiltonian(n, m - n)
        }


def test_hd_properties():
    for n in (6, 8, 9, 12):
        L = enumerate_hd(n)
        assert all(G.m == n + 3 and G.has_edge(0, n // 2) for G in L)
    for n in (8, 10, 12, 14):
        ham = {canonical_form(G) for G in enumerate_hamiltonian(n, 3)}
        assert {canonical_form(G) for G in enumerate_hd(n)} <= ham


def test_dedupe():
    a = cycle_graph(4).add_edges([(0, 2)])
    b = cycle_graph(4).add_edges([(1, 3)])
    assert dedupe_isomorphic([a, b]) == [a]
    L = list(iter_cycle_plus_chords(8, 2))
    once = dedupe_isomorphic(L)
    assert dedupe_isomorphic(once) == once
    assert dedupe_isomorphic(L[::-1])[0] == L[-1]
    assert len(dedupe_isomorphic(iter_cycle_plus_chords(11, 2))) == 56


def test_general_counts():
    # known numbers of graphs on 5 vertices by edge count
    assert [len(enumerate_graphs(5, m, connected=False)) for m in range(11)] == [
        1, 1, 2, 4, 6, 6, 6, 4, 2, 1, 1
    ]
    assert len(enumerate_graphs(5, 4)) == 3  # trees on 5 vertices


def test_errors():
    with pytest.raises(EnumerationError):
        enumerate_hamiltonian(5, 6)
    with pytest.raises(EnumerationError):
        enumerate_hamiltonian(3, 0)
    with pytest.raises(EnumerationError):
        enumerate_hd(5)
    with pytest.raises(EnumerationError):
        enumerate_graphs(4, 7)


def test_canonical_code_stable_under_relabel():
    G = enumerate_hamiltonian(7, 2)[3]
    assert {canonical_form(G.relabel(list(p))) for p in permutations(range(7))} == {canonical_form(G)}
