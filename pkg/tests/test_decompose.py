import itertools

import pytest

from antimagic.decompose import cycle_decomposition, cycle_edges, parity_forest
from antimagic.graph import Graph, GraphError


def check_parity_forest(g):
    f = parity_forest(g).forest_edges
    # deletion leaves all degrees even
    deg = list(g.degrees())
    for e in f:
        u, v = g.edges[e]
        deg[u] -= 1
        deg[v] -= 1
    assert all(d % 2 == 0 for d in deg)
    # forest is acyclic: |F| restricted to any component is < its vertex count
    sub = Graph(g.n, [g.edges[e] for e in f])
    assert acyclic(sub)
    return f


def acyclic(g):
    # a forest has (vertex count of touched components) - (#components) edges;
    # equivalently no cycle: check by union-find
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def check_cycle_decomposition(g):
    dec = cycle_decomposition(g)
    all_edges = []
    for cyc in dec.cycles:
        assert len(cyc) >= 3
        assert len(set(cyc)) == len(cyc)
        all_edges.extend(cycle_edges(g, cyc))
    assert sorted(all_edges) == list(range(g.m))
    return dec


class TestParityForest:
    def test_triangle_needs_nothing(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        assert parity_forest(g).forest_edges == frozenset()

    def test_path3_forced_to_take_both_edges(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert parity_forest(g).forest_edges == frozenset({0, 1})

    def test_k4_by_invariant(self):
        g = Graph(4, list(itertools.combinations(range(4), 2)))
        f = check_parity_forest(g)
        assert len(f) <= 3

    def test_disconnected(self):
        g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)])
        check_parity_forest(g)

    def test_exhaustive_small(self):
        # every graph on up to 5 vertices (all labeled edge subsets)
        for n in range(1, 6):
            pairs = list(itertools.combinations(range(n), 2))
            for r in range(len(pairs) + 1):
                for chosen in itertools.combinations(pairs, r):
                    check_parity_forest(Graph(n, chosen))


class TestCycleDecomposition:
    def test_c4_single_cycle(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
        dec = check_cycle_decomposition(g)
        assert len(dec.cycles) == 1 and len(dec.cycles[0]) == 4

    def test_triangle(self):
        g = Graph(3, [(0, 1), (1, 2), (0, 2)])
        dec = check_cycle_decomposition(g)
        assert len(dec.cycles) == 1

    def test_bowtie_two_triangles(self):
        g = Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
        dec = check_cycle_decomposition(g)
        assert sorted(len(c) for c in dec.cycles) == [3, 3]

    def test_odd_degree_rejected(self):
        with pytest.raises(GraphError):
            cycle_decomposition(Graph(3, [(0, 1), (1, 2)]))

    def test_k5_decomposes(self):
        g = Graph(5, list(itertools.combinations(range(5), 2)))
        check_cycle_decomposition(g)

    def test_exhaustive_even_graphs(self):
        for n in range(3, 7):
            pairs = list(itertools.combinations(range(n), 2))
            for r in range(len(pairs) + 1):
                for chosen in itertools.combinations(pairs, r):
                    g = Graph(n, chosen)
                    if all(d % 2 == 0 for d in g.degrees()):
                        check_cycle_decomposition(g)
