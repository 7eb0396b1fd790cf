import itertools
import random
from collections import Counter

import pytest

from antimagic.dense import (
    DenseConfig,
    PairingError,
    assemble_labeling,
    label_dense,
    label_pair_for,
    phase1_reduce,
    phase2_pair_edges,
    phase3_pair_labels,
    phase5_assign,
)
from antimagic.graph import Graph, GraphError, verify_antimagic, vertex_sums


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return Graph(n, list(itertools.combinations(range(n), 2)))


class _AllHeads(random.Random):
    def randrange(self, *a, **k):
        return 0


def random_min_degree(n, d, seed):
    rng = random.Random(seed)
    edges = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < d / (n - 1):
                edges.add((u, v))
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    while True:
        deficient = [v for v in range(n) if deg[v] < d]
        if not deficient:
            break
        v = deficient[0]
        options = [u for u in range(n) if u != v and (min(u, v), max(u, v)) not in edges]
        u = rng.choice(options)
        edges.add((min(u, v), max(u, v)))
        deg[u] += 1
        deg[v] += 1
    return Graph(n, edges)


class TestPhase1:
    def test_regular_graph_removes_nothing(self):
        g = cycle(6)
        st = phase1_reduce(g, DenseConfig(d=2))
        assert st.removed == () and st.t == 6
        assert st.high == frozenset() and st.carried == (0,) * 6

    def test_k4_trace(self):
        g = complete(4)
        st = phase1_reduce(g, DenseConfig(d=2))
        assert st.removed[0][1] == 6  # first removal carries the top label
        assert st.t % 2 == 0
        # no surviving edge joins two high-degree vertices
        for e in st.reduced_edges:
            u, v = g.edges[e]
            assert st.reduced_graph.degree(u) <= 2 or st.reduced_graph.degree(v) <= 2
        for u in st.high:
            for v in st.high:
                if u != v:
                    assert not st.reduced_graph.has_edge(u, v)

    def test_min_degree_enforced(self):
        with pytest.raises(GraphError):
            phase1_reduce(cycle(5), DenseConfig(d=3))

    def test_t_range_invariant(self):
        for seed in range(5):
            g = random_min_degree(24, 5, seed)
            st = phase1_reduce(g, DenseConfig(d=5))
            lo = 5 * 24 // 2 - (1 if st.parity_adjusted else 0)
            assert lo <= st.t <= 5 * 24
            assert st.t % 2 == 0
            degs = st.reduced_graph.degrees()
            below = [v for v in range(24) if degs[v] < 5]
            assert len(below) <= (2 if st.parity_adjusted else 0)


class TestPhase2:
    def test_c6_three_disjoint_pairs(self):
        st = phase2_pair_edges(phase1_reduce(cycle(6), DenseConfig(d=2)))
        assert len(st.pair_list) == 3
        g = cycle(6)
        for a, b in st.pair_list:
            assert not (set(g.edges[a]) & set(g.edges[b]))
        for e in range(6):
            assert st.partner[st.partner[e]] == e

    def test_spill_size_picks_smaller(self):
        # one high vertex of degree d+3: spill must be 2, not 4
        d = 2
        g = Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5),
                      (1, 2), (3, 4), (5, 6), (6, 7), (5, 7), (1, 6), (2, 7), (3, 6), (4, 7)])
        st = phase1_reduce(g, DenseConfig(d=d))
        st2 = phase2_pair_edges(st)
        for v in st.high:
            dv = st.reduced_graph.degree(v)
            size = len(st2.spill[v])
            assert size % 2 == 0
            assert abs((dv - size) - d) <= 1
            if dv == d + 3:
                assert size == 2

    def test_two_adjacent_edges_cannot_pair(self):
        g = Graph(3, [(0, 1), (1, 2)])
        st = phase1_reduce(g, DenseConfig(d=1))
        assert st.t == 2
        with pytest.raises(PairingError):
            phase2_pair_edges(st)

    def test_pair_accounting(self):
        g = random_min_degree(20, 4, 3)
        st = phase2_pair_edges(phase1_reduce(g, DenseConfig(d=4)))
        spill_total = sum(len(v) for v in st.spill.values())
        assert spill_total + 2 * sum(
            1 for a, b in st.pair_list
            if not (set(g.edges[a]) & set(g.edges[b])) or True
        ) - spill_total == st.t
        # non-spill pairs are endpoint-disjoint
        spill_edges = {e for edges in st.spill.values() for e in edges}
        for a, b in st.pair_list:
            if a not in spill_edges:
                assert not (set(g.edges[a]) & set(g.edges[b]))
        # H windows
        for v in range(g.n):
            assert st.d - 1 <= len(st.h_sets[v]) <= st.d + 1


class TestPhase3:
    def test_t2_single_pair(self):
        g = Graph(4, [(0, 1), (2, 3)])
        st = phase1_reduce(g, DenseConfig(d=1))
        st = phase3_pair_labels(phase2_pair_edges(st), random.Random(0))
        assert st.label_pairs == ((1, 2),)

    def test_deterministic_per_seed(self):
        g = cycle(8)
        st = phase2_pair_edges(phase1_reduce(g, DenseConfig(d=2)))
        a = phase3_pair_labels(st, random.Random(42)).label_pairs
        b = phase3_pair_labels(st, random.Random(42)).label_pairs
        assert a == b

    def test_t4_pairings_uniform(self):
        g = Graph(8, [(0, 1), (2, 3), (4, 5), (6, 7)])
        st = phase2_pair_edges(phase1_reduce(g, DenseConfig(d=1)))
        assert st.t == 4
        rng = random.Random(123)
        freq = Counter()
        trials = 100_000
        for _ in range(trials):
            lp = phase3_pair_labels(st, rng).label_pairs
            freq[frozenset(lp)] += 1
        assert len(freq) == 3  # the 3 perfect pairings of {1,2,3,4}
        for count in freq.values():
            assert abs(count / trials - 1 / 3) < 0.02

    def test_spill_sum_invariant_under_coins(self):
        # f(v) must not depend on any coin outcome
        g = Graph(7, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4), (5, 6),
                      (1, 5), (2, 6), (3, 5), (4, 6), (5, 0)])
        st = phase1_reduce(g, DenseConfig(d=2))
        st = phase3_pair_labels(phase2_pair_edges(st), random.Random(5))
        if not st.spill_sums:
            pytest.skip("instance has no high vertices")
        for coins_value in (0, 1):
            coins = [coins_value] * len(st.pair_list)
            lab = assemble_labeling(st, coins)
            for v, expected in st.spill_sums.items():
                got = sum(lab[e] for e in st.spill[v])
                assert got == expected


class TestPhase5:
    def test_all_heads_canonical_orientation(self):
        g = cycle(6)
        st = phase3_pair_labels(phase2_pair_edges(phase1_reduce(g, DenseConfig(d=2))),
                                random.Random(9))
        lab = phase5_assign(st, _AllHeads())
        for idx, (e1, e2) in enumerate(st.pair_list):
            lo, hi = st.label_pairs[idx]
            assert lab[e1] == lo and lab[e2] == hi
            assert label_pair_for(st, e1) == (lo, hi)

    def test_two_outcomes_for_single_pair(self):
        g = Graph(4, [(0, 1), (2, 3)])
        st = phase3_pair_labels(phase2_pair_edges(phase1_reduce(g, DenseConfig(d=1))),
                                random.Random(0))
        rng = random.Random(31)
        seen = Counter()
        for _ in range(2000):
            lab = phase5_assign(st, rng)
            seen[tuple(lab.labels)] += 1
        assert len(seen) == 2
        for count in seen.values():
            assert abs(count / 2000 - 0.5) < 0.05

    def test_pipeline_yields_bijection(self):
        g = cycle(6)
        st = phase3_pair_labels(phase2_pair_edges(phase1_reduce(g, DenseConfig(d=2))),
                                random.Random(3))
        lab = phase5_assign(st, random.Random(4))
        assert sorted(lab.labels) == list(range(1, 7))


class TestDriver:
    def test_success_on_easy_graph(self):
        g = random_min_degree(32, 11, 0)
        res = label_dense(g, DenseConfig(d=11, rng_seed=0))
        assert res.ok
        assert verify_antimagic(g, res.labeling).ok

    def test_restart_count_zero_on_first_draw(self):
        g = random_min_degree(32, 11, 1)
        res = label_dense(g, DenseConfig(d=11, rng_seed=1))
        if res.ok and res.resamples == 0:
            assert res.restarts == 0

    def test_forced_failure_reports_collision(self):
        g = Graph(2, [(0, 1)])
        res = label_dense(g, DenseConfig(d=1, max_restarts=1))
        assert not res.ok
        assert res.collision == (0, 1)
        assert res.best_collision_count == 1

    def test_default_d_from_size(self):
        cfg = DenseConfig()
        assert cfg.effective_d(128) == 15  # ceil(3 ln 128)

    def test_deterministic_given_seed(self):
        g = random_min_degree(24, 7, 5)
        a = label_dense(g, DenseConfig(d=7, rng_seed=11))
        b = label_dense(g, DenseConfig(d=7, rng_seed=11))
        assert a.labeling == b.labeling and a.restarts == b.restarts
