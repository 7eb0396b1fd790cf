"""Exhaustive small-graph corpora.

Enumeration is by orbit: walk all edge-subset bitmasks of the labeled
complete graph, and whenever an unseen mask appears, mark its whole
isomorphism orbit (all vertex permutations, applied as precomputed bit
shuffles) as seen.  Practical up to 7 vertices; the max-degree corpora at
8 vertices are built instead by joining a new vertex onto the 7-vertex
classes, which covers every isomorphism class of the target family.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .graph import Graph, GraphError

MAX_ENUMERATION_N = 7


def _edge_positions(n: int) -> dict[tuple[int, int], int]:
    pos = {}
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            pos[(u, v)] = k
            k += 1
    return pos


@lru_cache(maxsize=None)
def _perm_tables(n: int) -> np.ndarray:
    pos = _edge_positions(n)
    nbits = n * (n - 1) // 2
    tables = []
    for perm in itertools.permutations(range(n)):
        row = [0] * nbits
        for (u, v), k in pos.items():
            pu, pv = perm[u], perm[v]
            if pu > pv:
                pu, pv = pv, pu
            row[k] = pos[(pu, pv)]
        tables.append(row)
    return np.array(tables, dtype=np.int64)


def _mask_to_graph(n: int, mask: int) -> Graph:
    edges = [uv for uv, k in _edge_positions(n).items() if (mask >> k) & 1]
    return Graph(n, edges)


@lru_cache(maxsize=None)
def graphs_upto_iso(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on ``n`` vertices."""
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise GraphError(f"exhaustive enumeration supports 1 <= n <= {MAX_ENUMERATION_N}")
    nbits = n * (n - 1) // 2
    tables = _perm_tables(n)
    bitw = np.arange(nbits, dtype=np.int64)
    seen = bytearray(1 << nbits)
    reps = []
    for mask in range(1 << nbits):
        if seen[mask]:
            continue
        reps.append(mask)
        bits = np.int64(mask) >> bitw & 1
        orbit = np.bitwise_or.reduce(bits[None, :] << tables, axis=1)
        for om in orbit.tolist():
            seen[om] = 1
    return tuple(_mask_to_graph(n, mask) for mask in reps)


def connected_graphs_upto_iso(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in graphs_upto_iso(n) if g.is_connected())


def high_max_degree_corpus(n: int) -> tuple[Graph, ...]:
    """Every graph on ``n`` vertices with maximum degree n-1 or n-2.

    Built by attaching an almost-universal vertex to each (n-1)-vertex
    class: a graph with a universal vertex is some H plus a join vertex,
    and one with a degree-(n-2) vertex is some K plus a vertex joined to
    all but one non-neighbor, so iterating those constructions covers every
    isomorphism class of the family (possibly with repeats).
    """
    if not 4 <= n <= MAX_ENUMERATION_N + 1:
        raise GraphError(f"corpus supports 4 <= n <= {MAX_ENUMERATION_N + 1}")
    base = graphs_upto_iso(n - 1)
    out: list[Graph] = []
    hub = n - 1
    for h in base:
        edges = list(h.edges) + [(u, hub) for u in range(n - 1)]
        out.append(Graph(n, edges))
    for k in base:
        degs = k.degrees()
        for z in range(n - 1):
            # the join must not create a universal vertex elsewhere
            if any(degs[u] > n - 3 for u in range(n - 1) if u != z):
                continue
            edges = list(k.edges) + [(u, hub) for u in range(n - 1) if u != z]
            g = Graph(n, edges)
            assert g.max_degree() == n - 2
            out.append(g)
    return tuple(out)
