"""Parity forests and cycle decompositions.

Two classical facts drive the maximum-degree labelers: every graph has a
subforest whose removal leaves all degrees even, and every even graph
splits into edge-disjoint simple cycles.  Both constructions here are
deterministic given the canonical edge order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError


@dataclass(frozen=True)
class ParityForest:
    """Acyclic edge set whose deletion leaves every vertex with even degree."""

    forest_edges: frozenset[int]


@dataclass(frozen=True)
class CycleDecomposition:
    """Edge-disjoint simple cycles covering the whole edge set.

    Each cycle is a vertex sequence; its edges are the consecutive pairs
    plus the wrap-around pair.  Only defined for even graphs, so there is
    never a leftover edge.
    """

    cycles: tuple[tuple[int, ...], ...]


def parity_forest(g: Graph) -> ParityForest:
    """Subforest whose deletion makes ``g`` even.

    Roots a spanning forest (BFS from the smallest vertex of each
    component), then walks vertices children-first: a vertex whose current
    degree is odd sends its parent edge into the forest.  Each non-root is
    finalized exactly once, and the handshake identity forces the roots
    even as well.  Linear time; ``|F| <= n - (#components)``.
    """
    parent_edge = [-1] * g.n
    order: list[int] = []
    seen = [False] * g.n
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        queue = [root]
        qi = 0
        while qi < len(queue):
            u = queue[qi]
            qi += 1
            order.append(u)
            for e in g.incident_edges(u):
                w = g.other_end(e, u)
                if not seen[w]:
                    seen[w] = True
                    parent_edge[w] = e
                    queue.append(w)
    deg = list(g.degrees())
    forest: set[int] = set()
    for v in reversed(order):
        e = parent_edge[v]
        if e >= 0 and deg[v] % 2 == 1:
            forest.add(e)
            u, w = g.edges[e]
            deg[u] -= 1
            deg[w] -= 1
    if any(d % 2 for d in deg):
        raise AssertionError("parity forest failed to even out all degrees")
    return ParityForest(frozenset(forest))


def cycle_decomposition(g: Graph) -> CycleDecomposition:
    """Split an even graph into edge-disjoint simple cycles.

    Walks from each vertex along the smallest-id unused edge; whenever the
    walk revisits a vertex on the current path the enclosed cycle is cut
    out.  With all degrees even the walk can only stall back at its start.
    """
    degs = g.degrees()
    odd = [v for v in range(g.n) if degs[v] % 2]
    if odd:
        raise GraphError(f"cycle decomposition needs an even graph; odd degree at {odd[0]}")
    adj = [sorted(((g.other_end(e, v), e) for e in g.incident_edges(v))) for v in range(g.n)]
    ptr = [0] * g.n
    used = [False] * g.m
    cycles: list[tuple[int, ...]] = []

    def next_edge(v: int):
        while ptr[v] < len(adj[v]):
            w, e = adj[v][ptr[v]]
            if not used[e]:
                return w, e
            ptr[v] += 1
        return None

    for start in range(g.n):
        path = [start]
        pos = {start: 0}
        while path:
            v = path[-1]
            step = next_edge(v)
            if step is None:
                path.pop()
                del pos[v]
                continue
            w, e = step
            used[e] = True
            if w in pos:
                cyc = path[pos[w]:]
                cycles.append(tuple(cyc))
                for u in cyc[1:]:
                    del pos[u]
                del path[pos[w] + 1:]
            else:
                path.append(w)
                pos[w] = len(path) - 1
    return CycleDecomposition(tuple(cycles))


def cycle_edges(g: Graph, cycle: tuple[int, ...]) -> list[int]:
    """Edge indices of a cycle given as a vertex sequence."""
    k = len(cycle)
    return [g.edge_index(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
