"""Graph families for labeler inputs and experiments."""

from __future__ import annotations

import random
from typing import Sequence

from .graph import Graph, GraphError
from .partite import PartiteSpec, canonical_multipartite_graph


def complete_partite_graph(sizes: Sequence[int]) -> Graph:
    return canonical_multipartite_graph(PartiteSpec(tuple(sizes)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("paths need at least 1 vertex")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, outer + inner + spokes)


def random_min_degree_graph(n: int, d: int, seed: int) -> Graph:
    """Random graph repaired to minimum degree ``d``, deterministic per seed.

    Starts from independent edges at the density matching expected degree
    ``d``, then adds random edges at the smallest deficient vertex until no
    vertex falls short.
    """
    if n < 2:
        raise GraphError("need at least 2 vertices")
    if not 0 <= d < n:
        raise GraphError(f"need 0 <= d < n, got d={d}, n={n}")
    rng = random.Random(seed)
    p = d / (n - 1)
    edges = set()
    deg = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
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


_NAMED = {
    "petersen": petersen_graph,
}


def named_graph(name: str) -> Graph:
    """Fixed library: ``petersen``, ``C<n>``, ``P<n>``, ``K<n>``, ``S<n>``."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    if len(key) >= 2 and key[0] in "cpks" and key[1:].isdigit():
        size = int(key[1:])
        if key[0] == "c":
            return cycle_graph(size)
        if key[0] == "p":
            return path_graph(size)
        if key[0] == "k":
            return complete_graph(size)
        return star_graph(size)
    raise GraphError(f"unknown named graph {name!r}")
