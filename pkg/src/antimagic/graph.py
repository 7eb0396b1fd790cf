"""Core graph, labeling, and vertex-sum machinery.

An edge labeling assigns positive integers to the edges of a simple
undirected graph; the weight (vertex sum) of a vertex is the sum of the
labels on its incident edges.  A total labeling is *antimagic* when it is a
bijection onto ``{1..m}`` and all ``n`` vertex sums are pairwise distinct.

Everything downstream (constructive labelers, the randomized pipeline, the
search oracle) reports to :func:`verify_antimagic`; no labeling is accepted
anywhere unless it passes this check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

# Beyond this edge count a vertex sum could approach 2**63 and the verifier
# makes no overflow promises for foreign consumers of its reports.
MAX_VERIFIER_EDGES = 10**6

# Per-vertex sums; index = vertex id.
WeightMap = tuple[int, ...]


class GraphError(ValueError):
    """Structural problem with a graph, labeling, or operation precondition."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1`` with canonical edges.

    Edges are stored with ascending endpoints and sorted lexicographically,
    so any construction that walks "arbitrary" edges in storage order is
    deterministic and reproducible.  Instances are value-like: nothing
    mutates them after construction, so they are safe to share across
    concurrent workers.
    """

    __slots__ = ("n", "edges", "_incident", "_index")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        canon = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            canon.append((u, v) if u < v else (v, u))
        canon.sort()
        for i in range(1, len(canon)):
            if canon[i] == canon[i - 1]:
                raise GraphError(f"duplicate edge {canon[i]}")
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)
        incident: list[list[int]] = [[] for _ in range(n)]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append(e)
            incident[v].append(e)
        self._incident = tuple(tuple(lst) for lst in incident)
        self._index = {uv: e for e, uv in enumerate(self.edges)}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self._incident[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(t) for t in self._incident)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Indices of the edges incident with ``v``, ascending."""
        return self._incident[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(self.other_end(e, v) for e in self._incident[v])

    def other_end(self, e: int, v: int) -> int:
        u, w = self.edges[e]
        if v == u:
            return w
        if v == w:
            return u
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def edge_index(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._index[key]
        except KeyError:
            raise GraphError(f"no edge {key}") from None

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._index

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int], list[int]]:
        """Induced subgraph on ``vertices``.

        Returns ``(sub, vmap, edge_origin)`` where ``vmap`` maps old vertex
        ids to new ones and ``edge_origin[new_edge] = old_edge``.
        """
        keep = sorted(set(vertices))
        vmap = {old: new for new, old in enumerate(keep)}
        kept_edges = []
        origin = []
        for e, (u, v) in enumerate(self.edges):
            if u in vmap and v in vmap:
                kept_edges.append((vmap[u], vmap[v]))
                origin.append(e)
        return Graph(len(keep), kept_edges), vmap, origin

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Labeling:
    """Total assignment of positive labels to edges, by canonical edge index.

    The constructor checks only structure (one positive label per edge);
    whether the labels form a bijection onto ``{1..m}`` is the verifier's
    business, so that broken labelings can be reported rather than raised.
    """

    __slots__ = ("labels",)

    def __init__(self, labels: Iterable[int]):
        labs = tuple(int(x) for x in labels)
        for x in labs:
            if x < 1:
                raise GraphError(f"labels must be positive, got {x}")
        self.labels = labs

    @property
    def m(self) -> int:
        return len(self.labels)

    def items(self) -> Iterator[tuple[int, int]]:
        return enumerate(self.labels)

    def __getitem__(self, e: int) -> int:
        return self.labels[e]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Labeling):
            return NotImplemented
        return self.labels == other.labels

    def __hash__(self) -> int:
        return hash(self.labels)

    def __repr__(self) -> str:
        return f"Labeling({list(self.labels)})"


class PartialLabeling:
    """Injective assignment of labels from a pool to a subset of edges.

    The pool may be larger than the edge set (completions draw from it).
    """

    __slots__ = ("pool", "assignment")

    def __init__(self, pool: Iterable[int], assignment: dict[int, int] | None = None):
        self.pool = frozenset(int(x) for x in pool)
        for x in self.pool:
            if x < 1:
                raise GraphError(f"pool labels must be positive, got {x}")
        assignment = dict(assignment or {})
        seen = set()
        for e, lab in assignment.items():
            if lab not in self.pool:
                raise GraphError(f"label {lab} on edge {e} is not in the pool")
            if lab in seen:
                raise GraphError(f"label {lab} assigned to more than one edge")
            seen.add(lab)
        self.assignment = dict(assignment)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.assignment.items()))

    def unused_labels(self) -> list[int]:
        used = set(self.assignment.values())
        return sorted(self.pool - used)

    def is_total_for(self, g: Graph) -> bool:
        return len(self.assignment) == g.m and all(e in self.assignment for e in range(g.m))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialLabeling):
            return NotImplemented
        return self.pool == other.pool and self.assignment == other.assignment

    def __repr__(self) -> str:
        return f"PartialLabeling(pool={sorted(self.pool)}, assignment={self.assignment})"


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of an antimagic check.

    ``ok`` iff the labeling is a bijection onto ``{1..m}`` and all vertex
    sums are pairwise distinct.  On a sum collision, ``first_collision`` is
    the lexicographically smallest colliding vertex pair, which keeps test
    assertions deterministic.
    """

    ok: bool
    bijection_ok: bool
    first_collision: Optional[tuple[int, int]]


def vertex_sums(g: Graph, labeling: Labeling | PartialLabeling,
                base: Optional[Iterable[int]] = None) -> WeightMap:
    """Per-vertex sums of assigned labels; ``base`` is added pointwise.

    Unlabeled edges contribute nothing.  ``base`` carries partial sums from
    labels assigned outside ``labeling`` (e.g. edges already removed by a
    reduction phase).
    """
    if base is None:
        sums = [0] * g.n
    else:
        sums = [int(x) for x in base]
        if len(sums) != g.n:
            raise GraphError(f"base has {len(sums)} entries for n={g.n}")
    for e, lab in labeling.items():
        if not 0 <= e < g.m:
            raise GraphError(f"edge index {e} out of range for m={g.m}")
        u, v = g.edges[e]
        sums[u] += lab
        sums[v] += lab
    return tuple(sums)


def first_collision(sums: Iterable[int]) -> Optional[tuple[int, int]]:
    """Lexicographically smallest pair of vertices with equal sums, if any."""
    groups: dict[int, list[int]] = {}
    for v, s in enumerate(sums):
        groups.setdefault(s, []).append(v)
    best = None
    for members in groups.values():
        if len(members) >= 2:
            pair = (members[0], members[1])  # members ascend by construction
            if best is None or pair < best:
                best = pair
    return best


def verify_antimagic(g: Graph, labeling: Labeling) -> VerifyReport:
    """Check that ``labeling`` is an antimagic labeling of ``g``.

    Verification is total: missing or duplicated labels come back as
    ``bijection_ok=False`` rather than an exception.  Only structural
    mismatch (wrong number of labels, oversized instance) raises.
    """
    if g.m > MAX_VERIFIER_EDGES:
        raise GraphError(f"verifier supports at most {MAX_VERIFIER_EDGES} edges")
    if labeling.m != g.m:
        raise GraphError(f"labeling has {labeling.m} labels for m={g.m}")
    bijection_ok = sorted(labeling.labels) == list(range(1, g.m + 1))
    collision = first_collision(vertex_sums(g, labeling))
    return VerifyReport(ok=bijection_ok and collision is None,
                        bijection_ok=bijection_ok,
                        first_collision=collision)
