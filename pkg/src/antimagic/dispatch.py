"""Method selection and run reporting.

``dispatch_label`` routes a graph to the most specific labeler whose
hypothesis it satisfies: complete multipartite structure first, then a
vertex of degree n-1 or n-2, then the randomized dense pipeline, and
finally the heuristic search.  Whatever the method claims, the certificate
is re-verified before the report is emitted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

from .dense import DenseConfig, PairingError, label_dense
from .graph import Graph, GraphError, Labeling, verify_antimagic
from .io import emit_graph6
from .oracle import FOUND, SearchBudget, heuristic_search
from .partite import label_multipartite_on
from .special import ConstructionError, label_max_degree_n_minus_2, label_universal_vertex

ANTIMAGIC = "antimagic"
FAILED = "failed"
NOT_APPLICABLE = "not_applicable"

METHODS = ("auto", "universal", "delta-n2", "partite", "dense", "oracle")


@dataclass(frozen=True)
class RunReport:
    """One labeling attempt; the certificate is present iff it verified."""

    method: str
    graph_id: str
    outcome: str
    restarts: int
    wall_time: float
    certificate: Optional[Labeling]
    note: str = ""


def recognize_complete_multipartite(g: Graph) -> Optional[list[list[int]]]:
    """Vertex classes if non-adjacency is an equivalence relation, else None."""
    classes: list[list[int]] = []
    assigned = [-1] * g.n
    for v in range(g.n):
        if assigned[v] >= 0:
            continue
        cls = [v] + [u for u in range(g.n) if u != v and not g.has_edge(u, v)]
        cls.sort()
        for u in cls:
            if assigned[u] >= 0:
                return None
            assigned[u] = len(classes)
        classes.append(cls)
    for cls in classes:
        for i, u in enumerate(cls):
            for w in cls[i + 1:]:
                if g.has_edge(u, w):
                    return None
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if assigned[u] != assigned[w] and not g.has_edge(u, w):
                return None
    return classes


def dispatch_label(g: Graph, method: str = "auto", d: Optional[int] = None,
                   seed: int = 0, max_restarts: int = 1000) -> RunReport:
    if method not in METHODS:
        raise GraphError(f"unknown method {method!r}")
    graph_id = emit_graph6(g)
    start = time.perf_counter()

    def report(outcome, chosen, labeling=None, restarts=0, note=""):
        if labeling is not None:
            if not verify_antimagic(g, labeling).ok:
                return report(FAILED, chosen, None, restarts,
                              "produced labeling failed re-verification")
        return RunReport(chosen, graph_id, outcome, restarts,
                         time.perf_counter() - start, labeling, note)

    if g.n == 2 and g.m == 1:
        return report(NOT_APPLICABLE, method, note="K2 exception: the one labeling collides")
    if g.m == 0:
        if g.n <= 1:
            return report(ANTIMAGIC, method, Labeling([]), note="trivial")
        return report(NOT_APPLICABLE, method, note="edgeless graph: all vertex sums are zero")

    chosen = method
    classes = None
    if method == "auto":
        classes = recognize_complete_multipartite(g)
        if classes is not None and g.n >= 2 and len(classes) >= 2:
            chosen = "partite"
        elif g.max_degree() == g.n - 1 and g.n >= 3:
            chosen = "universal"
        elif g.max_degree() == g.n - 2 and g.n >= 4:
            chosen = "delta-n2"
        elif g.min_degree() >= DenseConfig(d=d).effective_d(g.n):
            chosen = "dense"
        else:
            chosen = "oracle"

    try:
        if chosen == "partite":
            if classes is None:
                classes = recognize_complete_multipartite(g)
            if classes is None:
                return report(NOT_APPLICABLE, chosen, note="not complete multipartite")
            if len(classes) < 2:
                return report(NOT_APPLICABLE, chosen,
                              note="edgeless graph: all vertex sums are zero")
            return report(ANTIMAGIC, chosen, label_multipartite_on(g, classes))
        if chosen == "universal":
            return report(ANTIMAGIC, chosen, label_universal_vertex(g))
        if chosen == "delta-n2":
            return report(ANTIMAGIC, chosen, label_max_degree_n_minus_2(g))
        if chosen == "dense":
            cfg = DenseConfig(d=d, rng_seed=seed, max_restarts=max_restarts)
            res = label_dense(g, cfg)
            if res.ok:
                return report(ANTIMAGIC, chosen, res.labeling, res.restarts)
            return report(FAILED, chosen, None, res.restarts,
                          f"budget exhausted; best attempt had "
                          f"{res.best_collision_count} colliding pairs")
        budget = SearchBudget(mode="heuristic", seed=seed)
        res = heuristic_search(g, budget)
        if res.status == FOUND:
            return report(ANTIMAGIC, "oracle", res.labeling)
        return report(FAILED, "oracle", None, note="heuristic search found no certificate")
    except (GraphError, ConstructionError, PairingError) as exc:
        return report(NOT_APPLICABLE if isinstance(exc, GraphError) else FAILED,
                      chosen, note=str(exc))
