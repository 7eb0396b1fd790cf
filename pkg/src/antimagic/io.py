"""Graph and certificate serialization.

Two graph formats: a plain edge list (header ``n m`` then one ``u v`` line
per edge) and the compact one-line ASCII encoding used by standard
small-graph corpora, so enumerated graph streams can be piped straight in.
Certificates are grep-friendly text: one ``u v label`` line per edge, one
``vertex sum`` line per vertex, then a status line.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .graph import Graph, GraphError, Labeling, VerifyReport, verify_antimagic, vertex_sums

EDGELIST = "edgelist"
G6LINE = "g6line"
FORMATS = (EDGELIST, G6LINE)


class ParseError(ValueError):
    """Malformed document; carries the 1-based offending line when known."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


def parse_graph(text: str, fmt: str = EDGELIST) -> Graph:
    if fmt == EDGELIST:
        return parse_edgelist(text)
    if fmt == G6LINE:
        stripped = text.strip().splitlines()
        if len(stripped) != 1:
            raise ParseError("expected exactly one encoded graph line")
        return parse_graph6(stripped[0])
    raise ParseError(f"unknown format {fmt!r}")


def emit_graph(g: Graph, fmt: str = EDGELIST) -> str:
    if fmt == EDGELIST:
        return emit_edgelist(g)
    if fmt == G6LINE:
        return emit_graph6(g) + "\n"
    raise ParseError(f"unknown format {fmt!r}")


def parse_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    header = None
    header_no = 0
    for i, raw in enumerate(lines, start=1):
        if raw.strip() and not raw.lstrip().startswith("#"):
            header = raw.split()
            header_no = i
            break
    if header is None:
        raise ParseError("empty document")
    if len(header) != 2:
        raise ParseError("header must be 'n m'", header_no)
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError("header must hold two integers", header_no) from None
    edges = []
    for i in range(header_no, len(lines)):
        raw = lines[i].strip()
        if not raw or raw.startswith("#"):
            continue
        parts = raw.split()
        if len(parts) != 2:
            raise ParseError("edge line must be 'u v'", i + 1)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", i + 1) from None
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", i + 1)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", i + 1)
        key = (min(u, v), max(u, v))
        if key in set(edges):
            raise ParseError(f"duplicate edge {key}", i + 1)
        edges.append(key)
    if len(edges) != m:
        raise ParseError(f"header promises {m} edges, found {len(edges)}")
    return Graph(n, edges)


def emit_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def _g6_bit_pairs(n: int) -> Iterator[tuple[int, int]]:
    # column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for v in range(1, n):
        for u in range(v):
            yield u, v


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n > 258047:
        raise ParseError("encoding supports at most 258047 vertices")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = []
    for u, v in _g6_bit_pairs(n):
        bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chunks = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chunks.append(chr(val + 63))
    return head + "".join(chunks)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if not s:
        raise ParseError("empty encoded line")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    i = 0
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise ParseError("unsupported or truncated size prefix")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        i = 4
    else:
        n = ord(s[0]) - 63
        i = 1
    if n < 0:
        raise ParseError("negative vertex count")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[i:]
    if len(body) != need:
        raise ParseError(f"expected {need} data characters, got {len(body)}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ParseError(f"invalid character {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = [uv for uv, b in zip(_g6_bit_pairs(n), bits) if b]
    return Graph(n, edges)


def emit_certificate(g: Graph, labeling: Labeling, report: Optional[VerifyReport] = None) -> str:
    """Edge labels, vertex sums, then OK or the failure reason."""
    report = report or verify_antimagic(g, labeling)
    lines = [f"{u} {v} {labeling[e]}" for e, (u, v) in enumerate(g.edges)]
    sums = vertex_sums(g, labeling)
    lines.extend(f"{v} {sums[v]}" for v in range(g.n))
    if report.ok:
        lines.append("OK")
    elif not report.bijection_ok:
        lines.append("NOT-A-BIJECTION")
    else:
        u, v = report.first_collision
        lines.append(f"COLLISION {u} {v}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> tuple[Graph, Labeling]:
    """Rebuild graph and labeling from certificate text (status line ignored)."""
    edges = []
    labels = []
    vertices = set()
    for i, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        if not parts:
            continue
        if parts[0] in ("OK", "NOT-A-BIJECTION", "COLLISION"):
            continue
        if len(parts) == 3:
            try:
                u, v, lab = (int(x) for x in parts)
            except ValueError:
                raise ParseError("edge line must be 'u v label'", i) from None
            edges.append((u, v))
            labels.append(lab)
        elif len(parts) == 2:
            try:
                vertices.add(int(parts[0]))
            except ValueError:
                raise ParseError("vertex line must be 'v sum'", i) from None
        else:
            raise ParseError("unrecognized certificate line", i)
    if not vertices:
        raise ParseError("certificate has no vertex lines")
    n = max(vertices) + 1
    if vertices != set(range(n)):
        raise ParseError("vertex sums must cover 0..n-1")
    g = Graph(n, edges)
    by_edge = [0] * g.m
    for (u, v), lab in zip(edges, labels):
        by_edge[g.edge_index(u, v)] = lab
    return g, Labeling(by_edge)


def iter_graphs(text: str, fmt: str = G6LINE) -> Iterator[Graph]:
    """Graphs from a one-per-line stream (or a single edge-list document)."""
    if fmt == G6LINE:
        for line in text.splitlines():
            if line.strip():
                yield parse_graph6(line)
    elif fmt == EDGELIST:
        yield parse_edgelist(text)
    else:
        raise ParseError(f"unknown format {fmt!r}")
