"""Instance files (DIMACS clique, METIS, edge list), writers and weight assignment.

All formats use 1-based vertex ids on disk and 0-based ids in memory.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from .graph import WeightedGraph
from .rng import Xoshiro256

FORMATS = ("dimacs", "metis", "edgelist")
WEIGHT_RANGE = (1, 200)

_EXTENSIONS = {
    ".clq": "dimacs",
    ".dimacs": "dimacs",
    ".col": "dimacs",
    ".wclq": "dimacs",
    ".graph": "metis",
    ".metis": "metis",
    ".txt": "edgelist",
    ".edges": "edgelist",
    ".el": "edgelist",
}


class ParseError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None, path: Optional[str] = None):
        self.line = line
        self.path = path
        where = f"{path or '<input>'}:{line}: " if line is not None else f"{path or '<input>'}: "
        super().__init__(where + message)


@dataclass
class InstanceFile:
    path: str
    format: str
    graph: WeightedGraph
    weighted: bool
    weight_seed: Optional[int] = None

    @property
    def name(self) -> str:
        return os.path.basename(self.path)


def detect_format(path: str) -> str:
    base = path[:-3] if path.endswith(".gz") else path
    ext = os.path.splitext(base)[1].lower()
    return _EXTENSIONS.get(ext, "dimacs")


class _Builder:
    def __init__(self, path):
        self.path = path
        self.n: Optional[int] = None
        self.weights: dict = {}
        self.edges: list = []
        self.seen: set = set()

    def fail(self, msg, lineno):
        raise ParseError(msg, lineno, self.path)

    def edge(self, u: int, v: int, lineno: int):
        if u == v:
            self.fail(f"self-loop on vertex {u}", lineno)
        if self.n is not None and not (1 <= u <= self.n and 1 <= v <= self.n):
            self.fail(f"edge {u} {v} has an endpoint outside 1..{self.n}", lineno)
        if u < 1 or v < 1:
            self.fail(f"vertex ids are 1-based, got {u} {v}", lineno)
        key = (u, v) if u < v else (v, u)
        if key in self.seen:
            self.fail(f"duplicate edge {u} {v}", lineno)
        self.seen.add(key)
        self.edges.append(key)

    def weight(self, v: int, w, lineno: int):
        if self.n is not None and not 1 <= v <= self.n:
            self.fail(f"weight for vertex {v} outside 1..{self.n}", lineno)
        try:
            w = int(w)
        except ValueError:
            self.fail(f"weight {w!r} is not an integer", lineno)
        if w <= 0:
            self.fail(f"weight of vertex {v} must be positive, got {w}", lineno)
        self.weights[v] = w

    def build(self) -> tuple:
        n = self.n
        if n is None:
            n = max((max(e) for e in self.edges), default=0)
        ws = [self.weights.get(i + 1, 1) for i in range(n)]
        g = WeightedGraph(ws)
        adj = g.adj
        for u, v in self.edges:
            adj[u - 1].add(v - 1)
            adj[v - 1].add(u - 1)
        g.m = len(self.edges)
        g.nw = [ws[i] + sum(ws[j] for j in adj[i]) for i in range(n)]
        return g, bool(self.weights)


def _ints(tokens, b: _Builder, lineno: int) -> list:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        b.fail(f"expected integers, got {' '.join(tokens)!r}", lineno)


def _parse_dimacs(lines, path) -> tuple:
    b = _Builder(path)
    declared_m = None
    for lineno, line in enumerate(lines, 1):
        tok = line.split()
        if not tok or tok[0] == "c":
            continue
        kind = tok[0]
        if kind == "p":
            if b.n is not None:
                b.fail("second problem line", lineno)
            if len(tok) != 4 or tok[1] not in ("edge", "col", "clique"):
                b.fail("malformed header, expected 'p edge <n> <m>'", lineno)
            b.n, declared_m = _ints(tok[2:], b, lineno)
            if b.n < 0 or declared_m < 0:
                b.fail("negative counts in header", lineno)
        elif kind == "e":
            if b.n is None:
                b.fail("edge before problem line", lineno)
            if len(tok) != 3:
                b.fail("malformed edge line", lineno)
            u, v = _ints(tok[1:], b, lineno)
            b.edge(u, v, lineno)
        elif kind in ("n", "v"):
            if b.n is None:
                b.fail("vertex weight before problem line", lineno)
            if len(tok) != 3:
                b.fail("malformed vertex weight line", lineno)
            (v,) = _ints(tok[1:2], b, lineno)
            b.weight(v, tok[2], lineno)
        else:
            b.fail(f"unknown line type {kind!r}", lineno)
    if b.n is None:
        raise ParseError("missing problem line", None, path)
    if declared_m is not None and declared_m != len(b.edges):
        raise ParseError(f"header declares {declared_m} edges, found {len(b.edges)}", None, path)
    return b.build()


def _parse_metis(lines, path) -> tuple:
    b = _Builder(path)
    header = None
    weighted = False
    vertex = 0
    half_edges = 0
    for lineno, line in enumerate(lines, 1):
        stripped = line.strip()
        if stripped.startswith("%"):
            continue
        tok = stripped.split()
        if header is None:
            if not tok:
                continue
            if len(tok) not in (2, 3):
                b.fail("malformed header, expected '<n> <m> [fmt]'", lineno)
            fmt = tok[2] if len(tok) == 3 else "0"
            if fmt not in ("0", "00", "000", "10", "010"):
                b.fail(f"unsupported METIS fmt {fmt!r} (only 0 and 10)", lineno)
            weighted = fmt.lstrip("0") == "10"
            n, m = _ints(tok[:2], b, lineno)
            b.n = n
            header = (n, m, lineno)
            continue
        vertex += 1
        if vertex > b.n:
            if tok:
                b.fail(f"more than {b.n} adjacency lines", lineno)
            continue
        vals = _ints(tok, b, lineno)
        if weighted:
            if not vals:
                b.fail(f"missing weight for vertex {vertex}", lineno)
            b.weight(vertex, vals[0], lineno)
            vals = vals[1:]
        row = set()
        for u in vals:
            if u == vertex:
                b.fail(f"self-loop on vertex {u}", lineno)
            if not 1 <= u <= b.n:
                b.fail(f"neighbour {u} outside 1..{b.n}", lineno)
            if u in row:
                b.fail(f"duplicate edge {vertex} {u}", lineno)
            row.add(u)
            half_edges += 1
            if u > vertex:
                b.edges.append((vertex, u))
                b.seen.add((vertex, u))
            elif (u, vertex) not in b.seen:
                b.fail(f"edge {vertex} {u} not listed at vertex {u}", lineno)
    if header is None:
        raise ParseError("missing header", None, path)
    n, m, hl = header
    if vertex < n:
        raise ParseError(f"expected {n} adjacency lines, found {vertex}", None, path)
    if half_edges != 2 * len(b.edges):
        raise ParseError("adjacency lists are not symmetric", None, path)
    if m != len(b.edges):
        raise ParseError(f"header declares {m} edges, found {len(b.edges)}", hl, path)
    return b.build()


def _parse_edgelist(lines, path) -> tuple:
    b = _Builder(path)
    for lineno, line in enumerate(lines, 1):
        tok = line.split()
        if not tok or tok[0][0] in "#%":
            continue
        if len(tok) != 2:
            b.fail("expected '<u> <v>'", lineno)
        u, v = _ints(tok, b, lineno)
        b.edge(u, v, lineno)
    return b.build()


_PARSERS = {"dimacs": _parse_dimacs, "metis": _parse_metis, "edgelist": _parse_edgelist}


def parse_text(text: str, fmt: str = "dimacs", path: Optional[str] = None) -> tuple:
    """Parse instance text; returns ``(graph, has_weights)``."""
    if fmt not in _PARSERS:
        raise ValueError(f"unknown format {fmt!r}")
    return _PARSERS[fmt](text.splitlines(), path)


def load_instance(path: str, fmt: Optional[str] = None) -> InstanceFile:
    fmt = fmt or detect_format(path)
    if path.endswith(".gz"):
        import gzip

        with gzip.open(path, "rt") as f:
            text = f.read()
    else:
        with open(path) as f:
            text = f.read()
    g, weighted = parse_text(text, fmt, path)
    return InstanceFile(path, fmt, g, weighted)


def parse_instance(path: str, fmt: Optional[str] = None) -> WeightedGraph:
    return load_instance(path, fmt).graph


def assign_weights(g: WeightedGraph, seed: int, lo: int = WEIGHT_RANGE[0], hi: int = WEIGHT_RANGE[1]) -> WeightedGraph:
    """Overwrite every vertex weight with an i.i.d. draw from ``{lo, ..., hi}``.

    Draws go to vertices in id order, dead vertices included, so the mapping
    from seed to weights depends only on the vertex count.
    """
    r = Xoshiro256(seed)
    ws = [r.randint(lo, hi) for _ in range(g.capacity)]
    for v in g.vertices():
        g.set_weight(v, ws[v])
    return g


def dumps_dimacs(g: WeightedGraph, comment: Optional[str] = None) -> str:
    h = g
    if g.n != g.capacity:
        from .graph import compact

        h, _ = compact(g)
    out = []
    if comment:
        out.extend(f"c {line}" for line in comment.splitlines())
    out.append(f"p edge {h.n} {h.m}")
    out.extend(f"n {v + 1} {h.weight[v]}" for v in range(h.n))
    out.extend(f"e {u + 1} {v + 1}" for u, v in sorted(h.edges()))
    return "\n".join(out) + "\n"


def dumps_metis(g: WeightedGraph) -> str:
    h = g
    if g.n != g.capacity:
        from .graph import compact

        h, _ = compact(g)
    out = [f"{h.n} {h.m} 10"]
    for v in range(h.n):
        out.append(" ".join([str(h.weight[v])] + [str(u + 1) for u in sorted(h.adj[v])]))
    return "\n".join(out) + "\n"


def dumps_edgelist(g: WeightedGraph) -> str:
    return "".join(f"{u + 1} {v + 1}\n" for u, v in sorted(g.edges()))


def write_instance(g: WeightedGraph, path: str, fmt: Optional[str] = None, comment: Optional[str] = None):
    fmt = fmt or detect_format(path)
    if fmt == "dimacs":
        text = dumps_dimacs(g, comment)
    elif fmt == "metis":
        text = dumps_metis(g)
    elif fmt == "edgelist":
        text = dumps_edgelist(g)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w") as f:
        f.write(text)
