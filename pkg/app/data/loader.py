from __future__ import annotations

import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Union

import networkx as nx

from app.core.errors import LoopEdgeError, ParseError
from app.core.graph import MAX_VERTICES, Coords, Graph

logger = logging.getLogger(__name__)

GRAPH6_HEADER = ">>graph6<<"
_G6_SUFFIXES = {".g6", ".graph6"}


@dataclass(frozen=True)
class LoadConfig:
    fmt: str = "auto"  # auto | edgelist | graph6


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    """(1-based line number, stripped line) skipping blanks and '#' comments."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _parse_int(token: str, number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", number) from None
    if value < 0:
        raise ParseError(f"negative vertex index {value}", number)
    return value


def parse_edgelist(text: str) -> Graph:
    """Edge list: one ``u v`` pair per line, optional ``n <count>`` header.

    Without a header the vertex count is the largest index plus one.
    Repeated edges are accepted and collapse to one.
    """
    declared = None
    edges: list[tuple[int, int]] = []
    for number, line in _content_lines(text):
        tokens = line.split()
        if tokens[0] == "n":
            if len(tokens) != 2:
                raise ParseError("header must read 'n <count>'", number)
            if declared is not None:
                raise ParseError("duplicate 'n' header", number)
            declared = _parse_int(tokens[1], number)
            if declared > MAX_VERTICES:
                raise ParseError(f"vertex count {declared} above the cap {MAX_VERTICES}", number)
            continue
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", number)
        u, v = _parse_int(tokens[0], number), _parse_int(tokens[1], number)
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}", number)
        if max(u, v) >= MAX_VERTICES:
            raise ParseError(f"vertex {max(u, v)} above the cap {MAX_VERTICES - 1}", number)
        if declared is not None and max(u, v) >= declared:
            raise ParseError(f"vertex {max(u, v)} outside 0..{declared - 1}", number)
        edges.append((u, v))

    n = declared
    if n is None:
        n = max((max(e) for e in edges), default=-1) + 1
    elif any(max(e) >= n for e in edges):
        raise ParseError(f"edge outside 0..{n - 1}")
    return Graph.from_edges(n, edges)


def write_edgelist(g: Graph) -> str:
    """Header plus one line per edge; the header keeps isolated vertices."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_networkx(g: Graph) -> nx.Graph:
    """networkx view of ``g`` with nodes inserted as 0..n-1."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_networkx(h: nx.Graph) -> Graph:
    """Bitmask graph from a networkx graph whose nodes are relabelled in sorted order."""
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    if len(index) > MAX_VERTICES:
        raise ParseError(f"graph has {len(index)} vertices, above the cap {MAX_VERTICES}")
    return Graph.from_edges(len(index), ((index[u], index[v]) for u, v in h.edges()))


def write_graph6(g: Graph) -> str:
    """Standard graph6 string without header or newline."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; an optional ``>>graph6<<`` header is skipped.

    Only the canonical encoding is accepted, so nonzero padding bits are an error.
    """
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 1:
        raise ParseError(f"expected exactly one graph6 line, found {len(lines)}")
    data = lines[0]
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise ParseError("empty graph6 string", 1)
    try:
        h = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError, IndexError) as exc:
        raise ParseError(f"invalid graph6: {exc}", 1) from None
    g = from_networkx(h)
    if write_graph6(g) != data:
        raise ParseError("graph6 string is not canonical (padding or trailing bytes)", 1)
    return g


def parse_coords(text: str) -> Coords:
    """One lattice point per line, integers separated by spaces or commas."""
    points = []
    for number, line in _content_lines(text):
        tokens = line.replace(",", " ").split()
        try:
            points.append(tuple(int(t) for t in tokens))
        except ValueError:
            raise ParseError(f"expected integer coordinates, got {line!r}", number) from None
    dims = {len(p) for p in points}
    if len(dims) > 1:
        raise ParseError(f"points of mixed dimension {sorted(dims)}")
    return tuple(points)


def read_source(source: Union[str, Path]) -> str:
    """File contents, or standard input for ``-``."""
    if str(source) == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None


def detect_format(source: Union[str, Path], text: str) -> str:
    if Path(str(source)).suffix.lower() in _G6_SUFFIXES or text.lstrip().startswith(GRAPH6_HEADER):
        return "graph6"
    return "edgelist"


def load_graph(source: Union[str, Path], cfg: LoadConfig = LoadConfig()) -> Graph:
    """Read a graph from a file (or ``-``) in edge-list or graph6 format."""
    text = read_source(source)
    fmt = detect_format(source, text) if cfg.fmt == "auto" else cfg.fmt
    logger.debug("loading %s as %s", source, fmt)
    if fmt == "graph6":
        return parse_graph6(text)
    if fmt == "edgelist":
        return parse_edgelist(text)
    raise ParseError(f"unknown input format {fmt!r}")


def dump_graph(g: Graph, fmt: str = "edgelist") -> str:
    if fmt == "graph6":
        return write_graph6(g) + "\n"
    if fmt == "edgelist":
        return write_edgelist(g)
    raise ParseError(f"unknown output format {fmt!r}")

