"""Named graph families and seeded random generators."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from app.core.errors import InvalidParamsError
from app.core.graph import MAX_VERTICES, Coords, Graph

# 7-vertex tree with i = gamma = 3 whose two degree-3 vertices 0 and 1 are adjacent
FIGURE1_TREE_EDGES = ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (5, 6))


class Family(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    PENTAGON_CHAIN = "pentagon_chain"
    PENDANT_PATH = "pendant_path"
    FIGURE1_TREE = "figure1_tree"
    LATTICE_SUBGRAPH = "lattice_subgraph"
    RANDOM_GNP = "random_gnp"
    RANDOM_CHORDAL = "random_chordal"
    RANDOM_LONG = "random_long"
    RANDOM_LATTICE = "random_lattice"
    EMPTY = "empty"

    @classmethod
    def parse(cls, name: str) -> Family:
        key = name.strip().lower().replace("-", "_")
        aliases = {"lattice": cls.LATTICE_SUBGRAPH, "gnp": cls.RANDOM_GNP, "figure1": cls.FIGURE1_TREE}
        if key in aliases:
            return aliases[key]
        try:
            return cls(key)
        except ValueError:
            raise InvalidParamsError(f"unknown family {name!r}") from None


@dataclass(frozen=True)
class FamilySpec:
    """Family plus its integer parameters.

    ``n`` is the main size; ``m`` is the second side of K_{m,n} or the box side
    of random_lattice; ``d`` is the lattice dimension; edge probability is
    ``p_num / p_den``.
    """
    family: Family
    n: int = 0
    m: int = 0
    d: int = 2
    p_num: int = 1
    p_den: int = 2
    seed: int = 0
    coords: Optional[Coords] = None

    @property
    def label(self) -> str:
        parts = [self.family.value]
        if self.family in (Family.FIGURE1_TREE, Family.LATTICE_SUBGRAPH):
            return parts[0]
        parts.append(f"n={self.n}")
        if self.family in (Family.COMPLETE_BIPARTITE, Family.RANDOM_LATTICE):
            parts.append(f"m={self.m}")
        if self.family in (Family.RANDOM_GNP, Family.RANDOM_LONG):
            parts.append(f"p={self.p_num}/{self.p_den}")
        if self.family.value.startswith("random"):
            parts.append(f"seed={self.seed}")
        return " ".join(parts)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidParamsError(message)


def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    """K_{m,n} with sides 0..m-1 and m..m+n-1."""
    _require(m >= 1 and n >= 1, "complete bipartite graph needs m, n >= 1")
    return Graph.from_edges(m + n, [(u, m + v) for u in range(m) for v in range(n)])


def pentagon_chain(n: int) -> Graph:
    """Q_n: pentagon i on 5i..5i+4; vertex 5i+2 joins vertex 5(i+1) of the next pentagon."""
    _require(n >= 1, "pentagon chain needs n >= 1")
    edges = []
    for i in range(n):
        base = 5 * i
        edges.extend((base + j, base + (j + 1) % 5) for j in range(5))
        if i + 1 < n:
            edges.append((base + 2, base + 5))
    return Graph.from_edges(5 * n, edges)


def pendant_path(n: int) -> Graph:
    """T_n: path v_1..v_{4n} on 0..4n-1, pendant w_i = 4n+i-1 on v_{4(i-1)+1}."""
    _require(n >= 1, "pendant path needs n >= 1")
    length = 4 * n
    edges = [(i, i + 1) for i in range(length - 1)]
    edges.extend((4 * i, length + i) for i in range(n))
    return Graph.from_edges(5 * n, edges)


def figure1_tree() -> Graph:
    return Graph.from_edges(7, FIGURE1_TREE_EDGES)


def lattice_subgraph(coords: Coords) -> Graph:
    """Induced subgraph of Z^l on the given points: unit L1 distance means adjacent."""
    points = [tuple(int(c) for c in p) for p in coords]
    _require(len(set(points)) == len(points), "lattice points must be distinct")
    dims = {len(p) for p in points}
    _require(len(dims) <= 1, "lattice points must share one dimension")
    _require(not dims or dims.pop() >= 1, "lattice dimension must be at least 1")
    edges = [
        (u, v)
        for u in range(len(points))
        for v in range(u + 1, len(points))
        if sum(abs(a - b) for a, b in zip(points[u], points[v])) == 1
    ]
    return Graph.from_edges(len(points), edges, coords=points)


def _edge_probability(spec: FamilySpec) -> tuple[int, int]:
    _require(spec.p_den >= 1 and 0 <= spec.p_num <= spec.p_den, "edge probability must lie in [0, 1]")
    return spec.p_num, spec.p_den


def random_gnp(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    """G(n, p) with exact integer coin flips over pairs in lexicographic order."""
    _require(n >= 0, "random graph needs n >= 0")
    rng = np.random.default_rng(seed)
    flips = rng.integers(0, p_den, size=n * (n - 1) // 2)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [pair for pair, flip in zip(pairs, flips) if flip < p_num])


def random_chordal(n: int, seed: int) -> Graph:
    """Each new vertex attaches to a random subset of a random clique built so far."""
    _require(n >= 1, "random chordal graph needs n >= 1")
    rng = np.random.default_rng(seed)
    cliques: list[list[int]] = [[0]]
    edges = []
    for v in range(1, n):
        clique = cliques[int(rng.integers(0, len(cliques)))]
        keep = rng.integers(0, 2, size=len(clique))
        nbrs = [u for u, k in zip(clique, keep) if k]
        edges.extend((u, v) for u in nbrs)
        cliques.append(nbrs + [v])
    return Graph.from_edges(n, edges)


def subdivide_heavy_edges(g: Graph) -> Graph:
    """Subdivide every edge whose endpoints both have degree > 2; the result is long."""
    heavy = [g.degree(v) > 2 for v in range(g.n)]
    edges = []
    extra = g.n
    for u, v in g.edges():
        if heavy[u] and heavy[v]:
            edges.extend([(u, extra), (extra, v)])
            extra += 1
        else:
            edges.append((u, v))
    _require(extra <= MAX_VERTICES, f"subdivision needs {extra} vertices, above the cap {MAX_VERTICES}")
    return Graph.from_edges(extra, edges)


def random_long(n: int, p_num: int, p_den: int, seed: int) -> Graph:
    return subdivide_heavy_edges(random_gnp(n, p_num, p_den, seed))


def random_lattice(n: int, side: int, dim: int, seed: int) -> Graph:
    """n distinct random points of the box {0..side-1}^dim, with induced unit-distance edges."""
    _require(dim >= 1 and side >= 1, "lattice box needs side, dimension >= 1")
    _require(0 <= n <= side ** dim, f"cannot place {n} points in a box of {side ** dim} cells")
    rng = np.random.default_rng(seed)
    cells = np.sort(rng.choice(side ** dim, size=n, replace=False))
    points = [tuple(int(c) for c in np.unravel_index(int(cell), (side,) * dim)) for cell in cells]
    return lattice_subgraph(tuple(points))


def generate(spec: FamilySpec) -> Graph:
    """Deterministic graph for ``spec``; raises InvalidParamsError on bad parameters."""
    f = spec.family
    if f is Family.PATH:
        return path(spec.n)
    if f is Family.CYCLE:
        return cycle(spec.n)
    if f is Family.COMPLETE:
        return complete(spec.n)
    if f is Family.COMPLETE_BIPARTITE:
        return complete_bipartite(spec.m, spec.n)
    if f is Family.PENTAGON_CHAIN:
        return pentagon_chain(spec.n)
    if f is Family.PENDANT_PATH:
        return pendant_path(spec.n)
    if f is Family.FIGURE1_TREE:
        return figure1_tree()
    if f is Family.EMPTY:
        _require(spec.n >= 0, "empty graph needs n >= 0")
        return Graph.empty(spec.n)
    if f is Family.LATTICE_SUBGRAPH:
        _require(spec.coords is not None, "lattice_subgraph needs coordinates")
        return lattice_subgraph(spec.coords)
    if f is Family.RANDOM_GNP:
        return random_gnp(spec.n, *_edge_probability(spec), spec.seed)
    if f is Family.RANDOM_CHORDAL:
        return random_chordal(spec.n, spec.seed)
    if f is Family.RANDOM_LONG:
        return random_long(spec.n, *_edge_probability(spec), spec.seed)
    if f is Family.RANDOM_LATTICE:
        return random_lattice(spec.n, spec.m or 4, spec.d, spec.seed)
    raise InvalidParamsError(f"unsupported family {f}")
