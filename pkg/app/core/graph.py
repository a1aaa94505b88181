"""Bit-packed finite simple graphs and the vertex-set operations the inductions use.

A vertex set is a plain ``int`` bitmask (bit ``v`` set means vertex ``v`` is a
member). Graphs are immutable; every operation returns a new graph with
vertices compacted to ``0..k-1`` in ascending order of the original labels.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from app.core.errors import InvalidParamsError, LoopEdgeError, NoEdgesError, VertexCapError

MAX_VERTICES = 64

VertexSet = int
Coords = tuple[tuple[int, ...], ...]


def bit(v: int) -> VertexSet:
    return 1 << v


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Pack an iterable of vertex indices into a bitmask."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise InvalidParamsError(f"negative vertex index {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Ascending list of the vertices in ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def size(mask: VertexSet) -> int:
    return mask.bit_count()


def lowest(mask: VertexSet) -> int:
    """Smallest member of a nonempty mask."""
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``0..n-1`` with neighbourhood bitmasks.

    ``coords`` is only present for graphs embedded in an integer lattice; any
    two adjacent vertices are then at L1-distance exactly one.
    """
    n: int
    adj: tuple[VertexSet, ...]
    coords: Optional[Coords] = None

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise VertexCapError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise InvalidParamsError("adjacency length does not match n")
        full = self.vertices
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise InvalidParamsError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise LoopEdgeError(f"loop at vertex {v}")
            for u in iter_members(nb):
                if not self.adj[u] >> v & 1:
                    raise InvalidParamsError(f"edge {v}-{u} is not symmetric")
        if self.coords is not None:
            if len(self.coords) != self.n:
                raise InvalidParamsError("coords length does not match n")
            for u, v in self.edges():
                if _l1(self.coords[u], self.coords[v]) != 1:
                    raise InvalidParamsError(f"lattice edge {u}-{v} is not a unit step")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        coords: Optional[Sequence[Sequence[int]]] = None,
    ) -> Graph:
        """Build a graph from an edge iterable; duplicate edges are idempotent."""
        if not 0 <= n <= MAX_VERTICES:
            raise VertexCapError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParamsError(f"edge {u}-{v} outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        frozen = None if coords is None else tuple(tuple(int(c) for c in p) for p in coords)
        return cls(n, tuple(adj), frozen)

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n, (0,) * n)

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)


class Subgraph(NamedTuple):
    graph: Graph
    labels: tuple[int, ...]  # labels[new_index] = original index


class AlphaMaxEdge(NamedTuple):
    x: int
    y: int
    d: int
    e: int


def _l1(p: Sequence[int], q: Sequence[int]) -> int:
    return sum(abs(a - b) for a, b in zip(p, q))


def induced_subgraph(g: Graph, w: VertexSet) -> Subgraph:
    """G[W], relabelled order-preservingly, with the map back to original labels."""
    w &= g.vertices
    labels = tuple(members(w))
    index = {v: i for i, v in enumerate(labels)}
    adj = []
    for v in labels:
        nb = 0
        for u in iter_members(g.adj[v] & w):
            nb |= 1 << index[u]
        adj.append(nb)
    coords = None if g.coords is None else tuple(g.coords[v] for v in labels)
    return Subgraph(Graph(len(labels), tuple(adj), coords), labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    """G - v."""
    _check_vertex(g, v)
    return induced_subgraph(g, g.vertices & ~bit(v)).graph


def closed_neighborhood(g: Graph, v: int) -> VertexSet:
    return g.adj[v] | bit(v)


def neighborhood_of_set(g: Graph, x: VertexSet) -> VertexSet:
    """N(X), the union of the neighbourhoods of the members of X."""
    out = 0
    for v in iter_members(x):
        out |= g.adj[v]
    return out


def delete_star(g: Graph, v: int) -> Graph:
    """G - st(v) = G[V minus N[v]]."""
    _check_vertex(g, v)
    return induced_subgraph(g, g.vertices & ~closed_neighborhood(g, v)).graph


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~nb & ~bit(v) for v, nb in enumerate(g.adj)))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """A on 0..|A|-1 followed by B shifted up by |A|."""
    shift = a.n
    adj = a.adj + tuple(nb << shift for nb in b.adj)
    coords = None
    if a.coords is not None and b.coords is not None and a.n and b.n:
        # keep the union embedded: push B far enough along the first axis
        offset = max(p[0] for p in a.coords) - min(p[0] for p in b.coords) + 2
        coords = a.coords + tuple((p[0] + offset,) + tuple(p[1:]) for p in b.coords)
    return Graph(a.n + b.n, adj, coords)


def isolated_vertices(g: Graph) -> VertexSet:
    """is(G)."""
    return vertex_set(v for v, nb in enumerate(g.adj) if nb == 0)


def strip_isolated(g: Graph) -> Graph:
    """G-bar = G - is(G)."""
    return induced_subgraph(g, g.vertices & ~isolated_vertices(g)).graph


def is_independent(g: Graph, a: VertexSet) -> bool:
    return all(g.adj[v] & a == 0 for v in iter_members(a))


def is_clique(g: Graph, a: VertexSet) -> bool:
    return all((a & ~bit(v)) & ~g.adj[v] == 0 for v in iter_members(a))


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def find_simplicial_vertex(g: Graph) -> Optional[int]:
    """Smallest vertex with a nonempty neighbourhood that induces a clique."""
    for v in range(g.n):
        if g.adj[v] and is_clique(g, g.adj[v]):
            return v
    return None


def perfect_elimination_ordering(g: Graph) -> Optional[list[int]]:
    """Repeatedly delete the smallest simplicial vertex; None if we get stuck."""
    remaining = g.vertices
    order = []
    while remaining:
        for v in iter_members(remaining):
            if is_clique(g, g.adj[v] & remaining):
                order.append(v)
                remaining &= ~bit(v)
                break
        else:
            return None
    return order


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def is_long(g: Graph) -> bool:
    """The vertices of degree > 2 form an independent set."""
    heavy = vertex_set(v for v in range(g.n) if g.degree(v) > 2)
    return is_independent(g, heavy)


def has_independent_subset(g: Graph, candidates: VertexSet, k: int) -> bool:
    """Whether ``candidates`` contains an independent set of size ``k``."""
    if k <= 0:
        return True
    if candidates.bit_count() < k:
        return False
    v = lowest(candidates)
    rest = candidates & ~bit(v)
    if has_independent_subset(g, rest & ~g.adj[v], k - 1):
        return True
    return has_independent_subset(g, rest, k)


def is_k1m_free(g: Graph, m: int) -> bool:
    """No induced K_{1,m}: no neighbourhood holds an independent m-set."""
    if m < 1:
        raise InvalidParamsError(f"m must be positive, got {m}")
    return not any(has_independent_subset(g, g.adj[v], m) for v in range(g.n))


def is_claw_free(g: Graph) -> bool:
    return is_k1m_free(g, 3)


def max_independent_in_neighborhood(g: Graph) -> int:
    """Largest independent set inside any single N(v); 0 for edgeless graphs."""
    return max((independence_number_of(g, g.adj[v]) for v in range(g.n)), default=0)


def k1m_order(g: Graph) -> int:
    """Least m >= 1 such that G has no induced K_{1,m+1}."""
    return max(1, max_independent_in_neighborhood(g))


def alpha_max_edge(g: Graph, alpha: Fraction) -> AlphaMaxEdge:
    """An edge maximizing deg(x) + alpha*deg(y) over ordered pairs with deg(x) >= deg(y).

    Exact rational arithmetic; ties go to the lexicographically smallest (x, y).
    ``alpha`` may be 0, which the chromatic bound needs when the complement is edgeless.
    """
    alpha = Fraction(alpha)
    if not 0 <= alpha <= 1:
        raise InvalidParamsError(f"alpha must lie in [0, 1], got {alpha}")
    best: Optional[tuple[Fraction, int, int]] = None
    for x in range(g.n):
        dx = g.degree(x)
        for y in iter_members(g.adj[x]):
            dy = g.degree(y)
            if dx < dy:
                continue
            value = dx + alpha * dy
            if best is None or value > best[0]:
                best = (value, x, y)
    if best is None:
        raise NoEdgesError("alpha-max edge of an edgeless graph")
    _, x, y = best
    return AlphaMaxEdge(x, y, g.degree(x), g.degree(y))


def distance(g: Graph, u: int, v: int) -> float:
    """BFS distance; ``math.inf`` between different components."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    seen = bit(u)
    frontier = bit(u)
    steps = 0
    while frontier:
        steps += 1
        frontier = neighborhood_of_set(g, frontier) & ~seen
        if frontier >> v & 1:
            return steps
        seen |= frontier
    return math.inf


def components(g: Graph) -> list[VertexSet]:
    """Connected components as bitmasks, ordered by smallest member."""
    out = []
    unseen = g.vertices
    while unseen:
        start = lowest(unseen)
        comp = bit(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in iter_members(g.adj[x] & ~comp):
                comp |= bit(y)
                queue.append(y)
        out.append(comp)
        unseen &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def independence_number_of(g: Graph, candidates: VertexSet) -> int:
    """Size of a maximum independent set inside ``candidates``."""
    if not candidates:
        return 0
    # a vertex of degree <= 1 inside the candidates is always safe to take
    for v in iter_members(candidates):
        if (g.adj[v] & candidates).bit_count() <= 1:
            return 1 + independence_number_of(g, candidates & ~closed_neighborhood(g, v))
    v = max(iter_members(candidates), key=lambda x: ((g.adj[x] & candidates).bit_count(), -x))
    take = 1 + independence_number_of(g, candidates & ~closed_neighborhood(g, v))
    if take >= candidates.bit_count() - 1:
        return take
    return max(take, independence_number_of(g, candidates & ~bit(v)))


def independence_number(g: Graph) -> int:
    return independence_number_of(g, g.vertices)


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidParamsError(f"vertex {v} outside 0..{g.n - 1}")
