"""Brute-force reference values for small graphs (n <= 8)."""
from __future__ import annotations

from itertools import combinations, product

from app.core.graph import Graph, vertex_set


def _subsets(n: int, r: int):
    for combo in combinations(range(n), r):
        yield combo, vertex_set(combo)


def _independent(g: Graph, mask: int) -> bool:
    return all(g.adj[v] & mask == 0 for v in range(g.n) if mask >> v & 1)


def _closed_union(g: Graph, combo) -> int:
    out = 0
    for v in combo:
        out |= g.adj[v] | 1 << v
    return out


def _open_union(g: Graph, combo) -> int:
    out = 0
    for v in combo:
        out |= g.adj[v]
    return out


def alpha(g: Graph) -> int:
    return max(r for r in range(g.n + 1) for _, m in _subsets(g.n, r) if _independent(g, m))


def gamma(g: Graph) -> int:
    for r in range(g.n + 1):
        if any(_closed_union(g, c) == g.vertices for c, _ in _subsets(g.n, r)):
            return r
    raise AssertionError("unreachable")


def idom(g: Graph) -> int:
    for r in range(g.n + 1):
        for c, m in _subsets(g.n, r):
            if _independent(g, m) and _closed_union(g, c) == g.vertices:
                return r
    raise AssertionError("unreachable")


def gamma0_of(g: Graph, x: int) -> int:
    for r in range(g.n + 1):
        if any(_open_union(g, c) & x == x for c, _ in _subsets(g.n, r)):
            return r
    raise AssertionError("X has an isolated vertex")


def gamma0(g: Graph) -> int:
    return gamma0_of(g, g.vertices)


def tau(g: Graph) -> int:
    return max(
        gamma0_of(g, m)
        for r in range(g.n + 1)
        for _, m in _subsets(g.n, r)
        if _independent(g, m)
    )


def epsilon(g: Graph) -> int:
    edges = g.edges()
    for r in range(len(edges) + 1):
        for chosen in combinations(edges, r):
            cover = 0
            for a, b in chosen:
                cover |= g.adj[a] | g.adj[b]
            if cover == g.vertices:
                return r
    raise AssertionError("graph has isolated vertices")


def chromatic(g: Graph) -> int:
    if g.n == 0:
        return 0
    for k in range(1, g.n + 1):
        for colours in product(range(k), repeat=g.n):
            if all(colours[u] != colours[v] for u, v in g.edges()):
                return k
    raise AssertionError("unreachable")


def has_induced_cycle_over_3(g: Graph) -> bool:
    """Chordality the slow way: look for an induced cycle of length >= 4."""
    for r in range(4, g.n + 1):
        for combo, mask in _subsets(g.n, r):
            if all((g.adj[v] & mask).bit_count() == 2 for v in combo):
                # 2-regular induced subgraph: chordless iff it is one cycle
                start, prev, cur, length = combo[0], -1, combo[0], 0
                while True:
                    nxt = next(u for u in combo if g.adj[cur] >> u & 1 and u != prev)
                    prev, cur, length = cur, nxt, length + 1
                    if cur == start:
                        break
                if length == r:
                    return True
    return False


def claw_free(g: Graph) -> bool:
    for v in range(g.n):
        nb = [u for u in range(g.n) if g.adj[v] >> u & 1]
        for trio in combinations(nb, 3):
            if _independent(g, vertex_set(trio)):
                return False
    return True


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rows = [[x % p for x in r] for r in rows]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col]
                rows[i] = [(a - factor * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def reduced_betti(g: Graph, p: int) -> tuple[int, ...]:
    """Reduced Betti numbers of ind(G) over GF(p), (beta_{-1}, ..., beta_dim), from scratch."""
    faces: list[list[tuple[int, ...]]] = []
    for r in range(g.n + 1):
        layer = [c for c, m in _subsets(g.n, r) if _independent(g, m)]
        if not layer:
            break
        faces.append(layer)

    def rank_of_boundary(size: int) -> int:
        # boundary from faces with `size` vertices to faces with size - 1
        if size == 0 or size >= len(faces):
            return 0
        index = {f: i for i, f in enumerate(faces[size - 1])}
        matrix = [[0] * len(faces[size]) for _ in faces[size - 1]]
        for j, face in enumerate(faces[size]):
            for pos in range(len(face)):
                matrix[index[face[:pos] + face[pos + 1:]]][j] = (-1) ** pos
        return _rank_mod_p(matrix, p)

    ranks = [rank_of_boundary(s) for s in range(len(faces) + 1)]
    return tuple(len(faces[s]) - ranks[s] - ranks[s + 1] for s in range(len(faces)))
