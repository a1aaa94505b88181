"""Exact domination parameters, chromatic number and independence-complex dimension.

Graphs with isolated vertices have no gamma0, tau or epsilon; those solvers
return an infeasible ``SolverResult`` instead of raising.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from app.core.graph import (
    Graph,
    VertexSet,
    bit,
    closed_neighborhood,
    complement,
    independence_number,
    isolated_vertices,
    iter_members,
    members,
    strip_isolated,
)
from app.core.setcover import min_set_cover

logger = logging.getLogger(__name__)

ISOLATED_REASON = "graph has isolated vertices"


@dataclass(frozen=True)
class SolverResult:
    """Optimal value with a witness; ``value`` is None when the parameter is undefined."""
    value: Optional[int]
    witness: tuple = ()
    reason: str = ""

    @property
    def feasible(self) -> bool:
        return self.value is not None

    @classmethod
    def infeasible(cls, reason: str) -> SolverResult:
        return cls(None, (), reason)


@dataclass(frozen=True)
class DominationReport:
    gamma: SolverResult
    idom: SolverResult
    gamma0: SolverResult
    tau: SolverResult
    epsilon: SolverResult

    def as_dict(self) -> dict[str, Optional[int]]:
        return {
            "gamma": self.gamma.value,
            "i": self.idom.value,
            "gamma0": self.gamma0.value,
            "tau": self.tau.value,
            "epsilon": self.epsilon.value,
        }


def gamma(g: Graph) -> SolverResult:
    """Minimum dominating set; isolated vertices are forced into every solution."""
    sets = [closed_neighborhood(g, v) for v in range(g.n)]
    chosen = min_set_cover(g.vertices, sets)
    return SolverResult(len(chosen), tuple(chosen))


def idom(g: Graph) -> SolverResult:
    """Minimum independent dominating set (equivalently, smallest maximal independent set)."""
    closed = [closed_neighborhood(g, v) for v in range(g.n)]

    def greedy() -> list[int]:
        undominated, allowed, chosen = g.vertices, g.vertices, []
        while undominated:
            a = max(iter_members(allowed), key=lambda x: ((closed[x] & undominated).bit_count(), -x))
            chosen.append(a)
            undominated &= ~closed[a]
            allowed &= ~closed[a]
        return chosen

    best = greedy()

    def search(undominated: VertexSet, allowed: VertexSet, chosen: list[int]) -> None:
        nonlocal best
        if not undominated:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        gain = max(((closed[a] & undominated).bit_count() for a in iter_members(allowed)), default=0)
        if gain == 0:
            return
        if len(chosen) + -(-undominated.bit_count() // gain) >= len(best):
            return
        pivot = min(iter_members(undominated), key=lambda u: ((closed[u] & allowed).bit_count(), u))
        options = sorted(iter_members(closed[pivot] & allowed), key=lambda a: (-(closed[a] & undominated).bit_count(), a))
        for a in options:
            chosen.append(a)
            search(undominated & ~closed[a], allowed & ~closed[a], chosen)
            chosen.pop()

    search(g.vertices, g.vertices, [])
    return SolverResult(len(best), tuple(sorted(best)))


def gamma0_of(g: Graph, x: VertexSet) -> SolverResult:
    """Least |A| with X inside N(A); A may meet X."""
    x &= g.vertices
    lonely = [v for v in iter_members(x) if g.adj[v] == 0]
    if lonely:
        return SolverResult.infeasible(f"vertex {lonely[0]} of X has no neighbour")
    sets = [g.adj[a] & x for a in range(g.n)]
    chosen = min_set_cover(x, sets)
    return SolverResult(len(chosen), tuple(chosen))


def gamma0(g: Graph) -> SolverResult:
    if isolated_vertices(g):
        return SolverResult.infeasible(ISOLATED_REASON)
    return gamma0_of(g, g.vertices)


def maximal_independent_sets(g: Graph) -> Iterator[VertexSet]:
    """Bron-Kerbosch with pivoting, run on the complement (independent sets are its cliques)."""
    full = g.vertices
    non_adj = [full & ~g.adj[v] & ~bit(v) for v in range(g.n)]

    def expand(r: VertexSet, p: VertexSet, x: VertexSet) -> Iterator[VertexSet]:
        if not p and not x:
            yield r
            return
        pivot = max(iter_members(p | x), key=lambda u: ((p & non_adj[u]).bit_count(), -u))
        for v in iter_members(p & ~non_adj[pivot]):
            yield from expand(r | bit(v), p & non_adj[v], x & non_adj[v])
            p &= ~bit(v)
            x |= bit(v)

    if g.n == 0:
        yield 0
        return
    yield from expand(0, full, 0)


def tau(g: Graph) -> SolverResult:
    """max gamma0(A, G) over independent A; attained on a maximal independent set."""
    if isolated_vertices(g):
        return SolverResult.infeasible(ISOLATED_REASON)
    best_value, best_set = -1, 0
    for a in sorted(maximal_independent_sets(g), key=members):
        value = gamma0_of(g, a).value
        if value > best_value:
            best_value, best_set = value, a
    return SolverResult(best_value, tuple(members(best_set)))


def epsilon(g: Graph) -> SolverResult:
    """Fewest edges whose endpoints' neighbourhoods cover V; the witness is an edge tuple."""
    if isolated_vertices(g):
        return SolverResult.infeasible(ISOLATED_REASON)
    edges = g.edges()
    sets = [g.adj[a] | g.adj[b] for a, b in edges]
    chosen = min_set_cover(g.vertices, sets)
    return SolverResult(len(chosen), tuple(edges[i] for i in chosen))


def epsilon_extended(g: Graph) -> int:
    """epsilon(G-bar) + |is(G)|, the value the inductive edgewise bound uses on any graph."""
    lonely = isolated_vertices(g).bit_count()
    return epsilon(strip_isolated(g)).value + lonely


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR branch and bound with a clique lower bound."""
    if g.n == 0:
        return 0
    lower = independence_number(complement(g))
    colors = [-1] * g.n

    def pick(uncolored: VertexSet) -> int:
        def key(v: int) -> tuple[int, int, int]:
            sat = len({colors[u] for u in iter_members(g.adj[v]) if colors[u] >= 0})
            return (sat, g.degree(v), -v)

        return max(iter_members(uncolored), key=key)

    def greedy() -> int:
        uncolored = g.vertices
        used = 0
        while uncolored:
            v = pick(uncolored)
            taken = {colors[u] for u in iter_members(g.adj[v])}
            colors[v] = next(c for c in range(g.n) if c not in taken)
            used = max(used, colors[v] + 1)
            uncolored &= ~bit(v)
        colors[:] = [-1] * g.n
        return used

    best = greedy()

    def search(uncolored: VertexSet, used: int) -> None:
        nonlocal best
        if best == lower:
            return
        if not uncolored:
            best = min(best, used)
            return
        v = pick(uncolored)
        taken = {colors[u] for u in iter_members(g.adj[v])}
        for c in range(min(used + 1, best - 1)):
            if c in taken:
                continue
            colors[v] = c
            search(uncolored & ~bit(v), max(used, c + 1))
            colors[v] = -1

    search(g.vertices, 0)
    logger.debug("chromatic number %d (clique bound %d)", best, lower)
    return best


def ind_dimension(g: Graph) -> int:
    """dim ind(G) = alpha(G) - 1; -1 for the graph with no vertices."""
    return independence_number(g) - 1


def domination_report(g: Graph) -> DominationReport:
    return DominationReport(
        gamma=gamma(g),
        idom=idom(g),
        gamma0=gamma0(g),
        tau=tau(g),
        epsilon=epsilon(g),
    )
