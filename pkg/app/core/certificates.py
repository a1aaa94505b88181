"""Inductive certificates for pd(G) <= |V(G)| - f(G).

A certificate is a nonempty sequence of distinct vertices v_1..v_k. With
G_i = G - v_1 - ... - v_i it must satisfy

    step:  f(G_i - st v_{i+1}) + 1 >= f(G)      for 0 <= i < k
    stop:  f(G_k minus its isolated vertices) + |is(G_k)| >= f(G)

Subgraphs are tracked as masks of the original vertex labels, so every
recorded vertex is an original index.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterator, Optional, Union

from app.core.config import DEFAULT_DEPTH_CAP
from app.core.domination import epsilon_extended, gamma, idom
from app.core.graph import (
    Graph,
    VertexSet,
    alpha_max_edge,
    bit,
    find_simplicial_vertex,
    induced_subgraph,
    iter_members,
    k1m_order,
    members,
)

logger = logging.getLogger(__name__)

Value = Union[int, Fraction]


class FId(str, Enum):
    EPSILON = "epsilon"
    GAMMA = "gamma"
    IDOM = "idom"
    N_OVER_H = "n_over_h"


def h_value(g: Graph) -> Fraction:
    """d + ((m-1)/m) e + 1 for the least m with G free of induced K_{1,m+1}; 1 when edgeless."""
    if g.edge_count == 0:
        return Fraction(1)
    m = k1m_order(g)
    alpha = Fraction(m - 1, m)
    edge = alpha_max_edge(g, alpha)
    return edge.d + alpha * edge.e + 1


def f_value(g: Graph, f_id: FId) -> Value:
    if f_id is FId.EPSILON:
        return epsilon_extended(g)
    if f_id is FId.GAMMA:
        return gamma(g).value
    if f_id is FId.IDOM:
        return idom(g).value
    return Fraction(g.n) / h_value(g)


@dataclass(frozen=True)
class StepCheck:
    index: int
    vertex: int
    value: Value  # f(G_i - st v_{i+1}) + 1


@dataclass(frozen=True)
class MECertificate:
    f_id: FId
    n: int
    f_value: Value
    sequence: tuple[int, ...]
    steps: tuple[StepCheck, ...]
    final_value: Value  # f(G_k bar) + |is(G_k)|

    @property
    def pd_bound(self) -> int:
        """Largest integer allowed by pd <= n - f(G)."""
        return math.floor(self.n - self.f_value)

    def as_dict(self) -> dict:
        return {
            "f": self.f_id.value,
            "f_value": str(self.f_value),
            "sequence": list(self.sequence),
            "steps": [[s.vertex, str(s.value)] for s in self.steps],
            "final_value": str(self.final_value),
            "pd_bound": self.pd_bound,
        }


class _Evaluator:
    """f on induced subgraphs of one graph, memoized by vertex mask."""

    def __init__(self, g: Graph, f_id: FId):
        self.g = g
        self.f_id = f_id
        self._cache: dict[VertexSet, Value] = {}

    def f(self, mask: VertexSet) -> Value:
        if mask not in self._cache:
            self._cache[mask] = f_value(induced_subgraph(self.g, mask).graph, self.f_id)
        return self._cache[mask]

    def step_value(self, remaining: VertexSet, v: int) -> Value:
        star = (self.g.adj[v] & remaining) | bit(v)
        return self.f(remaining & ~star) + 1

    def stop_value(self, remaining: VertexSet) -> Value:
        lonely = 0
        for u in iter_members(remaining):
            if self.g.adj[u] & remaining == 0:
                lonely |= bit(u)
        return self.f(remaining & ~lonely) + lonely.bit_count()


def _walk(ev: _Evaluator, sequence: tuple[int, ...]) -> Optional[MECertificate]:
    g = ev.g
    if not sequence or len(set(sequence)) != len(sequence) or any(not 0 <= v < g.n for v in sequence):
        return None
    target = ev.f(g.vertices)
    remaining = g.vertices
    steps = []
    for i, v in enumerate(sequence):
        value = ev.step_value(remaining, v)
        if value < target:
            return None
        steps.append(StepCheck(i, v, value))
        remaining &= ~bit(v)
    final = ev.stop_value(remaining)
    if final < target:
        return None
    return MECertificate(ev.f_id, g.n, target, tuple(sequence), tuple(steps), final)


def _neighbour_order(g: Graph, y: int) -> tuple[int, ...]:
    """N(y) ordered so each v_i has maximal degree inside G[{v_1..v_i}], filled from the back."""
    pool = g.adj[y]
    order: list[int] = []
    while pool:
        pick = max(iter_members(pool), key=lambda v: ((g.adj[v] & pool).bit_count(), -v))
        order.append(pick)
        pool &= ~bit(pick)
    return tuple(reversed(order))


def seed_sequences(g: Graph, f_id: FId) -> Iterator[tuple[int, ...]]:
    """Sequences read off the standard proofs, tried before the general search."""
    anchor = next((v for v in range(g.n) if g.adj[v]), None)
    if anchor is None:
        return
    yield tuple(members(g.adj[anchor]))
    if f_id in (FId.GAMMA, FId.IDOM):
        v = find_simplicial_vertex(g)
        if v is not None:
            for w in iter_members(g.adj[v]):
                yield (w,)
    if f_id is FId.N_OVER_H:
        m = k1m_order(g)
        edge = alpha_max_edge(g, Fraction(m - 1, m))
        yield _neighbour_order(g, edge.y)


def search_me_certificate(g: Graph, f_id: FId, depth_cap: int = DEFAULT_DEPTH_CAP) -> Optional[MECertificate]:
    """First certificate in deterministic order, or None.

    Proof-derived seeds come first; then sequences are searched by increasing
    length up to ``depth_cap`` and lexicographically within a length.
    """
    f_id = FId(f_id)
    if g.edge_count == 0:
        return None
    ev = _Evaluator(g, f_id)
    for seed in seed_sequences(g, f_id):
        cert = _walk(ev, seed)
        if cert is not None:
            logger.debug("%s certificate from seed %s", f_id.value, seed)
            return cert

    target = ev.f(g.vertices)
    # a failure depends only on the removed set and the remaining depth
    failed: dict[VertexSet, int] = {}

    def dfs(remaining: VertexSet, sequence: list[int], budget: int) -> Optional[tuple[int, ...]]:
        if sequence and ev.stop_value(remaining) >= target:
            return tuple(sequence)
        if budget == 0 or failed.get(remaining, -1) >= budget:
            return None
        for v in iter_members(remaining):
            if ev.step_value(remaining, v) < target:
                continue
            sequence.append(v)
            found = dfs(remaining & ~bit(v), sequence, budget - 1)
            sequence.pop()
            if found is not None:
                return found
        failed[remaining] = budget
        return None

    for depth in range(1, depth_cap + 1):
        found = dfs(g.vertices, [], depth)
        if found is not None:
            logger.debug("%s certificate of length %d by search", f_id.value, depth)
            return _walk(ev, found)
    logger.info("no %s certificate within depth %d", f_id.value, depth_cap)
    return None


def replay_certificate(g: Graph, cert: MECertificate) -> bool:
    """Recompute every recorded value from scratch and re-check both conditions."""
    if cert.n != g.n:
        return False
    fresh = _walk(_Evaluator(g, cert.f_id), cert.sequence)
    return fresh == cert
