from __future__ import annotations

import logging
from typing import Dict, Optional

from app.core.config import SolverConfig
from app.core.domination import (
    DominationReport,
    SolverResult,
    chromatic_number,
    epsilon,
    gamma,
    gamma0,
    idom,
    tau,
)
from app.core.graph import (
    Graph,
    complement,
    independence_number,
    is_chordal,
    is_claw_free,
    is_connected,
    is_long,
)
from app.core.hochster import HochsterResult, pd_reg
from app.core.homology import HomologyProfile, reduced_homology

logger = logging.getLogger(__name__)

_SOLVERS = {"gamma": gamma, "i": idom, "gamma0": gamma0, "tau": tau, "epsilon": epsilon}


class InvariantService:
    """Per-graph cache of every invariant the checks and reports read."""

    def __init__(self, graph: Graph, config: Optional[SolverConfig] = None):
        self.graph = graph
        self.config = config or SolverConfig()
        self._hochster_cache: Dict[int, HochsterResult] = {}
        self._homology_cache: Dict[int, HomologyProfile] = {}
        self._solver_cache: Dict[str, SolverResult] = {}
        self._subgraph_pd_cache: Dict[tuple[Graph, int], int] = {}
        self._chromatic: Optional[int] = None
        self._alpha: Optional[int] = None
        self._flags: Optional[Dict[str, bool]] = None

    def get_hochster(self, p: int) -> HochsterResult:
        """pd, reg and bh at characteristic p, with caching."""
        if p not in self._hochster_cache:
            self._hochster_cache[p] = pd_reg(self.graph, p, self.config)
        return self._hochster_cache[p]

    def get_pd(self, p: int) -> int:
        return self.get_hochster(p).pd

    def get_homology(self, p: int) -> HomologyProfile:
        """Reduced Betti numbers of ind(G) itself, with caching."""
        if p not in self._homology_cache:
            self._homology_cache[p] = reduced_homology(self.graph, p, self.config.face_budget)
        return self._homology_cache[p]

    def get_solver(self, name: str) -> SolverResult:
        """One of gamma, i, gamma0, tau, epsilon."""
        if name not in self._solver_cache:
            self._solver_cache[name] = _SOLVERS[name](self.graph)
        return self._solver_cache[name]

    def get_domination(self) -> DominationReport:
        return DominationReport(
            gamma=self.get_solver("gamma"),
            idom=self.get_solver("i"),
            gamma0=self.get_solver("gamma0"),
            tau=self.get_solver("tau"),
            epsilon=self.get_solver("epsilon"),
        )

    def get_chromatic_complement(self) -> int:
        """chi(G^c)."""
        if self._chromatic is None:
            self._chromatic = chromatic_number(complement(self.graph))
        return self._chromatic

    def get_independence_number(self) -> int:
        if self._alpha is None:
            self._alpha = independence_number(self.graph)
        return self._alpha

    def get_ind_dimension(self) -> int:
        return self.get_independence_number() - 1

    def get_flags(self) -> Dict[str, bool]:
        """Structural recognition results."""
        if self._flags is None:
            g = self.graph
            self._flags = {
                "chordal": is_chordal(g),
                "long": is_long(g),
                "claw_free": is_claw_free(g),
                "connected": is_connected(g),
            }
        return self._flags

    def pd_of(self, h: Graph, p: int) -> int:
        """pd of a derived graph (G - x, G - st x, ...) at characteristic p."""
        key = (h, p)
        if key not in self._subgraph_pd_cache:
            if h == self.graph:
                self._subgraph_pd_cache[key] = self.get_pd(p)
            else:
                self._subgraph_pd_cache[key] = pd_reg(h, p, self.config).pd
        return self._subgraph_pd_cache[key]

