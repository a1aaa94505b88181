from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from app.core.bounds import BoundCheck, verify_graph
from app.core.config import AppConfig
from app.core.domination import DominationReport, SolverResult
from app.core.graph import Graph, members
from app.core.hochster import HochsterResult, Witness
from app.core.services import InvariantService
from app.data.loader import write_graph6

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class GraphIdentity:
    source: str
    n: int
    edges: int
    graph6: str

    @classmethod
    def of(cls, g: Graph, source: str) -> GraphIdentity:
        return cls(source, g.n, g.edge_count, write_graph6(g))


@dataclass(frozen=True)
class InvariantReport:
    """Everything computed for one graph; serializes to a stable JSON schema."""
    identity: GraphIdentity
    hochster: tuple[HochsterResult, ...]
    domination: DominationReport
    chromatic_complement: int
    ind_dimension: int
    flags: dict[str, bool]
    checks: tuple[BoundCheck, ...] = ()
    characteristic_disagreements: tuple[dict, ...] = field(default=())

    @property
    def violations(self) -> list[BoundCheck]:
        return [c for c in self.checks if c.violated]

    def as_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "graph": {
                "source": self.identity.source,
                "n": self.identity.n,
                "edges": self.identity.edges,
                "graph6": self.identity.graph6,
            },
            "hochster": {str(h.p): _hochster_dict(h) for h in self.hochster},
            "domination": {
                "gamma": _solver_dict(self.domination.gamma),
                "i": _solver_dict(self.domination.idom),
                "gamma0": _solver_dict(self.domination.gamma0),
                "tau": _solver_dict(self.domination.tau),
                "epsilon": _solver_dict(self.domination.epsilon),
            },
            "chromatic_complement": self.chromatic_complement,
            "ind_dimension": self.ind_dimension,
            "flags": dict(self.flags),
            "checks": [c.as_dict() for c in self.checks],
            "characteristic_disagreements": list(self.characteristic_disagreements),
        }

    def to_json(self) -> str:
        return dumps(self.as_dict())


def dumps(payload: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _witness_dict(w: Optional[Witness]) -> Optional[dict]:
    if w is None:
        return None
    return {"subset": members(w.subset), "k": w.k}


def _hochster_dict(h: HochsterResult) -> dict:
    return {
        "pd": h.pd,
        "reg": h.reg,
        "bh": h.bh,
        "pd_witness": _witness_dict(h.pd_witness),
        "reg_witness": _witness_dict(h.reg_witness),
    }


def _solver_dict(r: SolverResult) -> dict:
    return {
        "value": r.value,
        "witness": [list(x) if isinstance(x, tuple) else x for x in r.witness],
        "reason": r.reason or None,
    }


def characteristic_disagreements(results: Sequence[HochsterResult]) -> tuple[dict, ...]:
    """pd and reg values that differ between characteristics, listed per invariant."""
    out = []
    for name in ("pd", "reg"):
        values = {str(h.p): getattr(h, name) for h in results}
        if len(set(values.values())) > 1:
            out.append({"invariant": name, "values": values})
    return tuple(out)


def build_report(
    g: Graph,
    source: str,
    config: AppConfig = AppConfig(),
    service: Optional[InvariantService] = None,
    with_checks: bool = True,
) -> InvariantReport:
    """Compute the full report; raises InfeasibleSizeError above the pd cap without force."""
    svc = service or InvariantService(g, config.solver_config)
    results = tuple(svc.get_hochster(p) for p in config.chars)
    checks: tuple[BoundCheck, ...] = ()
    if with_checks:
        checks = tuple(verify_graph(g, config.chars, svc, config.depth_cap, config.propm_budget))
    return InvariantReport(
        identity=GraphIdentity.of(g, source),
        hochster=results,
        domination=svc.get_domination(),
        chromatic_complement=svc.get_chromatic_complement(),
        ind_dimension=svc.get_ind_dimension(),
        flags=svc.get_flags(),
        checks=checks,
        characteristic_disagreements=characteristic_disagreements(results),
    )
