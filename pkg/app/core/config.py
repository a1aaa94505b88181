from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Optional

DEFAULT_FACE_BUDGET = 1 << 24
DEFAULT_PD_CAP = 16
DEFAULT_SOFT_WARN_N = 16
DEFAULT_DEPTH_CAP = 6
DEFAULT_PROPM_BUDGET = 200_000


@dataclass(frozen=True)
class SolverConfig:
    """Numerical knobs shared by the homology and Hochster engines."""
    face_budget: int = DEFAULT_FACE_BUDGET
    pd_cap: int = DEFAULT_PD_CAP
    soft_warn_n: int = DEFAULT_SOFT_WARN_N
    force: bool = False
    jobs: int = 1


@dataclass(frozen=True)
class AppConfig:
    """Application-wide configuration resolved from the command line."""
    chars: tuple[int, ...] = (2,)
    jobs: int = 1
    force: bool = False
    json: bool = False
    out: Optional[str] = None
    csv: Optional[str] = None
    face_budget: int = DEFAULT_FACE_BUDGET
    pd_cap: int = DEFAULT_PD_CAP
    depth_cap: int = DEFAULT_DEPTH_CAP
    propm_budget: int = DEFAULT_PROPM_BUDGET

    @property
    def solver_config(self) -> SolverConfig:
        """Get SolverConfig from this config."""
        return SolverConfig(
            face_budget=self.face_budget,
            pd_cap=self.pd_cap,
            force=self.force,
            jobs=self.jobs,
        )

    @classmethod
    def from_env(cls, **overrides) -> AppConfig:
        """Defaults with ``jobs`` taken from EI_JOBS, then explicit overrides."""
        return replace(cls(jobs=default_jobs()), **overrides)


def default_jobs() -> int:
    """Worker count from EI_JOBS, 1 when unset or unparsable."""
    raw = os.environ.get("EI_JOBS", "").strip()
    try:
        jobs = int(raw)
    except ValueError:
        return 1
    return max(jobs, 1)
