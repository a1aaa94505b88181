from __future__ import annotations

import argparse

from app.core.config import (
    DEFAULT_DEPTH_CAP,
    DEFAULT_FACE_BUDGET,
    DEFAULT_PD_CAP,
    DEFAULT_PROPM_BUDGET,
    AppConfig,
    default_jobs,
)
from app.core.suites import Suite
from app.ui.utils import parse_chars, parse_probability, positive_int

PROG = "ei"


def _family_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph family")
    g.add_argument("--family", help="path, cycle, complete, complete_bipartite, pentagon_chain, pendant_path, "
                                    "figure1_tree, lattice_subgraph, random_gnp, random_chordal, random_long, random_lattice, empty")
    g.add_argument("--n", type=int, default=0, help="main size parameter")
    g.add_argument("--m", type=int, default=0, help="other side of K_{m,n}; box side of random-lattice")
    g.add_argument("--d", type=int, default=2, help="lattice dimension for random-lattice")
    g.add_argument("--p", type=parse_probability, default=(1, 2), help="edge probability num/den (default 1/2)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--coords", help="file of lattice points, one per line")


def _solver_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("solver")
    g.add_argument("--chars", type=parse_chars, default=(2,), help="comma-separated primes (default 2)")
    g.add_argument("--jobs", type=positive_int, default=None, help="worker processes (default $EI_JOBS or 1)")
    g.add_argument("--force", action="store_true", help="run Hochster enumeration above the size cap")
    g.add_argument("--face-budget", type=positive_int, default=DEFAULT_FACE_BUDGET)
    g.add_argument("--pd-cap", type=positive_int, default=DEFAULT_PD_CAP)
    g.add_argument("--depth-cap", type=positive_int, default=DEFAULT_DEPTH_CAP)
    g.add_argument("--propm-budget", type=positive_int, default=DEFAULT_PROPM_BUDGET)
    g.add_argument("--json", action="store_true", help="machine-readable output")
    g.add_argument("--out", help="write the JSON report to this file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=PROG, description="Edge-ideal invariants, domination parameters and bound checks.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="compute every invariant of one graph")
    inv.add_argument("-i", "--input", help="edge-list or graph6 file, - for stdin")
    inv.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")
    inv.add_argument("--no-checks", action="store_true", help="skip the bound checks")
    _family_flags(inv)
    _solver_flags(inv)

    ver = sub.add_parser("verify", help="run a verification corpus")
    ver.add_argument("--suite", type=Suite.parse, default=Suite.ALL,
                     help="paper_golden, random, chordal, long, lattice or all")
    ver.add_argument("--n-max", type=positive_int, default=10)
    ver.add_argument("--seeds", type=positive_int, default=20, help="graphs per size")
    ver.add_argument("--csv", help="write the per-rule summary as CSV")
    _solver_flags(ver)

    gen = sub.add_parser("gen", help="write a family member as text")
    gen.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    gen.add_argument("-o", "--output", help="output file (default stdout)")
    _family_flags(gen)
    return parser


def config_from_args(args: argparse.Namespace) -> AppConfig:
    """Resolve parsed flags into an AppConfig; gen has no solver flags and keeps the defaults."""
    jobs = getattr(args, "jobs", None)
    return AppConfig(
        chars=getattr(args, "chars", (2,)),
        jobs=jobs if jobs is not None else default_jobs(),
        force=getattr(args, "force", False),
        json=getattr(args, "json", False),
        out=getattr(args, "out", None),
        csv=getattr(args, "csv", None),
        face_budget=getattr(args, "face_budget", DEFAULT_FACE_BUDGET),
        pd_cap=getattr(args, "pd_cap", DEFAULT_PD_CAP),
        depth_cap=getattr(args, "depth_cap", DEFAULT_DEPTH_CAP),
        propm_budget=getattr(args, "propm_budget", DEFAULT_PROPM_BUDGET),
    )
