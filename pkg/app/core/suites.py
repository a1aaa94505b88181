"""Verification corpora and the runner that checks every graph in them.

Output order is the corpus order whatever the worker count, so reports are
byte-identical between serial and parallel runs.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

from app.core.bounds import BoundCheck, RuleId, check_domination, compare, verify_graph
from app.core.config import (
    DEFAULT_DEPTH_CAP,
    DEFAULT_FACE_BUDGET,
    DEFAULT_PD_CAP,
    DEFAULT_PROPM_BUDGET,
    SolverConfig,
)
from app.core.errors import InvalidParamsError
from app.core.graph import Graph
from app.core.services import InvariantService
from app.data import families as fam
from app.data.loader import write_edgelist, write_graph6

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
MIN_N = 4
CHORDAL_N_MAX = 12
LATTICE_N_MAX = 12


class Suite(str, Enum):
    PAPER_GOLDEN = "paper_golden"
    RANDOM = "random"
    CHORDAL = "chordal"
    LONG = "long"
    LATTICE = "lattice"
    ALL = "all"

    @classmethod
    def parse(cls, name: str) -> Suite:
        try:
            return cls(name.strip().lower().replace("-", "_"))
        except ValueError:
            raise InvalidParamsError(f"unknown suite {name!r}") from None


@dataclass(frozen=True)
class Expectation:
    """A published value: ``invariant <relation> value`` (relation le, ge or eq)."""
    invariant: str
    relation: str
    value: int


@dataclass(frozen=True)
class CorpusItem:
    label: str
    graph: Graph
    expectations: tuple[Expectation, ...] = ()
    mode: str = "full"  # full | domination | none


@dataclass(frozen=True)
class SuiteParams:
    suite: Suite = Suite.ALL
    n_max: int = 10
    seeds: int = 20
    chars: tuple[int, ...] = (2,)
    jobs: int = 1
    depth_cap: int = DEFAULT_DEPTH_CAP
    propm_budget: int = DEFAULT_PROPM_BUDGET
    face_budget: int = DEFAULT_FACE_BUDGET
    pd_cap: int = DEFAULT_PD_CAP

    def as_dict(self) -> dict:
        return {
            "suite": self.suite.value,
            "n_max": self.n_max,
            "seeds": self.seeds,
            "chars": list(self.chars),
            "depth_cap": self.depth_cap,
        }


@dataclass(frozen=True)
class ItemResult:
    label: str
    graph6: str
    checks: tuple[BoundCheck, ...]
    edgelist: str

    @property
    def violated(self) -> bool:
        return any(c.violated for c in self.checks)


@dataclass(frozen=True)
class SuiteResult:
    params: SuiteParams
    items: tuple[ItemResult, ...] = field(default=())

    def rows(self) -> Iterator[tuple[str, BoundCheck]]:
        for item in self.items:
            for c in item.checks:
                yield item.label, c

    @property
    def violation_count(self) -> int:
        return sum(c.violated for _, c in self.rows())

    def as_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "params": self.params.as_dict(),
            "graphs": [
                {"label": it.label, "graph6": it.graph6, "checks": [c.as_dict() for c in it.checks]}
                for it in self.items
            ],
            "violations": self.violation_count,
        }


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def golden_corpus() -> list[CorpusItem]:
    """Families whose invariants are known in closed form, with the expected values."""
    items = []
    for n in range(2, 13):
        third = _ceil_div(n, 3)
        items.append(CorpusItem(f"path n={n}", fam.path(n), (
            Expectation("pd", "eq", 2 * n // 3),
            Expectation("i", "eq", third),
            Expectation("gamma", "eq", third),
            Expectation("epsilon", "eq", _ceil_div(n, 4)),
            Expectation("tau", "eq", third),
        )))
    for n in range(3, 13):
        third = _ceil_div(n, 3)
        items.append(CorpusItem(f"cycle n={n}", fam.cycle(n), (
            Expectation("pd", "eq", _ceil_div(2 * n - 1, 3)),
            Expectation("i", "eq", third),
            Expectation("gamma", "eq", third),
            Expectation("epsilon", "eq", _ceil_div(n, 4)),
            Expectation("tau", "eq", n // 3),
        )))
    for d in range(1, 5):
        items.append(CorpusItem(f"complete_bipartite m={d} n={d}", fam.complete_bipartite(d, d), (
            Expectation("pd", "eq", 2 * d - 1),
            Expectation("i", "eq", d),
        )))
    for n in range(2, 9):
        items.append(CorpusItem(f"complete n={n}", fam.complete(n), (Expectation("pd", "eq", n - 1),)))
    for n, eps in ((1, 2), (2, 3), (3, 4)):
        expected = [Expectation("epsilon", "eq", eps), Expectation("tau", "eq", n)]
        if n >= 2:
            expected.append(Expectation("epsilon", "le", 2 * n - 1))
        items.append(CorpusItem(f"pentagon_chain n={n}", fam.pentagon_chain(n), tuple(expected)))
    for n in (1, 2):
        items.append(CorpusItem(f"pendant_path n={n}", fam.pendant_path(n), (
            Expectation("epsilon", "eq", n + 1),
            Expectation("tau", "ge", 2 * n),
        )))
    items.append(CorpusItem("figure1_tree", fam.figure1_tree(), (
        Expectation("i", "eq", 3),
        Expectation("gamma", "eq", 3),
        Expectation("long", "eq", 0),
    )))
    return items


def _random_items(n_max: int, seeds: int) -> list[CorpusItem]:
    return [
        CorpusItem(f"random_gnp n={n} p=1/2 seed={s}", fam.random_gnp(n, 1, 2, 1000 * n + s))
        for n in range(MIN_N, n_max + 1)
        for s in range(seeds)
    ]


def _chordal_items(n_max: int, seeds: int) -> list[CorpusItem]:
    return [
        CorpusItem(f"random_chordal n={n} seed={s}", fam.random_chordal(n, 1000 * n + s))
        for n in range(MIN_N, min(n_max, CHORDAL_N_MAX) + 1)
        for s in range(seeds)
    ]


def _long_items(n_max: int, seeds: int) -> list[CorpusItem]:
    """Subdivided random graphs; those grown past n_max get the domination checks only."""
    items = []
    for n in range(MIN_N, n_max + 1):
        for s in range(seeds):
            for label, g in (
                (f"random_long n={n} p=1/3 seed={s}", fam.random_long(n, 1, 3, 1000 * n + s)),
                (f"subdivided random_chordal n={n} seed={s}", fam.subdivide_heavy_edges(fam.random_chordal(n, 1000 * n + s))),
            ):
                items.append(CorpusItem(label, g, mode="full" if g.n <= n_max else "domination"))
    return items


def _lattice_items(n_max: int, seeds: int) -> list[CorpusItem]:
    return [
        CorpusItem(f"random_lattice n={n} side=4 seed={s}", fam.random_lattice(n, 4, 2, 1000 * n + s))
        for n in range(MIN_N, min(n_max, LATTICE_N_MAX) + 1)
        for s in range(seeds)
    ]


def build_corpus(params: SuiteParams) -> list[CorpusItem]:
    """Corpus for one suite, in canonical order."""
    s = params.suite
    items: list[CorpusItem] = []
    if s in (Suite.PAPER_GOLDEN, Suite.ALL):
        items += [
            CorpusItem(it.label, it.graph, it.expectations, "full" if it.graph.n <= params.n_max else "none")
            for it in golden_corpus()
        ]
    if s in (Suite.RANDOM, Suite.ALL):
        items += _random_items(params.n_max, params.seeds)
    if s in (Suite.CHORDAL, Suite.ALL):
        items += _chordal_items(params.n_max, params.seeds)
    if s in (Suite.LONG, Suite.ALL):
        items += _long_items(params.n_max, params.seeds)
    if s in (Suite.LATTICE, Suite.ALL):
        items += _lattice_items(params.n_max, params.seeds)
    return items


def _expectation_checks(item: CorpusItem, svc: InvariantService, chars: tuple[int, ...]) -> list[BoundCheck]:
    out = []
    for e in item.expectations:
        reason = f"{e.invariant} {e.relation} {e.value}"
        if e.invariant == "pd":
            for p in chars:
                out.append(compare(RuleId.GOLDEN_VALUE, e.relation, svc.get_pd(p), e.value, reason, p))
        elif e.invariant == "long":
            out.append(compare(RuleId.GOLDEN_VALUE, e.relation, int(svc.get_flags()["long"]), e.value, reason))
        else:
            out.append(compare(RuleId.GOLDEN_VALUE, e.relation, svc.get_solver(e.invariant).value, e.value, reason))
    return out


def check_item(item: CorpusItem, params: SuiteParams) -> ItemResult:
    """Golden expectations, then the rule set the item's mode asks for."""
    config = SolverConfig(face_budget=params.face_budget, pd_cap=params.pd_cap, jobs=1)
    svc = InvariantService(item.graph, config)
    checks = _expectation_checks(item, svc, params.chars)
    if item.mode == "full":
        checks += verify_graph(item.graph, params.chars, svc, params.depth_cap, params.propm_budget)
    elif item.mode == "domination":
        checks += check_domination(item.graph, svc)
    result = ItemResult(item.label, write_graph6(item.graph), tuple(checks), write_edgelist(item.graph))
    if result.violated:
        logger.warning("violation on %s; edges:\n%s", item.label, result.edgelist)
    return result


def _check_job(args: tuple[CorpusItem, SuiteParams]) -> ItemResult:
    return check_item(*args)


def run_suite(params: SuiteParams, corpus: Optional[list[CorpusItem]] = None) -> SuiteResult:
    items = build_corpus(params) if corpus is None else corpus
    logger.info("suite %s: %d graphs, characteristics %s", params.suite.value, len(items), list(params.chars))
    if params.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=params.jobs) as pool:
            results = list(pool.map(_check_job, [(it, params) for it in items], chunksize=4))
    else:
        results = []
        for k, it in enumerate(items, start=1):
            results.append(check_item(it, params))
            if k % 50 == 0:
                logger.info("checked %d/%d graphs", k, len(items))
    return SuiteResult(params, tuple(results))
