from __future__ import annotations

import argparse
import logging

from app.core.config import AppConfig
from app.core.report import build_report, dumps
from app.core.stats import checks_frame, invariants_table, rule_summary, violation_count, write_csv
from app.core.suites import SuiteParams, run_suite
from app.data.families import generate
from app.data.loader import dump_graph
from app.ui.base import CommandHandler, emit
from app.ui.components import data_table, kpi_line
from app.ui.data_loader import family_spec, load_data

logger = logging.getLogger(__name__)


def cmd_invariants(args: argparse.Namespace, config: AppConfig) -> int:
    g, source = load_data(args)
    report = build_report(g, source, config, with_checks=not args.no_checks)
    if config.out:
        emit(report.to_json(), config.out)
    if config.json:
        emit(report.to_json())
    else:
        emit(data_table(invariants_table(report), caption=f"graph: {source}"))
        if report.checks:
            frame = checks_frame((source, c) for c in report.checks)
            emit(data_table(frame.drop(columns=["graph"]), caption="bound checks"))
    for c in report.violations:
        logger.error("bound %s violated: %s (bound %s, actual %s)", c.rule_id.value, c.reason, c.bound_value, c.actual_value)
    return 1 if report.violations else 0


def cmd_verify(args: argparse.Namespace, config: AppConfig) -> int:
    params = SuiteParams(
        suite=args.suite,
        n_max=args.n_max,
        seeds=args.seeds,
        chars=config.chars,
        jobs=config.jobs,
        depth_cap=config.depth_cap,
        propm_budget=config.propm_budget,
        face_budget=config.face_budget,
        pd_cap=config.pd_cap,
    )
    result = run_suite(params)
    frame = checks_frame(result.rows())
    summary = rule_summary(frame)
    if config.out:
        emit(dumps(result.as_dict()), config.out)
    if config.csv:
        write_csv(summary, config.csv)
    if config.json:
        emit(dumps(result.as_dict()))
    else:
        emit(kpi_line({"suite": params.suite.value, "graphs": len(result.items), "checks": len(frame),
                       "violations": violation_count(frame)}))
        emit(data_table(summary, index=True))
        failed = frame[frame["verdict"] == "violated"]
        if not failed.empty:
            emit(data_table(failed, caption="violations"))
    return 1 if result.violation_count else 0


def cmd_gen(args: argparse.Namespace, config: AppConfig) -> int:
    g = generate(family_spec(args))
    emit(dump_graph(g, args.format), args.output)
    return 0


COMMANDS: dict[str, CommandHandler] = {
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "gen": cmd_gen,
}
