from __future__ import annotations

from typing import Iterable

import pandas as pd

from app.core.bounds import BoundCheck, RuleId, Verdict, encode_extended
from app.core.report import InvariantReport

VERDICT_COLUMNS = [v.value for v in Verdict]


def checks_frame(rows: Iterable[tuple[str, BoundCheck]]) -> pd.DataFrame:
    """
    One row per (graph label, check).
    Columns: graph, rule, p, verdict, bound, actual, reason.
    """
    records = [
        {
            "graph": label,
            "rule": c.rule_id.value,
            "p": c.p,
            "verdict": c.verdict.value,
            "bound": encode_extended(c.bound_value),
            "actual": encode_extended(c.actual_value),
            "reason": c.reason,
        }
        for label, c in rows
    ]
    return pd.DataFrame(records, columns=["graph", "rule", "p", "verdict", "bound", "actual", "reason"])


def rule_summary(frame: pd.DataFrame) -> pd.DataFrame:
    """
    Per-rule verdict counts, rules in declaration order.
    Returns a frame indexed by rule with columns holds / violated / inapplicable.
    """
    if frame.empty:
        return pd.DataFrame(columns=VERDICT_COLUMNS, dtype=int).rename_axis("rule")
    counts = pd.crosstab(frame["rule"], frame["verdict"])
    counts = counts.reindex(columns=VERDICT_COLUMNS, fill_value=0)
    order = [r.value for r in RuleId if r.value in counts.index]
    return counts.loc[order].astype(int).rename_axis("rule").rename_axis(None, axis=1)


def violation_count(frame: pd.DataFrame) -> int:
    if frame.empty:
        return 0
    return int((frame["verdict"] == Verdict.VIOLATED.value).sum())


def invariants_table(report: InvariantReport) -> pd.DataFrame:
    """Two-column view (invariant, value) of a report for terminal output."""
    rows: list[tuple[str, object]] = [
        ("n", report.identity.n),
        ("edges", report.identity.edges),
        ("graph6", report.identity.graph6),
    ]
    for h in report.hochster:
        rows += [(f"pd (p={h.p})", h.pd), (f"reg (p={h.p})", h.reg)]
    if report.hochster:
        rows.append(("bh", report.hochster[0].bh))
    for name, value in report.domination.as_dict().items():
        rows.append((name, "undefined" if value is None else value))
    rows += [
        ("chi(G^c)", report.chromatic_complement),
        ("dim ind", report.ind_dimension),
    ]
    rows += [(flag, "yes" if on else "no") for flag, on in report.flags.items()]
    for d in report.characteristic_disagreements:
        rows.append((f"{d['invariant']} differs", ", ".join(f"p={p}: {v}" for p, v in d["values"].items())))
    return pd.DataFrame(rows, columns=["invariant", "value"]).astype({"value": str})


def write_csv(frame: pd.DataFrame, path: str) -> None:
    frame.to_csv(path, index=frame.index.name is not None)
