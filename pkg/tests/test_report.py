import json

import pytest

from app.core.bounds import RuleId
from app.core.config import AppConfig, default_jobs
from app.core.errors import InfeasibleSizeError
from app.core.graph import Graph
from app.core.hochster import HochsterResult
from app.core.report import build_report, characteristic_disagreements, dumps
from app.core.stats import checks_frame, invariants_table, rule_summary, violation_count, write_csv
from app.data.families import cycle, path


def test_report_payload():
    report = build_report(cycle(5), "c5.txt", AppConfig(chars=(2, 3)))
    payload = report.as_dict()
    assert payload["schema_version"] == 1
    assert payload["graph"] == {"source": "c5.txt", "n": 5, "edges": 5, "graph6": "Dhc"}
    assert payload["hochster"]["2"]["pd"] == 3
    assert payload["hochster"]["3"]["reg"] == 2
    assert payload["domination"]["epsilon"]["value"] == 2
    assert payload["domination"]["gamma0"]["reason"] is None
    assert payload["chromatic_complement"] == 3
    assert payload["ind_dimension"] == 1
    assert payload["flags"] == {"chordal": False, "long": True, "claw_free": True, "connected": True}
    assert payload["characteristic_disagreements"] == []
    assert report.violations == []


def test_report_json_is_canonical():
    text = build_report(path(4), "p4").to_json()
    assert text.endswith("}\n")
    assert json.loads(text)["hochster"]["2"]["pd_witness"]["subset"] == [0, 1, 2]
    assert text == dumps(json.loads(text))


def test_report_without_checks():
    report = build_report(path(4), "p4", with_checks=False)
    assert report.checks == ()


def test_report_undefined_parameters():
    payload = build_report(Graph.empty(2), "empty").as_dict()
    assert payload["domination"]["tau"] == {"value": None, "witness": [], "reason": "graph has isolated vertices"}


def test_report_respects_size_cap():
    with pytest.raises(InfeasibleSizeError):
        build_report(path(6), "p6", AppConfig(pd_cap=5))


def test_characteristic_disagreements():
    a = HochsterResult(2, 5, 3, 4)
    b = HochsterResult(3, 4, 3, 4)
    assert characteristic_disagreements((a, b)) == ({"invariant": "pd", "values": {"2": 5, "3": 4}},)
    assert characteristic_disagreements((a,)) == ()


def test_stats_frames(tmp_path):
    report = build_report(path(5), "p5")
    frame = checks_frame(("p5", c) for c in report.checks)
    assert list(frame.columns) == ["graph", "rule", "p", "verdict", "bound", "actual", "reason"]
    assert violation_count(frame) == 0
    summary = rule_summary(frame)
    assert list(summary.columns) == ["holds", "violated", "inapplicable"]
    assert summary.index[0] == RuleId.PD_EDGEDOM.value
    assert summary.loc["PD_ZELL", "inapplicable"] == 1
    out = tmp_path / "summary.csv"
    write_csv(summary, str(out))
    assert out.read_text().startswith("rule,holds,violated,inapplicable")

    table = invariants_table(report)
    values = dict(zip(table["invariant"], table["value"]))
    assert values["pd (p=2)"] == "3"
    assert values["chordal"] == "yes"


def test_empty_summary():
    frame = checks_frame([])
    assert rule_summary(frame).empty
    assert violation_count(frame) == 0


def test_default_jobs(monkeypatch):
    monkeypatch.setenv("EI_JOBS", "3")
    assert default_jobs() == 3
    assert AppConfig.from_env(force=True).jobs == 3
    monkeypatch.setenv("EI_JOBS", "many")
    assert default_jobs() == 1
