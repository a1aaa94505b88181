import logging
import math
from fractions import Fraction

import pytest

from app.core.bounds import (
    HOM_RULES,
    PD_RULES,
    BoundCheck,
    RuleId,
    Verdict,
    check_all,
    check_characteristics,
    check_domination,
    check_homology_vanishing,
    check_propm,
    compare,
    distance3_set,
    encode_extended,
    verify_graph,
    violations,
)
from app.core.config import SolverConfig
from app.core.graph import Graph, disjoint_union
from app.core.services import InvariantService
from app.data.families import (
    complete,
    complete_bipartite,
    cycle,
    figure1_tree,
    path,
    pentagon_chain,
    random_chordal,
    random_gnp,
    random_lattice,
)


def _by_rule(checks):
    out = {}
    for c in checks:
        out.setdefault(c.rule_id, []).append(c)
    return out


@pytest.mark.parametrize(
    "g",
    [path(7), cycle(6), cycle(7), complete(4), complete_bipartite(2, 3), pentagon_chain(1), figure1_tree()]
    + [random_gnp(7, 1, 2, seed) for seed in range(5)]
    + [random_chordal(8, seed) for seed in range(3)]
    + [random_lattice(8, 4, 2, seed) for seed in range(3)],
)
def test_no_violations_on_small_graphs(g):
    checks = verify_graph(g, (2, 3))
    assert violations(checks) == []


def test_rule_coverage_and_order():
    checks = check_all(path(6), 2)
    assert [c.rule_id for c in checks][-4:] == [
        RuleId.REG_CHROMATIC, RuleId.LEMMA_PDINDUCT, RuleId.LEMMA_PROPM, RuleId.ME_EPSILON,
    ]
    assert {c.rule_id for c in checks} == set(PD_RULES)
    assert all(c.p == 2 for c in checks)
    assert {c.rule_id for c in check_homology_vanishing(path(6), 2)} == set(HOM_RULES)


def test_chordal_rules():
    rules = _by_rule(check_all(path(6), 2))
    eq = rules[RuleId.PD_CHORDAL_EQ][0]
    assert eq.verdict is Verdict.HOLDS and eq.actual_value == 4 and eq.bound_value == 4
    assert rules[RuleId.PD_MAXDEGREE][0].bound_value == 4

    rules = _by_rule(check_all(cycle(5), 2))
    assert rules[RuleId.PD_CHORDAL_EQ][0].verdict is Verdict.INAPPLICABLE


def test_isolated_vertices_skip_total_rules():
    g = disjoint_union(path(4), Graph.empty(1))
    rules = _by_rule(check_all(g, 2))
    for rule in (RuleId.PD_TAU, RuleId.PD_LOWER_GAMMA0, RuleId.AMALGAM):
        assert rules[rule][0].verdict is Verdict.INAPPLICABLE
        assert not rules[rule][0].hypothesis_met
    assert rules[RuleId.PD_LOWER_I][0].verdict is Verdict.HOLDS
    assert rules[RuleId.ME_EPSILON][0].verdict is Verdict.HOLDS


def test_edge_domination_bound_counts_isolated_vertices():
    edgedom = _by_rule(check_all(disjoint_union(path(4), Graph.empty(1)), 2))[RuleId.PD_EDGEDOM][0]
    assert edgedom.hypothesis_met and edgedom.verdict is Verdict.HOLDS
    assert (edgedom.bound_value, edgedom.actual_value) == (3, 2)

    edgedom = _by_rule(check_all(Graph.empty(3), 3))[RuleId.PD_EDGEDOM][0]
    assert (edgedom.bound_value, edgedom.actual_value, edgedom.verdict) == (0, 0, Verdict.HOLDS)


def test_edgeless_graph():
    checks = verify_graph(Graph.empty(3))
    assert violations(checks) == []
    rules = _by_rule(checks)
    assert rules[RuleId.ME_EPSILON][0].verdict is Verdict.INAPPLICABLE
    assert rules[RuleId.PD_MCONDITION][0].verdict is Verdict.INAPPLICABLE


def test_oversized_graph_skips_pd_rules():
    svc = InvariantService(path(6), SolverConfig(pd_cap=4))
    checks = check_all(path(6), 2, svc)
    assert len(checks) == len(PD_RULES)
    assert all(c.verdict is Verdict.INAPPLICABLE for c in checks)
    hom = _by_rule(check_homology_vanishing(path(6), 2, svc))
    assert hom[RuleId.HOM_PD][0].verdict is Verdict.INAPPLICABLE
    assert hom[RuleId.HOM_EPSILON][0].verdict is Verdict.HOLDS


def test_homology_actual_is_first_nonzero_degree():
    rules = _by_rule(check_homology_vanishing(cycle(5), 2))
    assert rules[RuleId.HOM_PD][0].actual_value == 1
    assert rules[RuleId.HOM_PD][0].bound_value == 1
    rules = _by_rule(check_homology_vanishing(path(4), 2))
    assert rules[RuleId.HOM_TAU][0].actual_value == math.inf


def test_lattice_rules_need_coordinates():
    rules = _by_rule(verify_graph(path(5)))
    assert rules[RuleId.PD_ZELL][0].verdict is Verdict.INAPPLICABLE
    rules = _by_rule(verify_graph(random_lattice(9, 4, 2, 1)))
    assert rules[RuleId.PD_ZELL][0].hypothesis_met
    assert rules[RuleId.HOM_LATTICE][0].bound_value == Fraction(9, 5) - 1


def test_distance3_set():
    assert distance3_set(path(7)) == [0, 3, 6]
    assert distance3_set(complete(4)) == [0]


def test_check_propm():
    assert check_propm(complete(4), 2).verdict is Verdict.HOLDS
    assert check_propm(complete(4), 2).bound_value == 3
    assert check_propm(Graph.empty(3), 2).verdict is Verdict.INAPPLICABLE
    assert check_propm(path(3), 1).verdict is Verdict.INAPPLICABLE
    assert not check_propm(random_gnp(12, 1, 2, 0), 6, budget=10).hypothesis_met


def test_domination_checks():
    rules = _by_rule(check_domination(figure1_tree()))
    assert rules[RuleId.DOM_LONG][0].verdict is Verdict.INAPPLICABLE
    assert rules[RuleId.DOM_GAMMA_IND][0].verdict is Verdict.HOLDS
    assert rules[RuleId.DOM_TAU_GAMMA][0].verdict is Verdict.HOLDS
    assert rules[RuleId.DOM_EPS_GAMMA0][0].verdict is Verdict.HOLDS
    assert len(rules[RuleId.DOM_DELETE]) == 2

    rules = _by_rule(check_domination(cycle(7)))
    assert rules[RuleId.DOM_LONG][0].verdict is Verdict.HOLDS
    assert rules[RuleId.DOM_CLAW_FREE][0].verdict is Verdict.HOLDS
    assert rules[RuleId.DOM_DELETE][0].verdict is Verdict.INAPPLICABLE


def test_domination_rules_report_one_inequality_each():
    rules = _by_rule(check_domination(cycle(6)))
    assert (rules[RuleId.DOM_GAMMA_IND][0].actual_value, rules[RuleId.DOM_GAMMA_IND][0].bound_value) == (2, 2)
    assert (rules[RuleId.DOM_TAU_GAMMA][0].actual_value, rules[RuleId.DOM_TAU_GAMMA][0].bound_value) == (2, 2)
    assert (rules[RuleId.DOM_EPS_GAMMA0][0].actual_value, rules[RuleId.DOM_EPS_GAMMA0][0].bound_value) == (4, 4)

    rules = _by_rule(check_domination(disjoint_union(path(3), Graph.empty(1))))
    assert rules[RuleId.DOM_GAMMA_IND][0].verdict is Verdict.HOLDS
    for rule in (RuleId.DOM_TAU_GAMMA, RuleId.DOM_EPS_GAMMA0, RuleId.DOM_ALH):
        assert rules[rule][0].verdict is Verdict.INAPPLICABLE


def test_characteristic_agreement():
    assert check_characteristics(path(5), (2, 3)).verdict is Verdict.HOLDS
    assert check_characteristics(path(5), (2,)).verdict is Verdict.INAPPLICABLE
    assert check_characteristics(cycle(5), (2, 3)).reason == "not chordal"


def test_compare_and_logging(caplog):
    assert compare(RuleId.GOLDEN_VALUE, "eq", 3, 3).verdict is Verdict.HOLDS
    with caplog.at_level(logging.WARNING, logger="app.core.bounds"):
        check = compare(RuleId.GOLDEN_VALUE, "le", 5, 4, "pd le 4", p=2)
    assert check.violated
    assert "GOLDEN_VALUE violated" in caplog.text


def test_encode_extended():
    assert encode_extended(None) is None
    assert encode_extended(Fraction(3, 2)) == "3/2"
    assert encode_extended(Fraction(4, 2)) == 2
    assert encode_extended(math.inf) == "inf"
    assert encode_extended(7) == 7


def test_bound_check_as_dict():
    check = BoundCheck(RuleId.PD_TAU, True, "tau = 2", 4, 3, Verdict.HOLDS, 2)
    assert check.as_dict() == {
        "rule": "PD_TAU",
        "p": 2,
        "hypothesis_met": True,
        "reason": "tau = 2",
        "bound": 4,
        "actual": 3,
        "verdict": "holds",
    }
