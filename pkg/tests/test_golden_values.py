"""Closed-form values for the standard families, checked through the golden corpus."""
from dataclasses import replace

import pytest

from app.core.bounds import RuleId, Verdict
from app.core.domination import epsilon, gamma, idom, tau
from app.core.graph import is_long
from app.core.hochster import projective_dimension
from app.core.suites import SuiteParams, check_item, golden_corpus
from app.data.families import complete_bipartite, figure1_tree, pendant_path, pentagon_chain


@pytest.mark.parametrize("item", golden_corpus(), ids=lambda it: it.label)
def test_golden_expectations(item):
    result = check_item(replace(item, mode="none"), SuiteParams(chars=(2,)))
    assert result.checks
    assert all(c.rule_id is RuleId.GOLDEN_VALUE for c in result.checks)
    assert all(c.verdict is Verdict.HOLDS for c in result.checks), [c.reason for c in result.checks if c.violated]


@pytest.mark.parametrize("n, expected", [(1, 2), (2, 3), (3, 4)])
def test_pentagon_chain(n, expected):
    q = pentagon_chain(n)
    assert epsilon(q).value == expected
    assert tau(q).value == n


@pytest.mark.parametrize("n", [1, 2])
def test_pendant_path(n):
    t = pendant_path(n)
    assert epsilon(t).value == n + 1
    assert tau(t).value >= 2 * n


def test_figure1_tree():
    t = figure1_tree()
    assert not is_long(t)
    assert idom(t).value == gamma(t).value == 3


@pytest.mark.parametrize("d", range(1, 5))
def test_complete_bipartite(d):
    k = complete_bipartite(d, d)
    assert idom(k).value == d
    assert projective_dimension(k) == 2 * d - 1
