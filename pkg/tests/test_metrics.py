import csv
import io
import json
import math

import pytest

from conftest import java_unit
from c3kit.code_model import Kind, extract_parameters
from c3kit.judge import Judge, JudgeConfig, judge_suite
from c3kit.metrics import (
    ConfusionCounts, GoalCoverage, ReadabilityReport, ReadabilityRow, Report, aggregate_readability,
    confusion_metrics, goal_coverage, percent, render_report,
)
from c3kit.miner import MiningResult
from c3kit.search import FitnessGoal, SearchConfig, synthesize_inputs


def test_confusion_oracle():
    m = confusion_metrics(ConfusionCounts(tp=864, fp=160, tn=0, fn=177))
    assert m.precision == pytest.approx(864 / 1024)
    assert m.recall == pytest.approx(864 / 1041)
    assert m.f1 == pytest.approx(2 * 864 / (2 * 864 + 160 + 177))


def test_undefined_metrics_are_nan():
    m = confusion_metrics(ConfusionCounts(0, 0, 5, 0))
    assert math.isnan(m.precision) and math.isnan(m.recall) and math.isnan(m.f1)
    assert math.isnan(confusion_metrics(ConfusionCounts(0, 3, 0, 4)).f1)
    with pytest.raises(ValueError):
        ConfusionCounts(-1, 0, 0, 0)


@pytest.mark.parametrize("ratio,decimals,text", [
    (0.125, 0, "13%"),  # half-up, not banker's rounding
    (0.845, 0, "85%"),
    (0.83, 1, "83%"),
    (0.8438, 1, "84.4%"),
    (1.0, 0, "100%"),
    (float("nan"), 1, "-"),
])
def test_percent(ratio, decimals, text):
    assert percent(ratio, decimals) == text


def _user_suite(registry):
    sites = extract_parameters(java_unit("User.java"))
    contexts = {"username": "PERSON", "email": "EMAIL"}
    mined = [MiningResult(s, contexts.get(s.param_name), "", "", "") for s in sites]
    suite = judge_suite([java_unit("UserTest.java", Kind.TEST)], mined, Judge(registry, JudgeConfig(use_llm=False)))
    return suite.judgments, mined


def test_aggregate_readability(registry):
    judgments, mined = _user_suite(registry)
    rep = aggregate_readability(judgments, mined)
    assert rep.rows == (ReadabilityRow("org.airsonic.player.domain", "STRING", 2, 2, 2),)
    assert aggregate_readability([], mined).rows[0].covered_params == 0


def test_row_consistency_checked():
    with pytest.raises(ValueError):
        ReadabilityReport((ReadabilityRow("p", "STRING", 1, 2, 0),))


def test_goal_coverage(registry):
    sig = "Account(String, String)"
    goals = [FitnessGoal.param(sig, 0, "PERSON"), FitnessGoal.invocation(sig, [(0, "PERSON"), (1, "EMAIL")])]
    res = synthesize_inputs(sig, goals, registry, SearchConfig(rng_seed=1))
    cov = goal_coverage(res)
    assert (cov.param_total, cov.invocation_total) == (1, 1)
    assert goal_coverage([res, res]) == cov + cov
    assert math.isnan(goal_coverage([]).c3_coverage)


def test_render_formats():
    rep = Report(ReadabilityReport((ReadabilityRow("p", "STRING", 4, 2, 1), ReadabilityRow("p", "NUMBER", 2, 0, 0))),
                 ConfusionCounts(864, 160, 0, 177), GoalCoverage(30, 30, 13, 30))
    doc = json.loads(render_report(rep, "json"))
    assert doc["metrics"]["precision"] == pytest.approx(0.84375)
    assert Report.from_dict(doc) == rep
    rows = list(csv.reader(io.StringIO(render_report(rep, "csv"))))
    assert rows[-1] == ["TOTAL", "ALL", "6", "2", "33%", "1", "50%"]
    assert rows[2][-1] == "-"  # nothing covered, so no readable rate
    md = render_report(rep, "markdown")
    assert "| 84.4% | 83% | 83.7% |" in md
    assert "| 100% (30/30) | 43% (13/30) |" in md


def test_render_empty_and_bad_format():
    assert render_report(Report(), "csv").count("\n") == 1
    with pytest.raises(ValueError):
        render_report(Report(), "xml")
