import json
import shutil

import pytest
from click.testing import CliRunner

from conftest import FIXTURES, JAVA, LLM_CACHE
from c3kit.cli import main


@pytest.fixture
def run(tmp_path):
    runner = CliRunner()

    def invoke(*args, input=None):
        base = ["--cache-dir", str(LLM_CACHE), "--out", str(tmp_path / "out")]
        return runner.invoke(main, base + [str(a) for a in args], input=input, catch_exceptions=False)

    return invoke


@pytest.fixture
def user_src(tmp_path):
    d = tmp_path / "src"
    d.mkdir()
    shutil.copy(JAVA / "User.java", d)
    return d


def _records(path):
    return [json.loads(line) for line in path.read_text().splitlines()]


def test_mine_judge_report(run, user_src, tmp_path):
    res = run("mine", user_src)
    assert res.exit_code == 0, res.output
    assert "mined 3 parameters (2 with a context)" in res.output
    mined = _records(tmp_path / "out" / "mined.jsonl")
    assert [(r["site"]["param_name"], r["context"]) for r in mined] == [
        ("username", "PERSON"), ("password", None), ("email", "EMAIL")]
    assert {r["schema"] for r in mined} == {"c3kit.mined/1"}

    res = run("--no-llm", "judge", JAVA / "UserTest.java")
    assert res.exit_code == 0, res.output
    assert "judged 10 inputs (6 readable)" in res.output
    assert (tmp_path / "out" / "report.md").exists()

    res = run("report", "--mined", tmp_path / "out" / "mined.jsonl", "--format", "csv")
    assert res.exit_code == 0
    assert "org.airsonic.player.domain,STRING,2,2,100%,2,100%" in res.output


def test_judge_with_cached_llm(run, user_src):
    run("mine", user_src)
    res = run("judge", JAVA / "UserTest.java")
    # the cache holds only two judging answers, the remaining LLM calls fail and count as "no"
    assert res.exit_code == 0, res.output
    assert "judged 10 inputs" in res.output


def test_synthesize(run, tmp_path):
    src = tmp_path / "calc"
    src.mkdir()
    shutil.copy(JAVA / "Calc.java", src)
    shutil.copy(JAVA / "User.java", src)
    assert run("mine", src).exit_code == 0
    res = run("synthesize", "--reformat", JAVA / "CalcTest.java")
    assert res.exit_code == 0, res.output
    out = tmp_path / "out"
    assert "or(0b100, 0b011)" in (out / "reformatted" / "CalcTest.java").read_text()
    user_test = (out / "generated" / "UserC3Test.java").read_text()
    assert "new User(" in user_test
    doc = json.loads((out / "synthesis.json").read_text())
    assert doc["coverage"]["param_total"] == 2 and doc["coverage"]["invocation_total"] == 1
    again = tmp_path / "again"
    run("synthesize")
    shutil.copytree(out, again)
    run("synthesize")
    assert (out / "synthesis.json").read_text() == (again / "synthesis.json").read_text()


def test_report_confusion(run):
    res = run("report", "--confusion", 864, 160, 0, 177)
    assert res.exit_code == 0
    assert "| 864 | 160 | 0 | 177 | 84.4% | 83% | 83.7% |" in res.output


def test_add_context(run, tmp_path):
    reg = tmp_path / "reg.json"
    res = run("--registry", reg, "add-context", FIXTURES / "mrs_role.json")
    assert res.exit_code == 0, res.output
    assert "(30 contexts)" in res.output
    res = run("--registry", reg, "add-context", "--name", "SKU", "--example", "AB-12", "--regex", "[A-Z]+-[0-9]+")
    assert res.exit_code == 0, res.output
    assert [c["name"] for c in json.loads(reg.read_text())["contexts"]] == ["MRS_ROLE", "SKU"]
    dup = run("--registry", reg, "add-context", FIXTURES / "mrs_role.json")
    assert dup.exit_code == 1
    assert "duplicate context name" in dup.output


def test_role_with_extended_registry(run, tmp_path):
    reg = tmp_path / "reg.json"
    run("--registry", reg, "add-context", FIXTURES / "mrs_role.json")
    src = tmp_path / "role"
    src.mkdir()
    shutil.copy(JAVA / "Role.java", src)
    assert run("--registry", reg, "mine", src).exit_code == 0
    res = run("--registry", reg, "judge", JAVA / "RoleTest.java", "--format", "json")
    assert res.exit_code == 0, res.output
    verdicts = {r["input"]["value"]: r["readable"] for r in _records(tmp_path / "out" / "judgments.jsonl")}
    assert verdicts == {"xxx": False, "Nurse": True}


def test_errors(run, tmp_path):
    res = run("--registry", tmp_path / "missing.json", "mine", JAVA / "User.java")
    assert res.exit_code == 1 and "registry file not found" in res.output
    bad = tmp_path / "mined.jsonl"
    bad.write_text("{not json\n")
    res = run("judge", "--mined", bad)
    assert res.exit_code == 1 and "malformed record" in res.output
    assert run("add-context", "--name", "X").exit_code == 2
    assert run("--max-token", 10, "--remain", 20, "mine").exit_code == 2


def test_empty_input(run, tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    res = run("mine", empty)
    assert res.exit_code == 0 and "mined 0 parameters" in res.output


def test_uncached_mining_fails_cleanly(tmp_path):
    src = tmp_path / "a"
    src.mkdir()
    (src / "A.java").write_text("class A { void f(int count) {} }")
    res = CliRunner().invoke(main, ["--cache-dir", str(tmp_path / "c"), "--out", str(tmp_path / "o"), "mine", str(src)])
    assert res.exit_code == 1
    assert "C3_LLM_ENDPOINT" in res.output
