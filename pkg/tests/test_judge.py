import pytest

from conftest import java_unit
from c3kit.clients import LlmClient
from c3kit.code_model import BoundInput, DeclaredType, Kind, Origin, ParameterSite, SourceUnit, extract_parameters
from c3kit.judge import (
    LLM, NER, REGEX, RULE, Judge, JudgeConfig, JudgeError, Judgment, accepted_labels, build_judge_prompt,
    judge_number, judge_suite, judge_with_llm, judge_with_ner, judge_with_regex, judging_shots, parse_yes_no,
    prescribed_tools,
)
from c3kit.miner import MiningResult
from c3kit.numbers import LiteralError
from c3kit.prompting import PromptBudget
from c3kit.registry import lookup

OFFLINE = JudgeConfig(use_llm=False)


class Always:
    def __init__(self, reply):
        self.reply = reply
        self.calls = 0

    def complete(self, request):
        self.calls += 1
        return self.reply


@pytest.mark.parametrize("name,online,offline", [
    ("EMAIL", (LLM, REGEX), (REGEX,)),
    ("PERSON", (LLM, NER), (NER,)),
    ("BINARY", (REGEX,), (REGEX,)),
    ("LONGNUMBER", (RULE,), (RULE,)),
])
def test_prescribed_tools(registry, name, online, offline):
    ctx = lookup(registry, name)
    assert prescribed_tools(ctx, True) == online
    assert prescribed_tools(ctx, False) == offline


@pytest.mark.parametrize("value,name,want", [
    ("simon@example.org", "EMAIL", True),
    ("", "EMAIL", False),
    ("https://example.org/a?b=1", "URL", True),
    ("0b100", "BINARY", True),
    ("0b102", "BINARY", False),
    ("0xfe", "HEXADECIMAL", True),
])
def test_regex_tool(registry, value, name, want):
    assert judge_with_regex(value, lookup(registry, name)) is want


def test_regex_tool_needs_a_regex(registry):
    with pytest.raises(JudgeError):
        judge_with_regex("x", lookup(registry, "PERSON"))


def test_ner_tool(registry):
    person = lookup(registry, "PERSON")
    assert judge_with_ner("Enrico Fermi", person, OFFLINE, registry)
    assert not judge_with_ner("|x45e*3q4+", person, OFFLINE, registry)
    with pytest.raises(JudgeError):
        judge_with_ner("a@b.c", lookup(registry, "EMAIL"), OFFLINE, registry)


def test_generic_context_accepts_siblings(registry):
    time = lookup(registry, "TIME")
    assert accepted_labels(time, registry) >= {"TIME", "DATE"}
    assert judge_with_ner("2023-01-05", time, OFFLINE, registry)
    assert not judge_with_ner("2023-01-05", lookup(registry, "PERCENT"), OFFLINE, registry)


@pytest.mark.parametrize("text,name,want", [
    ("12345678", "LONGNUMBER", True),
    ("123456789", "LONGNUMBER", False),
    ("123_456_789", "LONGNUMBER", True),
    ("1234_56789", "LONGNUMBER", False),
    ("1_2345_6789", "FIXEDLENGTH", True),
    ("12345_6789", "FIXEDLENGTH", False),
    ("1.23456789e8", "SCIENTIFIC", True),
    ("123456789.0", "SCIENTIFIC", False),
    ("0b100", "BINARY", True),
])
def test_number_rules(registry, text, name, want):
    assert judge_number(text, lookup(registry, name), JudgeConfig()) is want


def test_bearable_length_is_configurable(registry):
    assert judge_number("123456789", lookup(registry, "LONGNUMBER"), JudgeConfig(bearable_length=10))
    with pytest.raises(ValueError):
        JudgeConfig(bearable_length=0)


def test_number_rules_reject_bad_input(registry):
    with pytest.raises(LiteralError):
        judge_number("12a", lookup(registry, "LONGNUMBER"), JudgeConfig())
    with pytest.raises(JudgeError):
        judge_number("1", lookup(registry, "EMAIL"), JudgeConfig())


@pytest.mark.parametrize("raw,want", [("Yes", True), ("yes.", True), ("YES, it is", True),
                                      ("No", False), ("not yes", False), ("", False)])
def test_parse_yes_no(raw, want):
    assert parse_yes_no(raw) is want


def test_shots_alternate(registry):
    answers = [a for _, a in judging_shots(registry)]
    assert answers[:4] == ["yes", "no", "yes", "no"]


def test_judge_prompt_ends_with_the_value(registry):
    packed = build_judge_prompt("x y", lookup(registry, "PERSON"), registry, PromptBudget())
    assert 'Input value: "x y"' in packed.messages[-1].content


def test_llm_tool(registry):
    assert judge_with_llm("Simon", lookup(registry, "PERSON"), PromptBudget(), Always("Yes"), registry)
    assert not judge_with_llm("Simon", lookup(registry, "PERSON"), PromptBudget(), Always("No"), registry)


def test_any_tool_suffices(registry):
    judge = Judge(registry, JudgeConfig(), client=Always("No"))
    verdicts, errors = judge.judge_value("simon@example.org", lookup(registry, "EMAIL"))
    assert verdicts == {LLM: False, REGEX: True} and not errors
    assert judge.is_readable("simon@example.org", lookup(registry, "EMAIL"))


def test_failing_tool_counts_as_no(registry, tmp_path):
    judge = Judge(registry, JudgeConfig(), client=LlmClient(None, None, tmp_path))
    verdicts, errors = judge.judge_value("Simon", lookup(registry, "PERSON"))
    assert verdicts == {LLM: False, NER: True}
    assert errors[LLM].startswith("LlmConfigError")


def test_llm_needs_a_client(registry):
    with pytest.raises(ValueError):
        Judge(registry, JudgeConfig())


def test_cached_llm_judging(extended_registry, cached_client):
    judge = Judge(extended_registry, JudgeConfig(), client=cached_client)
    role = lookup(extended_registry, "MRS_ROLE")
    assert judge.is_readable("Nurse", role)
    assert not judge.is_readable("xxx", role)


def _user_mined():
    sites = extract_parameters(java_unit("User.java"))
    contexts = {"username": "PERSON", "email": "EMAIL"}
    return [MiningResult(s, contexts.get(s.param_name), "", "", "") for s in sites]


def test_suite_skips_misc_and_reports_parse_errors(registry):
    tests = [java_unit("UserTest.java", Kind.TEST), SourceUnit("Broken.java", "class {", Kind.TEST)]
    suite = judge_suite(tests, _user_mined(), Judge(registry, OFFLINE))
    assert len(suite.judgments) == 10
    assert {j.input.site.param_name for j in suite.judgments} == {"username", "email"}
    assert len(suite.diagnostics) == 1 and "Broken.java" in suite.diagnostics[0]


def test_judgment_round_trip(registry):
    site = ParameterSite("C", "m(int)", "n", 0, DeclaredType.INT, "")
    bound = BoundInput(site, "123456789", "NUMBER", Origin.DIRECT_LITERAL, "T.t", "123456789", (3, 12))
    j = Judge(registry, OFFLINE).judge_input(bound, lookup(registry, "LONGNUMBER"))
    assert not j.readable and j.bearable_length == 9
    assert Judgment.from_dict(j.to_dict()) == j
