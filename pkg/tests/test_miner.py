import threading

import pytest

from conftest import java_unit
from c3kit.clients import LlmConfigError, Role
from c3kit.code_model import DeclaredType, ParameterSite, extract_parameters
from c3kit.miner import (
    MiningError, MiningResult, build_mining_prompt, mine_context, mine_sites, mining_question,
    mining_shots, parse_mining_response,
)
from c3kit.prompting import PromptBudget
from c3kit.registry import Group

BUDGET = PromptBudget()


class ScriptedClient:
    """Answers from a list, one reply per call."""

    def __init__(self, *replies):
        self.replies = list(replies)
        self.requests = []
        self._lock = threading.Lock()

    def complete(self, request):
        with self._lock:
            self.requests.append(request)
            return self.replies[(len(self.requests) - 1) % len(self.replies)]


@pytest.fixture
def calc_site():
    return extract_parameters(java_unit("Calc.java"))[0]


def test_question_lists_options(registry, calc_site):
    q = mining_question(calc_site, registry)
    assert "Parameter name: a" in q and "Method name: or" in q
    assert "- BINARY (e.g. " in q and "- EMAIL" not in q
    assert q.splitlines()[-2] == "- MISC (none of the above)"
    assert q.endswith("The operators involved by this parameter are [|]")


def test_string_question_quotes_examples(registry):
    site = extract_parameters(java_unit("User.java"))[2]
    q = mining_question(site, registry)
    assert '- EMAIL (e.g. "' in q and "BINARY" not in q
    assert "operators" not in q


def test_shots_match_group(registry):
    assert mining_shots(registry, Group.STRING)
    for q, a in mining_shots(registry, Group.NUMBER):
        assert a in registry.names(Group.NUMBER) or a == "MISC"


def test_prompt_layout(registry, calc_site):
    packed = build_mining_prompt(calc_site, registry, BUDGET)
    assert packed.messages[0].role is Role.SYSTEM
    assert packed.messages[-1].content == mining_question(calc_site, registry)
    assert packed.shots == len(mining_shots(registry, Group.NUMBER))


@pytest.mark.parametrize("raw,want", [
    ("BINARY", "BINARY"),
    ("binary.", "BINARY"),
    ("The answer is HEXADECIMAL", "HEXADECIMAL"),
    ("MISC", None),
    ("BINARY or OCTAL", None),
    ("EMAIL", None),  # wrong group
    ("", None),
])
def test_parse_response(registry, raw, want):
    assert parse_mining_response(raw, registry, "NUMBER") == want


def test_majority_vote(registry, calc_site):
    client = ScriptedClient("OCTAL", "BINARY", "BINARY")
    res = mine_context(calc_site, registry, BUDGET, client, votes=3)
    assert res.context == "BINARY" and res.raw_response == "BINARY"
    assert [r.sample for r in client.requests] == [0, 1, 2]
    assert res.prompt_hash == client.requests[0].cache_key()


def test_vote_tie_goes_to_first(registry, calc_site):
    res = mine_context(calc_site, registry, BUDGET, ScriptedClient("OCTAL", "MISC"), votes=2)
    assert res.context == "OCTAL"


def test_bad_votes(registry, calc_site):
    with pytest.raises(ValueError):
        mine_context(calc_site, registry, BUDGET, ScriptedClient("x"), votes=0)


def test_errors_carry_the_site(registry, calc_site, tmp_path):
    from c3kit.clients import LlmClient
    with pytest.raises(MiningError) as info:
        mine_context(calc_site, registry, BUDGET, LlmClient(None, None, tmp_path))
    assert info.value.site == calc_site
    assert isinstance(info.value.__cause__, LlmConfigError)


def test_cached_user_mining(registry, cached_client):
    sites = extract_parameters(java_unit("User.java"))
    got = {r.site.param_name: r.context for r in mine_sites(sites, registry, BUDGET, cached_client)}
    assert got == {"username": "PERSON", "password": None, "email": "EMAIL"}
    assert cached_client.network_calls == 0


def test_results_sorted_by_site(registry):
    sites = [ParameterSite("C", "m(int, int)", n, i, DeclaredType.INT, "") for i, n in enumerate("ab")]
    res = mine_sites(reversed(sites), registry, BUDGET, ScriptedClient("LONGNUMBER"), workers=2)
    assert [r.site.param_index for r in res] == [0, 1]


def test_result_round_trip(registry, calc_site):
    res = MiningResult(calc_site, "BINARY", "BINARY", "h", "m")
    assert MiningResult.from_dict(res.to_dict(), registry) == res
    misc = MiningResult(calc_site, None, "MISC", "h", "m")
    assert misc.is_misc and misc.to_dict()["outcome"] == "MISC"
    assert MiningResult.from_dict(misc.to_dict()) == misc
    with pytest.raises(ValueError):
        MiningResult.from_dict({**res.to_dict(), "context": "NOPE"}, registry)
    with pytest.raises(ValueError):
        MiningResult.from_dict({**res.to_dict(), "outcome": "MAYBE"})
