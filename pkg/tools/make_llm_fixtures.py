"""Regenerate the LLM response cache used by the test suite.

The responses below are hand-written stand-ins for model answers, stored
under the cache keys of the exact prompts the toolkit builds. Rerun this
script whenever prompt wording, shots or registry data change.

    python3 tools/make_llm_fixtures.py [CACHE_DIR]
"""
from __future__ import annotations

import json
import sys
from pathlib import Path

from c3kit.clients import DEFAULT_MODEL, ChatRequest, ResponseCache
from c3kit.code_model import SourceUnit, extract_parameters
from c3kit.judge import build_judge_prompt
from c3kit.miner import build_mining_prompt
from c3kit.prompting import PromptBudget
from c3kit.registry import add_context, builtin_registry, load_registry, lookup

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "tests" / "fixtures"

MINING = {
    "User.java": {"username": "PERSON", "password": "MISC", "email": "EMAIL"},
    "Calc.java": {"a": "BINARY", "b": "BINARY"},
}
MINING_EXTENDED = {"Role.java": {"role": "MRS_ROLE"}}
JUDGING = [("testEmail", "EMAIL", "Yes"), ("", "EMAIL", "No")]
JUDGING_EXTENDED = [("Nurse", "MRS_ROLE", "Yes"), ("xxx", "MRS_ROLE", "No")]


def extended_registry():
    definition = json.loads((FIXTURES / "mrs_role.json").read_text(encoding="utf-8"))
    return load_registry(add_context({}, definition))


def main(cache_dir: Path) -> int:
    cache = ResponseCache(cache_dir)
    budget = PromptBudget()
    written = 0

    def put(messages, answer: str) -> None:
        nonlocal written
        request = ChatRequest(messages, model_id=DEFAULT_MODEL, max_response_tokens=budget.remain)
        cache.put(request, answer)
        written += 1

    for registry, table in ((builtin_registry(), MINING), (extended_registry(), MINING_EXTENDED)):
        for filename, answers in table.items():
            for site in extract_parameters(SourceUnit.from_path(FIXTURES / "java" / filename)):
                put(build_mining_prompt(site, registry, budget).messages, answers[site.param_name])
    for registry, table in ((builtin_registry(), JUDGING), (extended_registry(), JUDGING_EXTENDED)):
        for value, context, answer in table:
            put(build_judge_prompt(value, lookup(registry, context), registry, budget).messages, answer)
    print(f"wrote {written} cache entries to {cache_dir}")
    return 0


if __name__ == "__main__":
    sys.exit(main(Path(sys.argv[1]) if len(sys.argv) > 1 else FIXTURES / "llm_cache"))
