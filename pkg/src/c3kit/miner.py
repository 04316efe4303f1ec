"""Context mining: ask an LLM which readability context a parameter's values should match."""
from __future__ import annotations

import re
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .clients import DEFAULT_MODEL, ChatMessage, ChatRequest, LlmClient, LlmError
from .code_model import ParameterSite
from .prompting import PackedPrompt, PromptBudget, cut_lines, pack_prompt
from .registry import MISC, ContextRegistry, Group, ReadabilityContext

MINING_SYSTEM = (
    "You are an experienced Java tester. Given a method parameter, its method and the "
    "source code with comments, decide which readability context the test inputs of the "
    "parameter should match. Reply with exactly one context name from the options, "
    "or MISC when no option fits. Do not explain."
)


class MiningError(RuntimeError):
    def __init__(self, site: ParameterSite, cause: Exception):
        super().__init__(f"{site.class_id}.{site.method_sig} parameter {site.param_name!r}: {cause}")
        self.site = site
        self.cause = cause


@dataclass(frozen=True)
class MiningResult:
    site: ParameterSite
    context: str | None  # None means MISC
    raw_response: str
    prompt_hash: str
    model_id: str

    @property
    def is_misc(self) -> bool:
        return self.context is None

    @property
    def outcome(self) -> str:
        return self.context or MISC

    def to_dict(self) -> dict[str, Any]:
        return {
            "site": self.site.to_dict(),
            "outcome": "MISC" if self.context is None else "CONTEXT",
            "context": self.context,
            "raw_response": self.raw_response,
            "prompt_hash": self.prompt_hash,
            "model_id": self.model_id,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any], registry: ContextRegistry | None = None) -> "MiningResult":
        context = d.get("context") if d.get("outcome") == "CONTEXT" else None
        if d.get("outcome") not in ("CONTEXT", "MISC"):
            raise ValueError(f"unknown mining outcome {d.get('outcome')!r}")
        if context is not None and registry is not None and context not in registry:
            raise ValueError(f"mined context {context!r} is not in the registry")
        return cls(ParameterSite.from_dict(d["site"]), context, d.get("raw_response", ""),
                   d.get("prompt_hash", ""), d.get("model_id", ""))


def _quote(ctx: ReadabilityContext, value: str) -> str:
    return f'"{value}"' if ctx.group is Group.STRING else value


def category_groups(registry: ContextRegistry) -> dict[str, set[Group]]:
    groups: dict[str, set[Group]] = {}
    for ctx in registry.contexts:
        groups.setdefault(ctx.category, set()).add(ctx.group)
    return groups


def mining_shots(registry: ContextRegistry, group: Group) -> list[tuple[str, str]]:
    groups = category_groups(registry)
    return [
        (cat.shot.question, cat.shot.answer)
        for cat in registry.categories
        if cat.shot is not None and group in groups.get(cat.name, ())
    ]


def mining_question(site: ParameterSite, registry: ContextRegistry, keep: int | None = None) -> str:
    group = Group(site.group)
    options = "\n".join(
        f"- {c.name} (e.g. {_quote(c, c.examples[0])})" for c in registry.by_group(group)
    )
    text = (
        f"Parameter name: {site.param_name}\n"
        f"Method name: {site.method_name}\n"
        f"Source code with comments:\n{cut_lines(site.method_source, keep)}\n"
        f"Which context should the values of the parameter `{site.param_name}` match?\n"
        f"Options:\n{options}\n- MISC (none of the above)"
    )
    if group is Group.NUMBER and site.operators:
        text += f"\nThe operators involved by this parameter are [{', '.join(site.operators)}]"
    return text


def build_mining_prompt(site: ParameterSite, registry: ContextRegistry, budget: PromptBudget) -> PackedPrompt:
    return pack_prompt(
        MINING_SYSTEM,
        mining_shots(registry, Group(site.group)),
        lambda keep: mining_question(site, registry, keep),
        budget,
    )


_PUNCT = re.compile(r"[^\w]+")


def parse_mining_response(raw: str, registry: ContextRegistry, group: Group | str | None = None) -> str | None:
    """The single context name occurring as a whole token in ``raw``, else None (MISC)."""
    names = set(registry.names(Group(group) if group else None))
    tokens = _PUNCT.sub(" ", raw.strip().upper()).split()
    found = {t for t in tokens if t in names}
    return found.pop() if len(found) == 1 else None


def mine_context(
    site: ParameterSite,
    registry: ContextRegistry,
    budget: PromptBudget,
    client: LlmClient,
    *,
    model_id: str = DEFAULT_MODEL,
    votes: int = 1,
) -> MiningResult:
    """One LLM call per site; with ``votes`` > 1 the most frequent outcome wins
    (ties go to the outcome seen first)."""
    if votes < 1:
        raise ValueError("votes must be at least 1")
    packed = build_mining_prompt(site, registry, budget)
    answers: list[tuple[str | None, str]] = []
    for sample in range(votes):
        request = ChatRequest(packed.messages, model_id=model_id, max_response_tokens=budget.remain,
                              sample=sample)
        try:
            raw = client.complete(request)
        except LlmError as exc:
            raise MiningError(site, exc) from exc
        answers.append((parse_mining_response(raw, registry, site.group), raw))
    counts = Counter(a for a, _ in answers)
    best = max(counts.values())
    winner = next(a for a, _ in answers if counts[a] == best)
    raw = next(r for a, r in answers if a == winner)
    first = ChatRequest(packed.messages, model_id=model_id, max_response_tokens=budget.remain)
    return MiningResult(site, winner, raw, first.cache_key(), model_id)


def mine_sites(
    sites: Iterable[ParameterSite],
    registry: ContextRegistry,
    budget: PromptBudget,
    client: LlmClient,
    *,
    model_id: str = DEFAULT_MODEL,
    votes: int = 1,
    workers: int = 4,
) -> list[MiningResult]:
    sites = list(sites)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(
            lambda s: mine_context(s, registry, budget, client, model_id=model_id, votes=votes), sites))
    return sorted(results, key=lambda r: r.site.key)


def prompt_messages_text(messages: Sequence[ChatMessage]) -> str:
    return "\n\n".join(f"[{m.role.value}]\n{m.content}" for m in messages)
