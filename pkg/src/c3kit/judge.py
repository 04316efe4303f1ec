"""Input judging: is a test input readable for its parameter's context?

String contexts combine an LLM verdict with a regex (Cyberspace) or NER (all
other string categories); an input is readable when any tool says yes.
Number contexts are judged by regex (base formats) or by the length and
grouping rules below (other formats).
"""
from __future__ import annotations

import json
import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .clients import (
    DEFAULT_MODEL, ChatRequest, GazetteerNer, LlmClient, NerBackend, NerServerClient, as_ner_backend,
)
from .code_model import BoundInput, JavaParseError, SourceUnit, extract_test_inputs
from .miner import MiningResult, category_groups
from .numbers import LiteralError, digit_length, parse_literal
from .prompting import PackedPrompt, PromptBudget, pack_prompt
from .registry import ContextRegistry, Group, JudgeMethod, ReadabilityContext, lookup

log = logging.getLogger(__name__)

LLM, NER, REGEX, RULE = "LLM", "NER", "REGEX", "RULE"

JUDGE_SYSTEM = (
    "You are an experienced Java tester. Decide whether a test input value is readable "
    "for a readability context, that is, whether a developer reading the test would "
    "recognise the value as one of that kind. Reply with yes or no only."
)
# values used for the negative judging shots
_UNREADABLE = ("|x45e*3q4+", " [stream]", "hi!", "x7#Q", "\u0014\u0003", "", "0.5u")


class JudgeError(ValueError):
    pass


@dataclass(frozen=True)
class JudgeConfig:
    bearable_length: int = 9
    use_llm: bool = True
    ner_backend: NerBackend = NerBackend.GAZETTEER

    def __post_init__(self) -> None:
        if self.bearable_length < 1:
            raise ValueError("bearable_length must be at least 1")
        object.__setattr__(self, "ner_backend", as_ner_backend(self.ner_backend))


@dataclass(frozen=True)
class Judgment:
    input: BoundInput
    context: str
    tool_verdicts: dict[str, bool]
    readable: bool
    bearable_length: int | None = None
    errors: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "input": self.input.to_dict(),
            "context": self.context,
            "tool_verdicts": dict(self.tool_verdicts),
            "readable": self.readable,
            "bearable_length": self.bearable_length,
            "errors": dict(self.errors),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "Judgment":
        return cls(BoundInput.from_dict(d["input"]), d["context"], dict(d["tool_verdicts"]),
                   bool(d["readable"]), d.get("bearable_length"), dict(d.get("errors", {})))


# ------------------------------------------------------------------ tools


def judge_with_regex(value: str, context: ReadabilityContext) -> bool:
    if context.pattern is None:
        raise JudgeError(f"context {context.name} has no regex")
    return context.pattern.fullmatch(value) is not None


def accepted_labels(context: ReadabilityContext, registry: ContextRegistry) -> set[str]:
    labels = {context.name}
    if context.generic:
        labels.update(s.name for s in registry.siblings(context))
    return labels


def judge_with_ner(
    value: str,
    context: ReadabilityContext,
    config: JudgeConfig,
    registry: ContextRegistry,
    *,
    server: NerServerClient | None = None,
    gazetteer: GazetteerNer | None = None,
) -> bool:
    if context.group is not Group.STRING or context.category == "Cyberspace":
        raise JudgeError(f"NER does not judge context {context.name}")
    if config.ner_backend is NerBackend.GAZETTEER:
        annotations = (gazetteer or GazetteerNer(registry)).annotate(value)
    else:
        annotations = (server or NerServerClient()).annotate(value)
    wanted = accepted_labels(context, registry)
    return any(a.label in wanted for a in annotations)


def _judge_question(context: ReadabilityContext, value: str) -> str:
    examples = ", ".join(json.dumps(e, ensure_ascii=False) for e in context.examples[:3])
    return (
        f"Context: {context.name}\n"
        f"Examples of the context: {examples}\n"
        f"Input value: {json.dumps(value, ensure_ascii=False)}\n"
        f"Is the input value readable for the context?"
    )


def judging_shots(registry: ContextRegistry, group: Group = Group.STRING) -> list[tuple[str, str]]:
    """One shot per category: alternately a positive example and an unreadable value."""
    groups = category_groups(registry)
    shots = []
    for cat in registry.categories:
        if group not in groups.get(cat.name, ()):
            continue
        ctx = next(c for c in registry.contexts if c.category == cat.name and c.group is group)
        i = len(shots)
        if i % 2 == 0:
            shots.append((_judge_question(ctx, ctx.examples[0]), "yes"))
        else:
            shots.append((_judge_question(ctx, _UNREADABLE[(i // 2) % len(_UNREADABLE)]), "no"))
    return shots


def build_judge_prompt(value: str, context: ReadabilityContext, registry: ContextRegistry,
                       budget: PromptBudget) -> PackedPrompt:
    return pack_prompt(
        JUDGE_SYSTEM,
        judging_shots(registry, context.group),
        lambda keep: _judge_question(context, value),
        budget,
    )


def parse_yes_no(raw: str) -> bool:
    words = re.sub(r"[^\w]+", " ", raw.lower()).split()
    return bool(words) and words[0] == "yes"


def judge_with_llm(
    value: str,
    context: ReadabilityContext,
    budget: PromptBudget,
    client: LlmClient,
    registry: ContextRegistry,
    *,
    model_id: str = DEFAULT_MODEL,
) -> bool:
    packed = build_judge_prompt(value, context, registry, budget)
    request = ChatRequest(packed.messages, model_id=model_id, max_response_tokens=budget.remain)
    return parse_yes_no(client.complete(request))


_DIGIT_GROUPS = re.compile(r"[_.]")


def _significand(text: str) -> tuple[str, str]:
    """(integer part, fraction part) of a literal, keeping underscores."""
    lit = parse_literal(text)
    body = lit.text.lstrip("+-")
    if lit.suffix:
        body = body[: -len(lit.suffix)]
    if lit.kind in ("HEX", "BIN"):
        return body[2:], ""
    if lit.kind == "FLOAT":
        body = re.split(r"[eE]", body, maxsplit=1)[0]
    whole, _, frac = body.partition(".")
    return whole, frac


def judge_number(literal_text: str, context: ReadabilityContext, config: JudgeConfig) -> bool:
    if context.group is not Group.NUMBER:
        raise JudgeError(f"{context.name} is not a NUMBER context")
    lit = parse_literal(literal_text)  # raises LiteralError when malformed
    name = context.name
    if name not in ("LONGNUMBER", "FIXEDLENGTH", "SCIENTIFIC"):
        if context.judge_method is JudgeMethod.RULE_REGEX and digit_length(literal_text) < config.bearable_length:
            return True
        return judge_with_regex(lit.text, context)
    if digit_length(literal_text) < config.bearable_length:
        return True
    if name == "SCIENTIFIC":
        return lit.kind == "FLOAT" and ("e" in lit.text or "E" in lit.text)
    whole, frac = _significand(literal_text)
    if name == "LONGNUMBER":
        groups = [g for g in _DIGIT_GROUPS.split(f"{whole}.{frac}") if g]
        return "_" in whole + frac and all(len(g) <= 3 for g in groups)
    groups = whole.split("_")
    if len(groups) < 2 or any(not g for g in groups):
        return False
    width = len(groups[1])
    return all(len(g) == width for g in groups[1:]) and len(groups[0]) <= width


# ------------------------------------------------------------------ dispatch


def prescribed_tools(context: ReadabilityContext, use_llm: bool) -> tuple[str, ...]:
    method = context.judge_method
    tools = {
        JudgeMethod.LLM_REGEX: (LLM, REGEX),
        JudgeMethod.LLM_NER: (LLM, NER),
        JudgeMethod.REGEX: (REGEX,),
        JudgeMethod.RULE_REGEX: (RULE,),
    }[method]
    return tuple(t for t in tools if use_llm or t != LLM)


class Judge:
    """Judging bound to one registry, configuration, budget and client."""

    def __init__(
        self,
        registry: ContextRegistry,
        config: JudgeConfig = JudgeConfig(),
        budget: PromptBudget = PromptBudget(),
        client: LlmClient | None = None,
        *,
        model_id: str = DEFAULT_MODEL,
        ner_server: NerServerClient | None = None,
    ):
        if config.use_llm and client is None:
            raise ValueError("an LLM client is required unless use_llm is false")
        self.registry = registry
        self.config = config
        self.budget = budget
        self.client = client
        self.model_id = model_id
        self.ner_server = ner_server
        self._gazetteer = GazetteerNer(registry)

    def _tool(self, tool: str, value: str, literal: str, ctx: ReadabilityContext) -> bool:
        if tool == REGEX:
            return judge_with_regex(literal if ctx.group is Group.NUMBER else value, ctx)
        if tool == NER:
            return judge_with_ner(value, ctx, self.config, self.registry,
                                  server=self.ner_server, gazetteer=self._gazetteer)
        if tool == RULE:
            return judge_number(literal, ctx, self.config)
        assert self.client is not None
        return judge_with_llm(value, ctx, self.budget, self.client, self.registry, model_id=self.model_id)

    def judge_value(self, value: str, context: ReadabilityContext, literal: str | None = None
                    ) -> tuple[dict[str, bool], dict[str, str]]:
        literal = value if literal is None else literal
        verdicts: dict[str, bool] = {}
        errors: dict[str, str] = {}
        for tool in prescribed_tools(context, self.config.use_llm):
            try:
                verdicts[tool] = bool(self._tool(tool, value, literal, context))
            except Exception as exc:  # a failing tool is a negative verdict
                log.debug("%s failed on %r for %s: %s", tool, value, context.name, exc)
                verdicts[tool] = False
                errors[tool] = f"{type(exc).__name__}: {exc}"
        return verdicts, errors

    def judge_input(self, bound: BoundInput, context: ReadabilityContext) -> Judgment:
        verdicts, errors = self.judge_value(bound.value, context, bound.literal_text)
        is_number = context.group is Group.NUMBER
        return Judgment(bound, context.name, verdicts, any(verdicts.values()),
                        self.config.bearable_length if is_number else None, errors)

    def is_readable(self, value: str, context: ReadabilityContext) -> bool:
        return any(self.judge_value(value, context)[0].values())


def judge_input(
    bound: BoundInput,
    context: ReadabilityContext,
    config: JudgeConfig,
    budget: PromptBudget = PromptBudget(),
    *,
    registry: ContextRegistry,
    client: LlmClient | None = None,
) -> Judgment:
    return Judge(registry, config, budget, client).judge_input(bound, context)


@dataclass
class SuiteJudgment:
    judgments: list[Judgment]
    contexted: list[MiningResult]
    diagnostics: list[str]


def judge_suite(
    tests: Iterable[SourceUnit],
    mined: Sequence[MiningResult],
    judge: Judge,
    *,
    workers: int = 4,
) -> SuiteJudgment:
    """Judge every input bound to a contexted parameter; MISC parameters are skipped."""
    contexted = [m for m in mined if not m.is_misc]
    contexts = {m.site.key: lookup(judge.registry, m.context) for m in contexted}  # type: ignore[arg-type]
    sites = [m.site for m in contexted]
    bound: list[BoundInput] = []
    diagnostics: list[str] = []
    if sites:
        for unit in tests:
            try:
                bound.extend(extract_test_inputs(unit, sites))
            except (JavaParseError, LiteralError, ValueError) as exc:
                diagnostics.append(f"skipped {unit.path}: {exc}")
    work = lambda b: judge.judge_input(b, contexts[b.site.key])  # noqa: E731
    if judge.config.use_llm and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            judgments = list(pool.map(work, bound))
    else:
        judgments = [work(b) for b in bound]
    return SuiteJudgment(judgments, contexted, diagnostics)
