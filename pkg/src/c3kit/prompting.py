"""Token budgeting and few-shot message packing shared by mining and judging."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .clients import ChatMessage, Role

Tokenizer = Callable[[str], int]

DEFAULT_TOKENIZER = "bytes4"
TRUNCATION_MARK = "(truncated)"


def _bytes4(text: str) -> int:
    return math.ceil(len(text.encode("utf-8")) / 4)


_TOKENIZERS: dict[str, Tokenizer] = {DEFAULT_TOKENIZER: _bytes4}


def register_tokenizer(tokenizer_id: str, count: Tokenizer) -> None:
    """Make an exact tokenizer available under ``tokenizer_id``."""
    _TOKENIZERS[tokenizer_id] = count


class PromptBudgetError(ValueError):
    pass


@dataclass(frozen=True)
class PromptBudget:
    max_token: int = 4096
    remain: int = 20
    tokenizer_id: str = DEFAULT_TOKENIZER

    def __post_init__(self) -> None:
        if self.max_token <= 0 or self.remain <= 0:
            raise ValueError("max_token and remain must be positive")
        if self.remain >= self.max_token:
            raise ValueError(f"remain ({self.remain}) must be below max_token ({self.max_token})")

    @property
    def prompt_limit(self) -> int:
        return self.max_token - self.remain


def estimate_tokens(text: str, budget: PromptBudget | None = None) -> int:
    tokenizer_id = budget.tokenizer_id if budget else DEFAULT_TOKENIZER
    try:
        count = _TOKENIZERS[tokenizer_id]
    except KeyError:
        raise PromptBudgetError(f"unknown tokenizer_id: {tokenizer_id!r}") from None
    return count(text)


def prompt_tokens(messages: Sequence[ChatMessage], budget: PromptBudget) -> int:
    return sum(estimate_tokens(m.content, budget) for m in messages)


@dataclass(frozen=True)
class PackedPrompt:
    messages: tuple[ChatMessage, ...]
    shots: int
    truncated: bool
    tokens: int


def pack_prompt(
    system: str,
    shots: Sequence[tuple[str, str]],
    question: Callable[[int | None], str],
    budget: PromptBudget,
) -> PackedPrompt:
    """Role message, then as many leading shots as fit, then the target question.

    ``question(keep)`` renders the target question with its source excerpt cut
    to ``keep`` lines (``None`` for the whole excerpt). Shots are taken as a
    prefix so that a larger budget never yields fewer of them; when the
    question itself has to be cut, no shot is included.
    """
    tok = lambda s: estimate_tokens(s, budget)  # noqa: E731
    fixed = tok(system)
    target = question(None)
    rest = budget.prompt_limit - tok(target) - fixed
    truncated = False
    if rest < 0:
        target = _truncate(question, lambda t: fixed + tok(t) <= budget.prompt_limit)
        truncated = True
    messages = [ChatMessage(Role.SYSTEM, system)]
    used = 0
    if not truncated:
        for q, a in shots:
            cost = tok(q) + tok(a)
            if cost > rest:
                break
            messages += [ChatMessage(Role.USER, q), ChatMessage(Role.ASSISTANT, a)]
            rest -= cost
            used += 1
    messages.append(ChatMessage(Role.USER, target))
    packed = PackedPrompt(tuple(messages), used, truncated, prompt_tokens(messages, budget))
    assert packed.tokens <= budget.prompt_limit
    return packed


def _truncate(question: Callable[[int | None], str], fits: Callable[[str], bool]) -> str:
    # binary search for the longest line prefix that fits
    lo, hi = 0, question(None).count("\n") + 1
    if not fits(question(0)):
        raise PromptBudgetError("target question does not fit the token budget even without source code")
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if fits(question(mid)):
            lo = mid
        else:
            hi = mid - 1
    return question(lo)


def cut_lines(text: str, keep: int | None) -> str:
    if keep is None:
        return text
    lines = text.splitlines()
    if keep >= len(lines):
        return text
    return "\n".join(lines[:keep] + [TRUNCATION_MARK])
