"""Readability fitness functions and a genetic search for readable string inputs.

``f_c3(value, context)`` is 0 when the value satisfies the context and otherwise
the Jaro-Winkler distance to the nearest seed string of the context.
``f_c3invo`` scores a whole invocation as the worst of its parameters.
Number contexts are never searched; their literals are rewritten afterwards
by :func:`reformat_candidate_numbers`.
"""
from __future__ import annotations

import random
import string
from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable, Mapping, Sequence

from . import jaro
from .code_model import SourceUnit, extract_test_inputs
from .judge import Judge, JudgeConfig
from .miner import MiningResult
from .numbers import parse_literal, rewrite_number_literal
from .registry import ContextRegistry, Group, ReadabilityContext, builtin_registry, get_seeds, lookup

_OFFLINE = JudgeConfig(use_llm=False)
_judges: dict[int, tuple[ContextRegistry, Judge]] = {}


def _offline_judge(registry: ContextRegistry) -> Judge:
    hit = _judges.get(id(registry))
    if hit is None or hit[0] is not registry:
        hit = (registry, Judge(registry, _OFFLINE))
        _judges[id(registry)] = hit
    return hit[1]


def _check_string(context: ReadabilityContext) -> None:
    if context.group is not Group.STRING:
        raise ValueError(f"{context.name} is not a STRING context")


def is_satisfy(value: str, context: ReadabilityContext, registry: ContextRegistry | None = None) -> int:
    """1 when the offline judge (regex or NER, no LLM) finds ``value`` readable."""
    _check_string(context)
    judge = _offline_judge(registry or builtin_registry())
    return 1 if judge.is_readable(value, context) else 0


def min_distance(value: str, context: ReadabilityContext) -> float:
    return jaro.min_distance(value, get_seeds(context))


def f_c3(value: str, context: ReadabilityContext, registry: ContextRegistry | None = None) -> float:
    if is_satisfy(value, context, registry):
        return 0.0
    return min_distance(value, context)


class GoalKind(str, Enum):
    PARAM = "PARAM"
    INVOCATION = "INVOCATION"


@dataclass(frozen=True)
class FitnessGoal:
    kind: GoalKind
    method_sig: str
    pairs: tuple[tuple[int, str], ...]  # (param_index, context name)

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple((int(i), str(c)) for i, c in self.pairs))
        if not self.pairs:
            raise ValueError("a fitness goal needs at least one contexted parameter")
        if self.kind is GoalKind.PARAM and len(self.pairs) != 1:
            raise ValueError("a PARAM goal has exactly one parameter")

    @classmethod
    def param(cls, method_sig: str, index: int, context: str) -> "FitnessGoal":
        return cls(GoalKind.PARAM, method_sig, ((index, context),))

    @classmethod
    def invocation(cls, method_sig: str, pairs: Iterable[tuple[int, str]]) -> "FitnessGoal":
        return cls(GoalKind.INVOCATION, method_sig, tuple(pairs))

    @property
    def label(self) -> str:
        inner = ",".join(f"{i}:{c}" for i, c in self.pairs)
        return f"{self.kind.value}({inner})"

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind.value, "method_sig": self.method_sig,
                "pairs": [{"param_index": i, "context": c} for i, c in self.pairs]}


@dataclass(frozen=True)
class Candidate:
    assignment: Mapping[int, str]

    def __post_init__(self) -> None:
        object.__setattr__(self, "assignment", dict(sorted(self.assignment.items())))

    @property
    def length(self) -> int:
        return sum(len(v) for v in self.assignment.values())

    def to_dict(self) -> dict[str, str]:
        return {str(i): v for i, v in self.assignment.items()}


def f_c3invo(candidate: Candidate, goal: FitnessGoal, registry: ContextRegistry | None = None) -> float:
    registry = registry or builtin_registry()
    worst = 0.0
    for index, name in goal.pairs:
        if index not in candidate.assignment:
            raise ValueError(f"candidate does not assign parameter {index}")
        worst = max(worst, f_c3(candidate.assignment[index], lookup(registry, name), registry))
    return worst


@dataclass(frozen=True)
class SearchConfig:
    population: int = 50
    max_generations: int = 200
    rng_seed: int = 0
    crossover_prob: float = 0.75
    insert_prob: float = 1 / 3
    delete_prob: float = 1 / 3
    replace_prob: float = 1 / 3
    seed_injection_prob: float = 0.3
    max_initial_length: int = 10

    def __post_init__(self) -> None:
        if self.population < 2:
            raise ValueError("population must be at least 2")
        if self.max_generations < 0:
            raise ValueError("max_generations must not be negative")
        for name in ("crossover_prob", "insert_prob", "delete_prob", "replace_prob", "seed_injection_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
        if self.insert_prob + self.delete_prob + self.replace_prob <= 0:
            raise ValueError("at least one character mutation must have positive probability")


@dataclass
class GoalStatus:
    goal: FitnessGoal
    covered: bool
    fitness: float
    candidate: Candidate | None
    generation: int | None = None  # generation at which the goal was covered

    def to_dict(self) -> dict[str, Any]:
        return {
            "goal": self.goal.to_dict(),
            "label": self.goal.label,
            "covered": self.covered,
            "fitness": self.fitness,
            "values": self.candidate.to_dict() if self.candidate else None,
            "covered_at_generation": self.generation,
        }


@dataclass
class SynthesisResult:
    method_sig: str
    statuses: list[GoalStatus]
    generations: int
    evaluations: int
    rng_seed: int

    @property
    def covered(self) -> set[str]:
        return {s.goal.label for s in self.statuses if s.covered}

    def best(self, goal: FitnessGoal) -> Candidate | None:
        return next(s.candidate for s in self.statuses if s.goal == goal)

    def to_dict(self) -> dict[str, Any]:
        return {
            "method_sig": self.method_sig,
            "rng_seed": self.rng_seed,
            "generations": self.generations,
            "evaluations": self.evaluations,
            "goals": [s.to_dict() for s in self.statuses],
        }


_ALPHABET = string.ascii_letters + string.digits + string.punctuation + " "


class _Search:
    def __init__(self, goals: Sequence[FitnessGoal], registry: ContextRegistry, config: SearchConfig):
        self.goals = list(goals)
        self.registry = registry
        self.config = config
        self.rng = random.Random(config.rng_seed)
        self.indices = sorted({i for g in goals for i, _ in g.pairs})
        contexts: dict[int, ReadabilityContext] = {}
        for g in goals:
            for i, name in g.pairs:
                ctx = lookup(registry, name)
                _check_string(ctx)
                if contexts.setdefault(i, ctx) != ctx:
                    raise ValueError(f"parameter {i} has two contexts in one search")
        self.contexts = contexts
        self.seeds = {i: get_seeds(c) for i, c in contexts.items()}
        self._memo: dict[tuple[str, str], float] = {}
        self._vectors: dict[tuple[str, ...], tuple[float, ...]] = {}
        self.evaluations = 0

    def gene_fitness(self, value: str, ctx: ReadabilityContext) -> float:
        key = (value, ctx.name)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = f_c3(value, ctx, self.registry)
        return hit

    def vector(self, genes: tuple[str, ...]) -> tuple[float, ...]:
        hit = self._vectors.get(genes)
        if hit is not None:
            return hit
        self.evaluations += 1
        pos = {i: k for k, i in enumerate(self.indices)}
        out = []
        for g in self.goals:
            out.append(max(self.gene_fitness(genes[pos[i]], self.contexts[i]) for i, _ in g.pairs))
        vec = self._vectors[genes] = tuple(out)
        return vec

    def random_string(self) -> str:
        n = self.rng.randint(0, self.config.max_initial_length)
        return "".join(self.rng.choice(_ALPHABET) for _ in range(n))

    def mutate_gene(self, value: str, index: int) -> str:
        cfg, rng = self.config, self.rng
        if rng.random() < cfg.seed_injection_prob:
            return rng.choice(self.seeds[index])
        op = rng.choices(("insert", "delete", "replace"),
                         weights=(cfg.insert_prob, cfg.delete_prob, cfg.replace_prob))[0]
        if op == "insert" or not value:
            at = rng.randint(0, len(value))
            return value[:at] + rng.choice(_ALPHABET) + value[at:]
        at = rng.randrange(len(value))
        if op == "delete":
            return value[:at] + value[at + 1:]
        return value[:at] + rng.choice(_ALPHABET) + value[at + 1:]

    def mutate(self, genes: tuple[str, ...]) -> tuple[str, ...]:
        out = list(genes)
        rate = 1.0 / len(out)
        hit = False
        for k in range(len(out)):
            if self.rng.random() < rate:
                out[k] = self.mutate_gene(out[k], self.indices[k])
                hit = True
        if not hit:
            k = self.rng.randrange(len(out))
            out[k] = self.mutate_gene(out[k], self.indices[k])
        return tuple(out)

    def crossover(self, a: tuple[str, ...], b: tuple[str, ...]) -> tuple[tuple[str, ...], tuple[str, ...]]:
        if len(a) < 2 or self.rng.random() >= self.config.crossover_prob:
            return a, b
        cut = self.rng.randint(1, len(a) - 1)
        return a[:cut] + b[cut:], b[:cut] + a[cut:]

    def rank_key(self, genes: tuple[str, ...], open_goals: list[int]) -> tuple[float, int, int]:
        """Best value over uncovered goals, then smaller goal index, then shorter values."""
        vec = self.vector(genes)
        length = sum(map(len, genes))
        if not open_goals:
            return (0.0, 0, length)
        best = min(open_goals, key=lambda g: (vec[g], g))
        return (vec[best], best, length)


def synthesize_inputs(
    method_sig: str,
    goals: Sequence[FitnessGoal],
    registry: ContextRegistry | None = None,
    config: SearchConfig = SearchConfig(),
) -> SynthesisResult:
    """Steady-state GA with a per-goal archive: the first candidate that drives a
    goal to 0 is archived and the goal no longer steers selection."""
    if not goals:
        raise ValueError("no fitness goals to search for")
    for g in goals:
        if g.method_sig != method_sig:
            raise ValueError(f"goal {g.label} belongs to {g.method_sig}, not {method_sig}")
    registry = registry or builtin_registry()
    s = _Search(goals, registry, config)
    rng = s.rng
    n_goals = len(goals)
    archive: dict[int, tuple[tuple[str, ...], int]] = {}
    best: dict[int, tuple[float, int, tuple[str, ...]]] = {}

    def observe(genes: tuple[str, ...], generation: int) -> None:
        vec = s.vector(genes)
        length = sum(map(len, genes))
        for g, v in enumerate(vec):
            if g not in archive and v == 0.0:
                archive[g] = (genes, generation)
            cur = best.get(g)
            if cur is None or (v, length) < (cur[0], cur[1]):
                best[g] = (v, length, genes)

    population = [tuple(s.random_string() for _ in s.indices) for _ in range(config.population)]
    for genes in population:
        observe(genes, 0)

    generation = 0
    while len(archive) < n_goals and generation < config.max_generations:
        generation += 1
        open_goals = [g for g in range(n_goals) if g not in archive]
        for _ in range(max(1, config.population // 2)):
            p1 = _tournament(population, s, open_goals, rng)
            p2 = _tournament(population, s, open_goals, rng)
            c1, c2 = s.crossover(p1, p2)
            for child in (s.mutate(c1), s.mutate(c2)):
                observe(child, generation)
                worst = max(range(len(population)), key=lambda k: s.rank_key(population[k], open_goals))
                if s.rank_key(child, open_goals) < s.rank_key(population[worst], open_goals):
                    population[worst] = child
            if len(archive) == n_goals:
                break

    statuses = []
    for g, goal in enumerate(goals):
        if g in archive:
            genes, gen = archive[g]
            statuses.append(GoalStatus(goal, True, 0.0, Candidate(dict(zip(s.indices, genes))), gen))
        else:
            v, _, genes = best[g]
            statuses.append(GoalStatus(goal, False, v, Candidate(dict(zip(s.indices, genes)))))
    return SynthesisResult(method_sig, statuses, generation, s.evaluations, config.rng_seed)


def _tournament(population, s: _Search, open_goals: list[int], rng: random.Random, size: int = 2):
    picks = [population[rng.randrange(len(population))] for _ in range(size)]
    return min(picks, key=lambda genes: s.rank_key(genes, open_goals))


def goals_for_method(method_sig: str, mined: Iterable[MiningResult], registry: ContextRegistry) -> list[FitnessGoal]:
    """PARAM goals for every STRING-contexted parameter, plus one INVOCATION goal
    over all of them when there are at least two."""
    pairs = sorted(
        (m.site.param_index, m.context)
        for m in mined
        if m.site.method_sig == method_sig and m.context and lookup(registry, m.context).group is Group.STRING
    )
    goals = [FitnessGoal.param(method_sig, i, c) for i, c in pairs]  # type: ignore[arg-type]
    if len(pairs) >= 2:
        goals.append(FitnessGoal.invocation(method_sig, pairs))  # type: ignore[arg-type]
    return goals


# ------------------------------------------------------------ number formats


def _byte_offsets(text: str) -> list[int]:
    """Map byte offsets of the UTF-8 encoding to character offsets."""
    out = []
    for ch_index, ch in enumerate(text):
        out.extend([ch_index] * len(ch.encode("utf-8")))
    out.append(len(text))
    return out


def reformat_candidate_numbers(
    test: SourceUnit,
    mined: Iterable[MiningResult],
    registry: ContextRegistry | None = None,
) -> str:
    """Rewrite number literals bound to NUMBER-contexted parameters into their
    context's format. Binary operands of one call are padded to equal width."""
    registry = registry or builtin_registry()
    numeric = {}
    for m in mined:
        if m.context and lookup(registry, m.context).group is Group.NUMBER:
            numeric[m.site.key] = m
    if not numeric:
        return test.text
    bound = extract_test_inputs(test, [m.site for m in numeric.values()])
    bound = [b for b in bound if b.value_kind == "NUMBER"]
    widths: dict[tuple[int, int], int] = {}
    for b in bound:
        if numeric[b.site.key].context == "BINARY":
            digits = len(format(abs(int(parse_literal(b.literal_text).value)), "b"))
            widths[b.call_span] = max(widths.get(b.call_span, 0), digits)
    edits: dict[tuple[int, int], str] = {}
    for b in bound:
        ctx = numeric[b.site.key].context
        assert ctx is not None
        width = widths.get(b.call_span, 0) if ctx == "BINARY" else 0
        edits[b.span] = rewrite_number_literal(b.literal_text, ctx, fixed_width=registry.fixed_length_width,
                                               min_width=width)
    offsets = _byte_offsets(test.text)
    text = test.text
    for (start, end), new in sorted(edits.items(), reverse=True):
        text = text[: offsets[start]] + new + text[offsets[end]:]
    return text


# ---------------------------------------------------------- generated tests

DEFAULT_ARGS = {
    "String": '""', "byte": "0", "short": "0", "int": "0", "long": "0L", "float": "0.0f",
    "double": "0.0", "boolean": "false", "char": "'a'",
}
_TYPE_MAX = {"byte": 127, "short": 32767, "int": 2**31 - 1, "long": 2**63 - 1}


def java_string(value: str) -> str:
    out = []
    for ch in value:
        if ch in '"\\':
            out.append("\\" + ch)
        elif ch == "\n":
            out.append("\\n")
        elif ch == "\t":
            out.append("\\t")
        elif ch == "\r":
            out.append("\\r")
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return '"' + "".join(out) + '"'


def number_argument(type_name: str, context: str, rng: random.Random) -> str:
    """A plain decimal literal of ``type_name``, sized so that the context's
    format makes a visible difference once the literal is rewritten."""
    if type_name in ("float", "double"):
        digits = rng.randint(10, 99) * 10 ** rng.randint(8, 20)
        return f"{digits}.0" + ("f" if type_name == "float" else "")
    top = _TYPE_MAX.get(type_name, 2**31 - 1)
    if context in ("LONGNUMBER", "FIXEDLENGTH", "SCIENTIFIC") and top > 10**9:
        value = rng.randrange(10**9, top)
    else:
        value = rng.randrange(0, min(top, 255) + 1)
    return f"{value}L" if type_name == "long" else str(value)


def render_test_class(class_id: str, calls: Sequence[tuple[str, str, list[str]]]) -> str:
    """Java source of a test class with one test per call.

    ``calls`` holds (method name, ``"new"`` or ``"call"``, argument literals).
    Instance methods are invoked on a default-constructed receiver.
    """
    package, _, simple = class_id.rpartition(".")
    outer = simple.split("$")[0]
    lines = [f"package {package};", ""] if package else []
    lines.append(f"public class {outer}C3Test {{")
    for n, (name, how, args) in enumerate(calls):
        joined = ", ".join(args)
        expr = f"new {simple}({joined})" if how == "new" else f"new {simple}().{name}({joined})"
        lines += [f"    public void testC3_{n}() {{", f"        {expr};", "    }"]
    lines.append("}")
    return "\n".join(lines) + "\n"
