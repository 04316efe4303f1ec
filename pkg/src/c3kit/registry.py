"""Readability context registry: built-in profile, seeds, regexes, gazetteers.

The built-in profile ships as ``data/registry.json``. User documents use the
same schema and are merged on top of it by :func:`load_registry`.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Mapping

MISC = "MISC"
NAME_RE = re.compile(r"^[A-Z][A-Z0-9_]*$")

# Procedural number rules; they never need a regex.
PROCEDURAL = frozenset({"LONGNUMBER", "FIXEDLENGTH"})

DEFAULT_FIXED_LENGTH_WIDTH = 4


class RegistryError(ValueError):
    """Malformed registry document or conflicting definitions."""


class UnknownContextError(KeyError):
    pass


class Group(str, Enum):
    STRING = "STRING"
    NUMBER = "NUMBER"


class JudgeMethod(str, Enum):
    LLM_REGEX = "LLM_REGEX"
    LLM_NER = "LLM_NER"
    REGEX = "REGEX"
    RULE_REGEX = "RULE_REGEX"


@dataclass(frozen=True)
class Shot:
    question: str
    answer: str


@dataclass(frozen=True)
class Category:
    name: str
    shot: Shot | None = None


@dataclass(frozen=True)
class ReadabilityContext:
    name: str
    group: Group
    category: str
    judge_method: JudgeMethod
    examples: tuple[str, ...]
    seeds: tuple[str, ...] = ()
    regex: str | None = None
    generic: bool = False

    @cached_property
    def pattern(self) -> re.Pattern[str] | None:
        return re.compile(self.regex) if self.regex else None

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "name": self.name,
            "group": self.group.value,
            "category": self.category,
            "judge_method": self.judge_method.value,
            "examples": list(self.examples),
            "seeds": list(self.seeds),
            "regex": self.regex,
        }
        if self.generic:
            d["generic"] = True
        return d


@dataclass(frozen=True)
class ContextRegistry:
    contexts: tuple[ReadabilityContext, ...]
    categories: tuple[Category, ...]
    gazetteers: Mapping[str, tuple[str, ...]] = field(default_factory=dict)
    fixed_length_width: int = DEFAULT_FIXED_LENGTH_WIDTH
    notes: Mapping[str, str] = field(default_factory=dict, compare=False)

    @cached_property
    def _by_name(self) -> dict[str, ReadabilityContext]:
        return {c.name: c for c in self.contexts}

    @cached_property
    def gazetteer_sets(self) -> dict[str, frozenset[str]]:
        return {label: frozenset(t.lower() for t in terms) for label, terms in self.gazetteers.items()}

    def __contains__(self, name: object) -> bool:
        return name in self._by_name

    def __len__(self) -> int:
        return len(self.contexts)

    def __iter__(self):
        return iter(self.contexts)

    def names(self, group: Group | None = None) -> list[str]:
        return [c.name for c in self.contexts if group is None or c.group is group]

    def by_group(self, group: Group) -> list[ReadabilityContext]:
        return [c for c in self.contexts if c.group is group]

    def category(self, name: str) -> Category | None:
        for cat in self.categories:
            if cat.name == name:
                return cat
        return None

    def siblings(self, context: ReadabilityContext) -> list[ReadabilityContext]:
        """Other contexts of the same category, in registry order."""
        return [c for c in self.contexts if c.category == context.category and c.name != context.name]

    def to_document(self) -> dict[str, Any]:
        doc: dict[str, Any] = {}
        if self.notes:
            doc["notes"] = dict(self.notes)
        if self.fixed_length_width != DEFAULT_FIXED_LENGTH_WIDTH:
            doc["settings"] = {"fixed_length_width": self.fixed_length_width}
        doc["contexts"] = [c.to_dict() for c in self.contexts]
        doc["categories"] = [
            {"name": cat.name, "shot": None if cat.shot is None else
             {"question": cat.shot.question, "answer": cat.shot.answer}}
            for cat in self.categories
        ]
        doc["gazetteers"] = {k: list(v) for k, v in self.gazetteers.items()}
        return doc


def lookup(registry: ContextRegistry, name: str) -> ReadabilityContext:
    try:
        return registry._by_name[name]
    except KeyError:
        raise UnknownContextError(name) from None


def get_seeds(context: ReadabilityContext) -> list[str]:
    if context.group is not Group.STRING:
        raise ValueError(f"{context.name} is a NUMBER context; only STRING contexts carry seeds")
    if not context.seeds:
        raise ValueError(f"{context.name} has no seeds")
    return list(context.seeds)


def _parse_context(raw: Any, *, user: bool) -> ReadabilityContext:
    if not isinstance(raw, dict):
        raise RegistryError(f"context entry must be an object, got {type(raw).__name__}")
    name = raw.get("name")
    if not isinstance(name, str) or not NAME_RE.match(name):
        raise RegistryError(f"invalid context name: {name!r}")
    if name == MISC:
        raise RegistryError(f"{MISC} is reserved for the no-context outcome")
    try:
        group = Group(raw.get("group", "STRING"))
    except ValueError:
        raise RegistryError(f"{name}: unknown group {raw.get('group')!r}") from None
    examples = raw.get("examples")
    if not examples or not isinstance(examples, list) or not all(isinstance(e, str) for e in examples):
        raise RegistryError(f"{name}: context needs a non-empty list of string examples")
    regex = raw.get("regex")
    if regex is not None:
        if not isinstance(regex, str):
            raise RegistryError(f"{name}: regex must be a string")
        try:
            re.compile(regex)
        except re.error as exc:
            raise RegistryError(f"{name}: regex does not compile: {exc}") from None
    default_method = {
        Group.STRING: JudgeMethod.LLM_REGEX if regex else JudgeMethod.LLM_NER,
        Group.NUMBER: JudgeMethod.REGEX,
    }[group] if user else None
    method_raw = raw.get("judge_method", default_method)
    try:
        method = JudgeMethod(method_raw)
    except ValueError:
        raise RegistryError(f"{name}: unknown judge_method {method_raw!r}") from None
    if group is Group.NUMBER and method in (JudgeMethod.LLM_NER, JudgeMethod.LLM_REGEX):
        raise RegistryError(f"{name}: NUMBER contexts are judged by REGEX or RULE_REGEX")
    if group is Group.STRING and method in (JudgeMethod.REGEX, JudgeMethod.RULE_REGEX):
        raise RegistryError(f"{name}: STRING contexts are judged by LLM_REGEX or LLM_NER")
    if method is not JudgeMethod.LLM_NER and not regex and name not in PROCEDURAL:
        raise RegistryError(f"{name}: judge_method {method.value} requires a regex")
    seeds = raw.get("seeds")
    if seeds is None:
        # user STRING contexts seed the search with their examples
        seeds = list(examples) if (user and group is Group.STRING) else []
    if not isinstance(seeds, list) or not all(isinstance(s, str) for s in seeds):
        raise RegistryError(f"{name}: seeds must be a list of strings")
    generic = bool(raw.get("generic", False))
    if generic and regex:
        raise RegistryError(f"{name}: generic contexts never carry a regex")
    return ReadabilityContext(
        name=name,
        group=group,
        category=str(raw.get("category", "Custom")),
        judge_method=method,
        examples=tuple(examples),
        seeds=tuple(seeds),
        regex=regex,
        generic=generic,
    )


def _parse_categories(raw: Any) -> list[Category]:
    if not isinstance(raw, list):
        raise RegistryError("`categories` must be an array")
    out = []
    for entry in raw:
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
            raise RegistryError(f"malformed category entry: {entry!r}")
        shot = entry.get("shot")
        if shot is not None:
            if not (isinstance(shot, dict) and isinstance(shot.get("question"), str)
                    and isinstance(shot.get("answer"), str)):
                raise RegistryError(f"category {entry['name']}: shot needs question and answer strings")
            shot = Shot(shot["question"], shot["answer"])
        out.append(Category(entry["name"], shot))
    return out


def _parse_gazetteers(raw: Any) -> dict[str, tuple[str, ...]]:
    if not isinstance(raw, dict):
        raise RegistryError("`gazetteers` must be an object")
    out = {}
    for label, terms in raw.items():
        if not isinstance(terms, list) or not all(isinstance(t, str) for t in terms):
            raise RegistryError(f"gazetteer {label}: expected an array of strings")
        out[label] = tuple(terms)
    return out


def _build(doc: Mapping[str, Any], base: ContextRegistry | None) -> ContextRegistry:
    if not isinstance(doc, Mapping):
        raise RegistryError("registry document must be a JSON object")
    unknown = set(doc) - {"contexts", "categories", "gazetteers", "settings", "notes"}
    if unknown:
        raise RegistryError(f"unknown top-level keys: {sorted(unknown)}")
    user = base is not None
    contexts = list(base.contexts) if base else []
    categories = list(base.categories) if base else []
    gazetteers = dict(base.gazetteers) if base else {}
    notes = dict(base.notes) if base else {}
    width = base.fixed_length_width if base else DEFAULT_FIXED_LENGTH_WIDTH

    seen = {c.name for c in contexts}
    raw_contexts = doc.get("contexts", [])
    if not isinstance(raw_contexts, list):
        raise RegistryError("`contexts` must be an array")
    for raw in raw_contexts:
        ctx = _parse_context(raw, user=user)
        if ctx.name in seen:
            raise RegistryError(f"duplicate context name: {ctx.name}")
        seen.add(ctx.name)
        contexts.append(ctx)

    cat_names = {c.name for c in categories}
    for cat in _parse_categories(doc.get("categories", [])):
        if cat.name in cat_names:
            raise RegistryError(f"duplicate category: {cat.name}")
        cat_names.add(cat.name)
        categories.append(cat)
    for ctx in contexts:
        if ctx.category not in cat_names:
            cat_names.add(ctx.category)
            categories.append(Category(ctx.category))

    for label, terms in _parse_gazetteers(doc.get("gazetteers", {})).items():
        merged = list(gazetteers.get(label, ()))
        merged += [t for t in terms if t not in merged]
        gazetteers[label] = tuple(merged)

    settings = doc.get("settings", {})
    if not isinstance(settings, Mapping):
        raise RegistryError("`settings` must be an object")
    if "fixed_length_width" in settings:
        width = settings["fixed_length_width"]
        if not isinstance(width, int) or width < 1:
            raise RegistryError("fixed_length_width must be a positive integer")
    notes.update(doc.get("notes", {}))

    return ContextRegistry(
        contexts=tuple(contexts),
        categories=tuple(categories),
        gazetteers=gazetteers,
        fixed_length_width=width,
        notes=notes,
    )


_BUILTIN: ContextRegistry | None = None


def builtin_registry() -> ContextRegistry:
    global _BUILTIN
    if _BUILTIN is None:
        text = resources.files("c3kit").joinpath("data/registry.json").read_text(encoding="utf-8")
        _BUILTIN = _build(json.loads(text), None)
    return _BUILTIN


def load_registry(document: Mapping[str, Any] | None = None, *, builtins: bool = True) -> ContextRegistry:
    """Build a registry from a document.

    With ``builtins=True`` (the default) the shipped profile is loaded first and
    the document's entries are merged on top; redefining a context is an error.
    ``builtins=False`` reads the document as a complete registry, which is what
    :meth:`ContextRegistry.to_document` produces.
    """
    if builtins:
        return _build(document or {}, builtin_registry())
    return _build(document or {}, None)


def load_registry_file(path: str | Path | None, *, builtins: bool = True) -> ContextRegistry:
    if path is None:
        return builtin_registry()
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise RegistryError(f"registry file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise RegistryError(f"{path}: invalid JSON: {exc}") from None
    return load_registry(doc, builtins=builtins)


def add_context(document: Mapping[str, Any], definition: Mapping[str, Any]) -> dict[str, Any]:
    """Return a copy of a user document with one more context, validated against the built-ins."""
    merged = json.loads(json.dumps(dict(document)))
    merged.setdefault("contexts", []).append(dict(definition))
    load_registry(merged)
    return merged


def iter_string_contexts(registry: ContextRegistry) -> Iterable[ReadabilityContext]:
    return (c for c in registry.contexts if c.group is Group.STRING)
