"""Command-line front end: mine -> judge -> report, plus synthesize and add-context."""
from __future__ import annotations

import json
import logging
import os
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Iterator, TypeVar

import click

from . import __version__
from .clients import DEFAULT_MODEL, ENV_MODEL, LlmClient, LlmError, NerBackend, NerError
from .code_model import JavaParseError, Kind, SourceUnit, extract_parameters, iter_java_files
from .judge import Judge, JudgeConfig, Judgment, judge_suite
from .metrics import (
    ConfusionCounts, GoalCoverage, Report, ReportFormat, aggregate_readability, goal_coverage, render_report,
)
from .miner import MiningError, MiningResult, mine_sites
from .prompting import PromptBudget, PromptBudgetError
from .registry import ContextRegistry, Group, RegistryError, add_context, load_registry_file, lookup
from .search import (
    DEFAULT_ARGS, SearchConfig, SynthesisResult, goals_for_method, java_string, number_argument,
    reformat_candidate_numbers, render_test_class, synthesize_inputs,
)

MINED_SCHEMA = "c3kit.mined/1"
JUDGMENT_SCHEMA = "c3kit.judgment/1"
SYNTHESIS_SCHEMA = "c3kit.synthesis/1"
_EXT = {ReportFormat.JSON: "json", ReportFormat.CSV: "csv", ReportFormat.MARKDOWN: "md"}

log = logging.getLogger("c3kit")
T = TypeVar("T")


class Fatal(click.ClickException):
    exit_code = 1

    def show(self, file: Any = None) -> None:
        click.echo(f"c3kit: error: {self.format_message()}", err=True)


@dataclass
class RunConfig:
    registry_path: Path | None
    cache_dir: Path
    out_dir: Path
    budget: PromptBudget
    judge: JudgeConfig
    search: SearchConfig
    model_id: str
    _registry: ContextRegistry | None = field(default=None, repr=False)

    @property
    def registry(self) -> ContextRegistry:
        if self._registry is None:
            try:
                self._registry = load_registry_file(self.registry_path)
            except (RegistryError, OSError) as exc:
                raise Fatal(str(exc)) from None
        return self._registry

    def client(self) -> LlmClient:
        return LlmClient.from_env(self.cache_dir)

    def output(self, name: str) -> Path:
        self.out_dir.mkdir(parents=True, exist_ok=True)
        return self.out_dir / name


def _write_jsonl(path: Path, schema: str, records: list[dict[str, Any]]) -> None:
    with path.open("w", encoding="utf-8") as f:
        for rec in records:
            f.write(json.dumps({"schema": schema, **rec}, ensure_ascii=False, sort_keys=True) + "\n")


def _read_jsonl(path: Path, schema: str, parse: Callable[[dict[str, Any]], T]) -> list[T]:
    if not path.exists():
        raise Fatal(f"{path}: no such file")
    out = []
    for n, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            if rec.get("schema") != schema:
                raise ValueError(f"expected schema {schema!r}, found {rec.get('schema')!r}")
            out.append(parse(rec))
        except (ValueError, KeyError, TypeError) as exc:
            raise Fatal(f"{path}:{n}: malformed record: {exc}") from None
    return out


def _load_mined(cfg: RunConfig, path: Path) -> list[MiningResult]:
    return _read_jsonl(path, MINED_SCHEMA, lambda d: MiningResult.from_dict(d, cfg.registry))


def _units(paths: tuple[str, ...], kind: Kind) -> Iterator[SourceUnit]:
    for p in iter_java_files(list(paths)):
        yield SourceUnit.from_path(p, kind)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option(__version__, prog_name="c3kit")
@click.option("--registry", "registry_path", type=click.Path(dir_okay=False, path_type=Path),
              help="User registry document merged over the built-in contexts.")
@click.option("--cache-dir", type=click.Path(file_okay=False, path_type=Path), default=Path(".c3cache"),
              show_default=True, help="LLM response cache directory.")
@click.option("--out", "out_dir", type=click.Path(file_okay=False, path_type=Path), default=Path("out"),
              show_default=True, help="Directory for output files.")
@click.option("--no-llm", is_flag=True, help="Judge with regex, NER and rules only.")
@click.option("--ner", type=click.Choice(["gazetteer", "server"], case_sensitive=False), default="gazetteer",
              show_default=True, help="NER backend for string judging.")
@click.option("--bearable-length", type=click.IntRange(min=1), default=9, show_default=True)
@click.option("--max-token", type=click.IntRange(min=2), default=4096, show_default=True)
@click.option("--remain", type=click.IntRange(min=1), default=20, show_default=True)
@click.option("--rng-seed", type=int, default=0, show_default=True)
@click.option("--model", "model_id", default=None, help=f"LLM model id (default ${ENV_MODEL} or {DEFAULT_MODEL}).")
@click.option("-v", "--verbose", count=True)
@click.pass_context
def main(ctx: click.Context, registry_path, cache_dir, out_dir, no_llm, ner, bearable_length, max_token,
         remain, rng_seed, model_id, verbose) -> None:
    """Mine readability contexts of method parameters and judge test inputs against them."""
    logging.basicConfig(level=logging.WARNING - 10 * verbose, format="%(levelname)s %(name)s: %(message)s")
    try:
        budget = PromptBudget(max_token, remain)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--remain") from None
    ctx.obj = RunConfig(
        registry_path=registry_path,
        cache_dir=cache_dir,
        out_dir=out_dir,
        budget=budget,
        judge=JudgeConfig(bearable_length, not no_llm, NerBackend(ner.upper())),
        search=SearchConfig(rng_seed=rng_seed),
        model_id=model_id or os.environ.get(ENV_MODEL, DEFAULT_MODEL),
    )


@main.command()
@click.argument("sources", nargs=-1, type=click.Path(exists=True, path_type=Path))
@click.option("--votes", type=click.IntRange(min=1), default=1, show_default=True,
              help="LLM calls per parameter; the majority outcome wins.")
@click.option("--workers", type=click.IntRange(min=1), default=4, show_default=True)
@click.pass_obj
def mine(cfg: RunConfig, sources, votes, workers) -> None:
    """Mine a context (or MISC) for every primitive parameter in SOURCES."""
    registry = cfg.registry
    sites = []
    for unit in _units(sources, Kind.CODE_UNDER_TEST):
        try:
            sites.extend(extract_parameters(unit))
        except JavaParseError as exc:
            raise Fatal(str(exc)) from None
    try:
        results = mine_sites(sites, registry, cfg.budget, cfg.client(), model_id=cfg.model_id,
                             votes=votes, workers=workers)
    except (MiningError, PromptBudgetError) as exc:
        raise Fatal(str(exc)) from None
    path = cfg.output("mined.jsonl")
    _write_jsonl(path, MINED_SCHEMA, [r.to_dict() for r in results])
    contexted = sum(not r.is_misc for r in results)
    click.echo(f"mined {len(results)} parameters ({contexted} with a context) -> {path}")


def _render_and_write(cfg: RunConfig, report: Report, fmt: str) -> Path:
    rf = ReportFormat(fmt.upper())
    path = cfg.output(f"report.{_EXT[rf]}")
    path.write_text(render_report(report, rf), encoding="utf-8")
    return path


_FORMATS = click.Choice(["json", "csv", "markdown"], case_sensitive=False)


@main.command()
@click.argument("tests", nargs=-1, type=click.Path(exists=True, path_type=Path))
@click.option("--mined", "mined_path", type=click.Path(dir_okay=False, path_type=Path),
              help="Mining output (default: OUT/mined.jsonl).")
@click.option("--format", "fmt", type=_FORMATS, default="markdown", show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=4, show_default=True)
@click.pass_obj
def judge(cfg: RunConfig, tests, mined_path, fmt, workers) -> None:
    """Judge the inputs that TESTS pass to contexted parameters."""
    mined = _load_mined(cfg, mined_path or cfg.out_dir / "mined.jsonl")
    try:
        judge_ = Judge(cfg.registry, cfg.judge, cfg.budget, None if not cfg.judge.use_llm else cfg.client(),
                       model_id=cfg.model_id)
        suite = judge_suite(list(_units(tests, Kind.TEST)), mined, judge_, workers=workers)
    except (LlmError, NerError) as exc:
        raise Fatal(str(exc)) from None
    for line in suite.diagnostics:
        click.echo(f"c3kit: warning: {line}", err=True)
    path = cfg.output("judgments.jsonl")
    _write_jsonl(path, JUDGMENT_SCHEMA, [j.to_dict() for j in suite.judgments])
    report = Report(aggregate_readability(suite.judgments, mined))
    report_path = _render_and_write(cfg, report, fmt)
    readable = sum(j.readable for j in suite.judgments)
    click.echo(f"judged {len(suite.judgments)} inputs ({readable} readable) -> {path}, {report_path}")


@main.command()
@click.option("--mined", "mined_path", type=click.Path(dir_okay=False, path_type=Path),
              help="Mining output (default: OUT/mined.jsonl).")
@click.option("--population", type=click.IntRange(min=2), default=50, show_default=True)
@click.option("--max-generations", type=click.IntRange(min=0), default=200, show_default=True)
@click.option("--reformat", "reformat_paths", multiple=True, type=click.Path(exists=True, path_type=Path),
              help="Existing test file (or directory) whose number literals are rewritten too.")
@click.pass_obj
def synthesize(cfg: RunConfig, mined_path, population, max_generations, reformat_paths) -> None:
    """Search readable string inputs per method and write a generated test class."""
    mined = _load_mined(cfg, mined_path or cfg.out_dir / "mined.jsonl")
    registry = cfg.registry
    search = SearchConfig(population=population, max_generations=max_generations, rng_seed=cfg.search.rng_seed)
    rng = random.Random(search.rng_seed)
    by_method: dict[tuple[str, str], list[MiningResult]] = {}
    for m in mined:
        by_method.setdefault((m.site.class_id, m.site.method_sig), []).append(m)

    results: list[SynthesisResult] = []
    classes: dict[str, list[tuple[str, str, list[str]]]] = {}
    for (class_id, sig), items in sorted(by_method.items()):
        contexted = [m for m in items if not m.is_misc]
        if not contexted:
            continue
        goals = goals_for_method(sig, contexted, registry)
        strings: dict[int, str] = {}
        if goals:
            res = synthesize_inputs(sig, goals, registry, search)
            results.append(res)
            for status in sorted(res.statuses, key=lambda s: (not s.covered, s.goal.kind.value != "INVOCATION")):
                for i, v in (status.candidate.assignment.items() if status.candidate else ()):
                    strings.setdefault(i, v)
        site = items[0].site
        contexts = {m.site.param_index: m.context for m in contexted}
        args = []
        for i, type_name in enumerate(site.param_types):
            ctx = contexts.get(i)
            if i in strings:
                args.append(java_string(strings[i]))
            elif ctx and lookup(registry, ctx).group is Group.NUMBER:
                args.append(number_argument(type_name, ctx, rng))
            else:
                args.append(DEFAULT_ARGS.get(type_name, "null"))
        simple = class_id.rsplit(".", 1)[-1]
        how = "new" if site.method_name == simple else "call"
        classes.setdefault(class_id, []).append((site.method_name, how, args))

    written = []
    gen_dir = cfg.output("generated")
    gen_dir.mkdir(exist_ok=True)
    for class_id, calls in classes.items():
        source = render_test_class(class_id, calls)
        path = gen_dir / f"{class_id.rsplit('.', 1)[-1]}C3Test.java"
        unit = SourceUnit(str(path), source, Kind.TEST)
        path.write_text(reformat_candidate_numbers(unit, mined, registry), encoding="utf-8")
        written.append(path)
    if reformat_paths:
        ref_dir = cfg.output("reformatted")
        ref_dir.mkdir(exist_ok=True)
        for unit in _units(reformat_paths, Kind.TEST):
            try:
                text = reformat_candidate_numbers(unit, mined, registry)
            except (JavaParseError, ValueError) as exc:
                raise Fatal(f"{unit.path}: {exc}") from None
            (ref_dir / Path(unit.path).name).write_text(text, encoding="utf-8")
            written.append(ref_dir / Path(unit.path).name)

    cov = goal_coverage(results)
    doc = {
        "schema": SYNTHESIS_SCHEMA,
        "config": {"population": population, "max_generations": max_generations, "rng_seed": search.rng_seed},
        "methods": [r.to_dict() for r in results],
        "coverage": {"param_covered": cov.param_covered, "param_total": cov.param_total,
                     "invocation_covered": cov.invocation_covered, "invocation_total": cov.invocation_total},
        "generated": [str(p) for p in written],
    }
    out = cfg.output("synthesis.json")
    out.write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    if not classes:
        click.echo("c3kit: notice: no contexted parameters to synthesize for", err=True)
    click.echo(f"searched {len(results)} methods, generated {len(written)} files -> {out}")


@main.command()
@click.option("--mined", "mined_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--judgments", "judgments_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--synthesis", "synthesis_path", type=click.Path(dir_okay=False, path_type=Path))
@click.option("--confusion", nargs=4, type=click.IntRange(min=0), metavar="TP FP TN FN",
              help="Confusion counts of a manual review of mined contexts.")
@click.option("--format", "fmt", type=_FORMATS, default="markdown", show_default=True)
@click.pass_obj
def report(cfg: RunConfig, mined_path, judgments_path, synthesis_path, confusion, fmt) -> None:
    """Render readability, accuracy and goal-coverage tables."""
    readability = None
    if mined_path or judgments_path:
        mined = _load_mined(cfg, mined_path or cfg.out_dir / "mined.jsonl")
        judgments = _read_jsonl(judgments_path or cfg.out_dir / "judgments.jsonl", JUDGMENT_SCHEMA,
                                Judgment.from_dict)
        readability = aggregate_readability(judgments, mined)
    coverage = None
    if synthesis_path:
        try:
            c = json.loads(Path(synthesis_path).read_text(encoding="utf-8"))["coverage"]
            coverage = GoalCoverage(**c)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise Fatal(f"{synthesis_path}: {exc}") from None
    rep = Report(
        readability=readability if readability is not None else Report().readability,
        confusion=ConfusionCounts(*confusion) if confusion else None,
        coverage=coverage,
    )
    path = _render_and_write(cfg, rep, fmt)
    click.echo(render_report(rep, fmt), nl=False)
    click.echo(f"-> {path}", err=True)


@main.command("add-context")
@click.argument("definition", required=False)
@click.option("--name")
@click.option("--group", type=click.Choice(["STRING", "NUMBER"]), default="STRING", show_default=True)
@click.option("--category", help="Category name; a new category is created when unknown.")
@click.option("--example", "examples", multiple=True, help="Example value (repeatable).")
@click.option("--regex")
@click.option("--judge-method", type=click.Choice(["LLM_REGEX", "LLM_NER", "REGEX", "RULE_REGEX"]))
@click.pass_obj
def add_context_cmd(cfg: RunConfig, definition, name, group, category, examples, regex, judge_method) -> None:
    """Add a context to the --registry document (created when missing).

    DEFINITION is a JSON object, a path to one, or '-' for standard input;
    alternatively give --name and --example flags.
    """
    if cfg.registry_path is None:
        raise click.UsageError("add-context needs --registry PATH to write to")
    if definition:
        try:
            text = sys.stdin.read() if definition == "-" else (
                Path(definition).read_text(encoding="utf-8") if Path(definition).is_file() else definition)
            entry = json.loads(text)
        except (OSError, ValueError) as exc:
            raise Fatal(f"cannot read context definition: {exc}") from None
    elif name:
        entry = {"name": name, "group": group, "examples": list(examples)}
        if category:
            entry["category"] = category
        if regex:
            entry["regex"] = regex
        if judge_method:
            entry["judge_method"] = judge_method
    else:
        raise click.UsageError("give a DEFINITION or --name")
    path = cfg.registry_path
    try:
        doc = json.loads(path.read_text(encoding="utf-8")) if path.exists() else {}
        merged = add_context(doc, entry)
    except (ValueError, OSError) as exc:
        raise Fatal(f"{path}: {exc}") from None
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(json.dumps(merged, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    os.replace(tmp, path)
    total = len(load_registry_file(path))
    click.echo(f"added {entry.get('name')} -> {path} ({total} contexts)")


if __name__ == "__main__":  # pragma: no cover
    main()
