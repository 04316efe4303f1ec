"""Evaluation numbers: precision/recall/F1, parameter coverage and readability
rates, goal coverage, and their rendering as JSON, CSV or Markdown."""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import Any, Callable, Iterable, Sequence

from .judge import Judgment
from .miner import MiningResult
from .search import GoalKind, SynthesisResult

NAN = float("nan")


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    tn: int
    fn: int

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "tn", "fn"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must not be negative")


@dataclass(frozen=True)
class ConfusionMetrics:
    precision: float
    recall: float
    f1: float


def _ratio(num: int, den: int) -> float:
    return num / den if den else NAN


def confusion_metrics(c: ConfusionCounts) -> ConfusionMetrics:
    """Undefined ratios are NaN, never 0."""
    p = _ratio(c.tp, c.tp + c.fp)
    r = _ratio(c.tp, c.tp + c.fn)
    if math.isnan(p) or math.isnan(r) or p + r == 0:
        f1 = NAN
    else:
        f1 = 2 * p * r / (p + r)
    return ConfusionMetrics(p, r, f1)


def percent(ratio: float, decimals: int = 0) -> str:
    """Half-up rounded percentage; ``-`` for an undefined ratio.

    With ``decimals`` > 0 a trailing ``.0`` is dropped, so 0.830 renders as 83%.
    """
    if ratio is None or math.isnan(ratio):
        return "-"
    q = Decimal(1).scaleb(-decimals)
    value = (Decimal(repr(ratio)) * 100).quantize(q, rounding=ROUND_HALF_UP)
    text = f"{value:f}"
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return f"{text}%"


# ------------------------------------------------------------- readability


@dataclass(frozen=True)
class ReadabilityRow:
    project: str
    group: str
    total_params: int
    covered_params: int
    readable_params: int

    @property
    def covered_rate(self) -> float:
        return _ratio(self.covered_params, self.total_params)

    @property
    def readable_rate(self) -> float:
        return _ratio(self.readable_params, self.covered_params)

    def to_dict(self) -> dict[str, Any]:
        return {"project": self.project, "group": self.group, "total_params": self.total_params,
                "covered_params": self.covered_params, "readable_params": self.readable_params}


@dataclass(frozen=True)
class ReadabilityReport:
    rows: tuple[ReadabilityRow, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "rows", tuple(self.rows))
        for r in self.rows:
            if not r.readable_params <= r.covered_params <= r.total_params:
                raise ValueError(f"inconsistent counts in row {r.project}/{r.group}")

    @property
    def totals(self) -> ReadabilityRow:
        return ReadabilityRow(
            "TOTAL", "ALL",
            sum(r.total_params for r in self.rows),
            sum(r.covered_params for r in self.rows),
            sum(r.readable_params for r in self.rows),
        )


def _project_of(result: MiningResult) -> str:
    return result.site.class_id.rsplit(".", 1)[0] if "." in result.site.class_id else "(default)"


def aggregate_readability(
    judgments: Iterable[Judgment],
    mined: Iterable[MiningResult],
    grouping: Callable[[MiningResult], str] = _project_of,
) -> ReadabilityReport:
    """Per (project, type group): contexted parameters, how many any test covers,
    and how many received at least one readable input."""
    sites = {m.site.key: m for m in mined if not m.is_misc}
    covered: set[tuple] = set()
    readable: set[tuple] = set()
    for j in judgments:
        key = j.input.site.key
        if key not in sites:
            continue
        covered.add(key)
        if j.readable:
            readable.add(key)
    cells: dict[tuple[str, str], list[int]] = {}
    for key, m in sites.items():
        cell = cells.setdefault((grouping(m), m.site.group), [0, 0, 0])
        cell[0] += 1
        cell[1] += key in covered
        cell[2] += key in readable
    rows = [ReadabilityRow(p, g, *counts) for (p, g), counts in sorted(cells.items())]
    return ReadabilityReport(tuple(rows))


# ----------------------------------------------------------- goal coverage


@dataclass(frozen=True)
class GoalCoverage:
    param_covered: int
    param_total: int
    invocation_covered: int
    invocation_total: int

    @property
    def c3_coverage(self) -> float:
        return _ratio(self.param_covered, self.param_total)

    @property
    def c3invo_coverage(self) -> float:
        return _ratio(self.invocation_covered, self.invocation_total)

    def __add__(self, other: "GoalCoverage") -> "GoalCoverage":
        return GoalCoverage(self.param_covered + other.param_covered, self.param_total + other.param_total,
                            self.invocation_covered + other.invocation_covered,
                            self.invocation_total + other.invocation_total)


def goal_coverage(result: SynthesisResult | Sequence[SynthesisResult]) -> GoalCoverage:
    results = [result] if isinstance(result, SynthesisResult) else list(result)
    counts = {GoalKind.PARAM: [0, 0], GoalKind.INVOCATION: [0, 0]}
    for res in results:
        for s in res.statuses:
            counts[s.goal.kind][0] += s.covered
            counts[s.goal.kind][1] += 1
    return GoalCoverage(*counts[GoalKind.PARAM], *counts[GoalKind.INVOCATION])


# --------------------------------------------------------------- rendering


class ReportFormat(str, Enum):
    JSON = "JSON"
    CSV = "CSV"
    MARKDOWN = "MARKDOWN"


@dataclass(frozen=True)
class Report:
    """Everything a report file can hold; every part is optional."""

    readability: ReadabilityReport = field(default_factory=ReadabilityReport)
    confusion: ConfusionCounts | None = None
    coverage: GoalCoverage | None = None

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {"readability": [r.to_dict() for r in self.readability.rows]}
        if self.confusion is not None:
            c = self.confusion
            doc["confusion"] = {"tp": c.tp, "fp": c.fp, "tn": c.tn, "fn": c.fn}
        if self.coverage is not None:
            g = self.coverage
            doc["coverage"] = {"param_covered": g.param_covered, "param_total": g.param_total,
                               "invocation_covered": g.invocation_covered,
                               "invocation_total": g.invocation_total}
        return doc

    @classmethod
    def from_dict(cls, doc: dict[str, Any]) -> "Report":
        rows = tuple(ReadabilityRow(**r) for r in doc.get("readability", []))
        confusion = ConfusionCounts(**doc["confusion"]) if "confusion" in doc else None
        coverage = GoalCoverage(**doc["coverage"]) if "coverage" in doc else None
        return cls(ReadabilityReport(rows), confusion, coverage)


def _as_report(report: Report | ReadabilityReport | ConfusionCounts | GoalCoverage) -> Report:
    if isinstance(report, Report):
        return report
    if isinstance(report, ReadabilityReport):
        return Report(readability=report)
    if isinstance(report, ConfusionCounts):
        return Report(confusion=report)
    if isinstance(report, GoalCoverage):
        return Report(coverage=report)
    raise TypeError(f"cannot render {type(report).__name__}")


_ROW_HEADER = ["project", "group", "total", "covered", "covered_rate", "readable", "readable_rate"]


def _row_cells(r: ReadabilityRow) -> list[str]:
    return [r.project, r.group, str(r.total_params), str(r.covered_params), percent(r.covered_rate),
            str(r.readable_params), percent(r.readable_rate)]


def render_report(report: Report | ReadabilityReport | ConfusionCounts | GoalCoverage,
                  fmt: ReportFormat | str = ReportFormat.MARKDOWN) -> str:
    try:
        fmt = fmt if isinstance(fmt, ReportFormat) else ReportFormat(str(fmt).upper())
    except ValueError:
        raise ValueError(f"unknown report format: {fmt!r}") from None
    rep = _as_report(report)
    if fmt is ReportFormat.JSON:
        doc = rep.to_dict()
        if rep.confusion is not None:
            m = confusion_metrics(rep.confusion)
            doc["metrics"] = {k: (None if math.isnan(v) else round(v, 6))
                              for k, v in (("precision", m.precision), ("recall", m.recall), ("f1", m.f1))}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if fmt is ReportFormat.CSV:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(_ROW_HEADER)
        for r in rep.readability.rows:
            w.writerow(_row_cells(r))
        if rep.readability.rows:
            w.writerow(_row_cells(rep.readability.totals))
        return buf.getvalue()
    return _markdown(rep)


def _markdown(rep: Report) -> str:
    parts = []
    if rep.confusion is not None:
        c, m = rep.confusion, confusion_metrics(rep.confusion)
        parts.append(
            "| TP | FP | TN | FN | Precision | Recall | F1 |\n|---|---|---|---|---|---|---|\n"
            f"| {c.tp} | {c.fp} | {c.tn} | {c.fn} | {percent(m.precision, 1)} | {percent(m.recall, 1)} "
            f"| {percent(m.f1, 1)} |\n"
        )
    if rep.readability.rows or rep.confusion is None and rep.coverage is None:
        lines = ["| " + " | ".join(_ROW_HEADER) + " |", "|" + "---|" * len(_ROW_HEADER)]
        rows = list(rep.readability.rows)
        if rows:
            rows.append(rep.readability.totals)
        lines += ["| " + " | ".join(_row_cells(r)) + " |" for r in rows]
        parts.append("\n".join(lines) + "\n")
    if rep.coverage is not None:
        g = rep.coverage
        parts.append(
            "| C3 coverage | C3invo coverage |\n|---|---|\n"
            f"| {percent(g.c3_coverage)} ({g.param_covered}/{g.param_total}) "
            f"| {percent(g.c3invo_coverage)} ({g.invocation_covered}/{g.invocation_total}) |\n"
        )
    return "\n".join(parts)
