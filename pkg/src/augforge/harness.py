"""Metrics, prediction acquisition, per-tag aggregation, and report rendering.

Score convention: the score variation is perturbed minus original, in
percentage points, so a robustness drop is negative.
"""

from __future__ import annotations

import csv
import io
import json
import urllib.request
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, PerturbationRun
from .errors import (
    EmptyRunError,
    IncompleteCoverageError,
    MissingLabelError,
    ProviderError,
    UnknownEntryError,
)
from .registry import EntryKind, Registry
from .tags import CRITERIA, OUTPUT_CRITERIA, criterion_order, criterion_tags


@dataclass(frozen=True)
class PredictionSet:
    entry_id: str
    variant: str  # "original" | "perturbed"
    predictions: dict[str, str]

    def check_coverage(self, run: PerturbationRun) -> None:
        missing = [rec.id for rec in run.records if rec.id not in self.predictions]
        if missing:
            raise IncompleteCoverageError(missing)


@dataclass(frozen=True)
class ScoreReport:
    entry_id: str
    n: int
    transformation_rate: float | None
    original_score: float
    perturbed_score: float
    var_s: float

    def to_dict(self) -> dict:
        return {
            "entry_id": self.entry_id,
            "n": self.n,
            "transformation_rate": self.transformation_rate,
            "original_score": self.original_score,
            "perturbed_score": self.perturbed_score,
            "var_s": self.var_s,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ScoreReport":
        return cls(
            entry_id=data["entry_id"],
            n=data["n"],
            transformation_rate=data.get("transformation_rate"),
            original_score=data["original_score"],
            perturbed_score=data["perturbed_score"],
            var_s=data["var_s"],
        )


@dataclass(frozen=True)
class TagAggregate:
    criterion: str
    tag: str
    n_all: int
    n_evl: int
    mean_rate: float | None
    mean_var: float | None


def transformation_rate(run: PerturbationRun) -> float:
    if not run.records:
        raise EmptyRunError(run.entry_id)
    return sum(1 for rec in run.records if rec.changed) / len(run.records)


def accuracy(predictions: PredictionSet, gold: Corpus, ids=None) -> float:
    """Percent correct over ``ids`` (default: the whole corpus)."""
    wanted = set(ids) if ids is not None else None
    total = 0
    correct = 0
    for ex in gold.examples:
        if wanted is not None and ex.id not in wanted:
            continue
        if ex.label is None:
            raise MissingLabelError(f"example {ex.id!r} has no gold label")
        if ex.id not in predictions.predictions:
            raise MissingLabelError(f"no prediction for example {ex.id!r}")
        total += 1
        if predictions.predictions[ex.id] == ex.label:
            correct += 1
    if total == 0:
        raise MissingLabelError("no examples to score")
    return 100.0 * correct / total


def score_variation(original_score: float, perturbed_score: float) -> float:
    return perturbed_score - original_score


def aggregate_by_tag(
    reports: list[ScoreReport], registry: Registry, criterion: str
) -> list[TagAggregate]:
    """Group reports by the tag their entry carries under ``criterion``.
    Set-valued criteria contribute each report to every tag it carries.
    Means are unweighted; rows follow the canonical tag order.  One report
    per entry is expected per table (one dataset), keeping n_evl <= n_all."""
    if criterion not in CRITERIA:
        raise ValueError(f"unknown criterion: {criterion!r}")
    for report in reports:
        if report.entry_id not in registry:
            raise UnknownEntryError(report.entry_id)

    transformations_only = criterion in OUTPUT_CRITERIA
    all_counts: dict[str, int] = {}
    for entry in registry.entries():
        if transformations_only and entry.kind is not EntryKind.TRANSFORMATION:
            continue
        for tag in criterion_tags(entry.tags, criterion):
            all_counts[tag] = all_counts.get(tag, 0) + 1

    grouped: dict[str, list[ScoreReport]] = {}
    for report in reports:
        entry = registry.get(report.entry_id)
        for tag in criterion_tags(entry.tags, criterion):
            grouped.setdefault(tag, []).append(report)

    def mean(values: list[float]) -> float | None:
        return sum(values) / len(values) if values else None

    aggregates = []
    for tag in criterion_order(criterion):
        n_all = all_counts.get(tag, 0)
        contributing = grouped.get(tag, [])
        if n_all == 0 and not contributing:
            continue
        rates = [r.transformation_rate for r in contributing if r.transformation_rate is not None]
        aggregates.append(
            TagAggregate(
                criterion=criterion,
                tag=tag,
                n_all=n_all,
                n_evl=len(contributing),
                mean_rate=mean(rates),
                mean_var=mean([r.var_s for r in contributing]) if contributing else None,
            )
        )
    return aggregates


def _cell(value: float | None) -> str:
    # blank cell, never 0, when a mean is undefined
    return "" if value is None else format(value, "g")


def render_report(aggregates: list[TagAggregate], fmt: str = "markdown") -> str:
    if fmt in ("markdown", "md"):
        lines = ["| Tag | #All | #Evl | R_T | Var_S |", "| --- | ---: | ---: | ---: | ---: |"]
        for agg in aggregates:
            lines.append(
                f"| {agg.tag} | {agg.n_all} | {agg.n_evl} "
                f"| {_cell(agg.mean_rate)} | {_cell(agg.mean_var)} |"
            )
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["criterion", "tag", "n_all", "n_evl", "mean_rate", "mean_var"])
        for agg in aggregates:
            writer.writerow(
                [
                    agg.criterion,
                    agg.tag,
                    agg.n_all,
                    agg.n_evl,
                    "" if agg.mean_rate is None else repr(agg.mean_rate),
                    "" if agg.mean_var is None else repr(agg.mean_var),
                ]
            )
        return buf.getvalue()
    if fmt == "json":
        return (
            json.dumps(
                [
                    {
                        "criterion": a.criterion,
                        "tag": a.tag,
                        "n_all": a.n_all,
                        "n_evl": a.n_evl,
                        "mean_rate": a.mean_rate,
                        "mean_var": a.mean_var,
                    }
                    for a in aggregates
                ],
                indent=2,
                sort_keys=True,
            )
            + "\n"
        )
    raise ValueError(f"unknown report format: {fmt!r}")


def parse_report_csv(text: str) -> list[TagAggregate]:
    reader = csv.reader(io.StringIO(text))
    rows = list(reader)
    out = []
    for row in rows[1:]:
        criterion, tag, n_all, n_evl, mean_rate, mean_var = row
        out.append(
            TagAggregate(
                criterion=criterion,
                tag=tag,
                n_all=int(n_all),
                n_evl=int(n_evl),
                mean_rate=float(mean_rate) if mean_rate else None,
                mean_var=float(mean_var) if mean_var else None,
            )
        )
    return out


# --- prediction providers ----------------------------------------------------

def _record_text(payload) -> str:
    # pair payloads are joined for single-text scoring endpoints
    return payload if isinstance(payload, str) else payload[0] + "\n" + payload[1]


class FileProvider:
    """JSONL of ``{"id", "variant": "original"|"perturbed", "prediction"}``."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def fetch(self, run: PerturbationRun) -> tuple[PredictionSet, PredictionSet]:
        try:
            raw = self.path.read_text(encoding="utf-8")
        except OSError as exc:
            raise ProviderError(str(exc)) from None
        by_variant: dict[str, dict[str, str]] = {"original": {}, "perturbed": {}}
        for lineno, line in enumerate(raw.splitlines(), start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
                by_variant[obj["variant"]][str(obj["id"])] = str(obj["prediction"])
            except (json.JSONDecodeError, KeyError) as exc:
                raise ProviderError(f"line {lineno}: {exc}") from None
        sets = tuple(
            PredictionSet(entry_id=run.entry_id, variant=v, predictions=by_variant[v])
            for v in ("original", "perturbed")
        )
        for pset in sets:
            pset.check_coverage(run)
        return sets


class HttpProvider:
    """POSTs ``{"texts": [...]}`` and reads ``{"predictions": [...]}`` back,
    one request per batch of at most 64 texts, ordered by example id."""

    BATCH = 64

    def __init__(self, endpoint: str, auth_header: str | None = None, timeout: float = 30.0):
        self.endpoint = endpoint
        self.auth_header = auth_header
        self.timeout = timeout

    def _post(self, texts: list[str]) -> list[str]:
        body = json.dumps({"texts": texts}).encode("utf-8")
        request = urllib.request.Request(
            self.endpoint, data=body, headers={"Content-Type": "application/json"}
        )
        if self.auth_header:
            request.add_header("Authorization", self.auth_header)
        try:
            with urllib.request.urlopen(request, timeout=self.timeout) as response:
                payload = json.loads(response.read().decode("utf-8"))
        except Exception as exc:  # noqa: BLE001 - network errors become ProviderError
            raise ProviderError(f"POST {self.endpoint}: {exc}") from None
        predictions = payload.get("predictions")
        if not isinstance(predictions, list) or len(predictions) != len(texts):
            raise ProviderError("response 'predictions' must mirror request 'texts'")
        return [str(p) for p in predictions]

    def fetch(self, run: PerturbationRun) -> tuple[PredictionSet, PredictionSet]:
        ordered = sorted(run.records, key=lambda rec: rec.id)
        out = []
        for variant in ("original", "perturbed"):
            predictions: dict[str, str] = {}
            for start in range(0, len(ordered), self.BATCH):
                batch = ordered[start : start + self.BATCH]
                texts = [
                    _record_text(rec.original if variant == "original" else rec.perturbed)
                    for rec in batch
                ]
                for rec, label in zip(batch, self._post(texts)):
                    predictions[rec.id] = label
            pset = PredictionSet(entry_id=run.entry_id, variant=variant, predictions=predictions)
            pset.check_coverage(run)
            out.append(pset)
        return tuple(out)


def fetch_predictions(run: PerturbationRun, provider) -> tuple[PredictionSet, PredictionSet]:
    return provider.fetch(run)


def make_provider(spec: str, auth_header: str | None = None):
    """Parse a provider spec: ``file:PATH`` or ``http:URL`` / ``https:URL``."""
    kind, _, rest = spec.partition(":")
    if kind == "file" and rest:
        return FileProvider(rest)
    if kind in ("http", "https") and rest:
        endpoint = spec if rest.startswith("//") else f"{kind}://{rest}"
        return HttpProvider(endpoint, auth_header)
    raise ProviderError(f"bad provider spec: {spec!r}")
