"""Batch-first convenience layer shared by the CLI and external bindings."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .corpus import Corpus, PerturbationRun, apply_perturbation, sample_for_perturbation
from .entries import apply_filter, apply_transform, builtin_registry
from .filters import FilterVerdict
from .harness import (
    ScoreReport,
    accuracy,
    fetch_predictions,
    score_variation,
    transformation_rate,
)
from .rng import derive_rng, fnv1a64
from .types import Example

DEFAULT_SEED = 1729


def transform_texts(
    entry_id: str,
    texts: list[str],
    seed: int = DEFAULT_SEED,
    params: dict | None = None,
    ids: list[str] | None = None,
    workers: int = 1,
) -> list[str]:
    """Transform a batch.  The random stream of each item is keyed by its id
    (position index when ids are not given), matching the corpus pipeline."""
    if ids is None:
        ids = [str(i) for i in range(len(texts))]

    def one(pair: tuple[str, str]) -> str:
        item_id, text = pair
        rng = derive_rng(seed, fnv1a64(item_id), entry_id)
        return apply_transform(entry_id, text, rng, params)

    items = list(zip(ids, texts))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(one, items))
    return [one(item) for item in items]


def filter_texts(
    entry_id: str,
    texts: list[str],
    params: dict | None = None,
    ids: list[str] | None = None,
) -> list[FilterVerdict]:
    if ids is None:
        ids = [str(i) for i in range(len(texts))]
    return [
        apply_filter(entry_id, Example(id=item_id, text=text), params)
        for item_id, text in zip(ids, texts)
    ]


def transform_one(entry_id: str, text: str, seed: int = DEFAULT_SEED, params: dict | None = None) -> str:
    return transform_texts(entry_id, [text], seed=seed, params=params)[0]


def filter_one(entry_id: str, text: str, params: dict | None = None) -> bool:
    return filter_texts(entry_id, [text], params=params)[0].value


def evaluate_corpus(
    corpus: Corpus,
    entry_id: str,
    provider,
    seed: int = DEFAULT_SEED,
    fraction: float = 0.2,
    baseline: str = "sample",
    params: dict | None = None,
    workers: int = 1,
) -> tuple[ScoreReport, PerturbationRun]:
    """The full protocol: sample, perturb, score both variants, report.

    ``baseline`` picks the population for the original-data score: "sample"
    scores the sampled subset (the perturbed score's population), "full"
    scores the whole corpus."""
    sample = sample_for_perturbation(corpus, fraction=fraction, seed=seed)
    run = apply_perturbation(
        corpus,
        entry_id,
        lambda text, rng: apply_transform(entry_id, text, rng, params),
        sample,
        global_seed=seed,
        sample_fraction=fraction,
        workers=workers,
    )
    original_preds, perturbed_preds = fetch_predictions(run, provider)
    sampled_ids = [rec.id for rec in run.records]
    if baseline == "full":
        original_score = accuracy(original_preds, corpus)
    elif baseline == "sample":
        original_score = accuracy(original_preds, corpus, ids=sampled_ids)
    else:
        raise ValueError(f"unknown baseline mode: {baseline!r}")
    perturbed_score = accuracy(perturbed_preds, corpus, ids=sampled_ids)
    report = ScoreReport(
        entry_id=entry_id,
        n=len(run.records),
        transformation_rate=transformation_rate(run),
        original_score=original_score,
        perturbed_score=perturbed_score,
        var_s=score_variation(original_score, perturbed_score),
    )
    return report, run


def list_entries(kind: str | None = None, tag: tuple[str, str] | None = None) -> list[dict]:
    """Entry metadata records, optionally filtered by kind and by one
    ``(criterion, value)`` tag query."""
    from .registry import EntryKind
    from .tags import criterion_tags

    registry = builtin_registry()
    kind_enum = EntryKind(kind) if kind else None
    out = []
    for entry in registry.entries():
        if kind_enum is not None and entry.kind is not kind_enum:
            continue
        if tag is not None:
            criterion, value = tag
            if value not in criterion_tags(entry.tags, criterion):
                continue
        out.append(
            {
                "id": entry.id,
                "kind": entry.kind.value,
                "description": entry.description,
                "default_params": dict(entry.default_params),
            }
        )
    return out
