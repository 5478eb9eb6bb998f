"""augforge: deterministic rule-based text perturbations, corpus filters, and
a robustness-evaluation harness."""

from .api import (
    DEFAULT_SEED,
    evaluate_corpus,
    filter_one,
    filter_texts,
    list_entries,
    transform_one,
    transform_texts,
)
from .corpus import (
    Corpus,
    Pairing,
    PerturbationRun,
    Split,
    apply_perturbation,
    load_corpus,
    load_run,
    sample_for_perturbation,
    write_run,
)
from .entries import apply_corpus_filter, apply_filter, apply_transform, builtin_registry
from .filters import Comparison, FilterVerdict
from .harness import (
    PredictionSet,
    ScoreReport,
    TagAggregate,
    accuracy,
    aggregate_by_tag,
    fetch_predictions,
    make_provider,
    render_report,
    score_variation,
    transformation_rate,
)
from .registry import EntryKind, Registry, RegistryEntry, write_datacards
from .rng import Rng, derive_rng
from .tags import TagSet
from .tokenizer import Token, TokenKind, detokenize, tokenize
from .types import Example

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_SEED",
    "Comparison",
    "Corpus",
    "EntryKind",
    "Example",
    "FilterVerdict",
    "Pairing",
    "PerturbationRun",
    "PredictionSet",
    "Registry",
    "RegistryEntry",
    "Rng",
    "ScoreReport",
    "Split",
    "TagAggregate",
    "TagSet",
    "Token",
    "TokenKind",
    "accuracy",
    "aggregate_by_tag",
    "apply_corpus_filter",
    "apply_filter",
    "apply_perturbation",
    "apply_transform",
    "builtin_registry",
    "derive_rng",
    "detokenize",
    "evaluate_corpus",
    "fetch_predictions",
    "filter_one",
    "filter_texts",
    "list_entries",
    "load_corpus",
    "load_run",
    "make_provider",
    "render_report",
    "sample_for_perturbation",
    "score_variation",
    "tokenize",
    "transform_one",
    "transform_texts",
    "transformation_rate",
    "write_datacards",
    "write_run",
]
