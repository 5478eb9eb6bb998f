"""Three-axis tag taxonomy for transformations and filters.

Tags are authored data attached to each registry entry (a datacard), never
inferred from code.  Enum declaration order is the canonical row order used
when aggregating evaluation results by tag.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum


class SetType(Enum):
    FILTER = "filter"
    TRANSFORMATION = "transformation"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class Purpose(Enum):
    AUGMENTATION = "augmentation"
    BIAS = "bias"
    ROBUSTNESS = "robustness"
    OTHER = "other"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class TaskType(Enum):
    QUALITY_ESTIMATION = "quality-estimation"
    QUESTION_ANSWERING = "question-answering"
    QUESTION_GENERATION = "question-generation"
    RDF_TO_TEXT = "rdf-to-text"
    SENTIMENT_ANALYSIS = "sentiment-analysis"
    TABLE_TO_TEXT = "table-to-text"
    TEXT_CLASSIFICATION = "text-classification"
    TEXT_TAGGING = "text-tagging"
    TEXT_TO_TEXT = "text-to-text"


class LinguisticLevel(Enum):
    DISCOURSE = "discourse"
    SEMANTIC = "semantic"
    STYLE = "style"
    LEXICAL = "lexical"
    SYNTACTIC = "syntactic"
    WORD_ORDER = "word-order"
    MORPHOLOGICAL = "morphological"
    CHARACTER = "character"
    OTHER = "other"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class OutputRatio(Enum):
    EQ1 = "eq-1"
    GT_LOW = "gt-low"
    GT_HIGH = "gt-high"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class Similarity(Enum):
    AURAL = "aural"
    MEANING = "meaning"
    VISUAL = "visual"
    OTHER = "other"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class Meaning(Enum):
    ALWAYS_PRESERVED = "always-preserved"
    POSSIBLY_CHANGED = "possibly-changed"
    ALWAYS_CHANGED = "always-changed"
    POSSIBLY_ADDED = "possibly-added"
    ALWAYS_ADDED = "always-added"
    POSSIBLY_REMOVED = "possibly-removed"
    ALWAYS_REMOVED = "always-removed"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class Preservation(Enum):
    """Grammaticality / readability / naturalness effect."""

    ALWAYS_PRESERVED = "always-preserved"
    POSSIBLY_IMPAIRED = "possibly-impaired"
    ALWAYS_IMPAIRED = "always-impaired"
    POSSIBLY_IMPROVED = "possibly-improved"
    ALWAYS_IMPROVED = "always-improved"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class InputProcessing(Enum):
    ADDITION = "addition"
    CHUNKING = "chunking"
    PARAPHRASING = "paraphrasing"
    PARSING = "parsing"
    POS_TAGGING = "pos-tagging"
    REMOVAL = "removal"
    SEGMENTATION = "segmentation"
    SIMPLIFICATION = "simplification"
    STEMMING = "stemming"
    SUBSTITUTION = "substitution"
    TOKENISATION = "tokenisation"
    TRANSLATION = "translation"
    OTHER = "other"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class Implementation(Enum):
    MODEL_BASED = "model-based"
    RULE_BASED = "rule-based"
    BOTH = "both"
    UNCLEAR = "unclear"
    NA = "na"


class AlgorithmType(Enum):
    API_BASED = "api-based"
    EXTERNAL_KNOWLEDGE_BASED = "external-knowledge-based"
    LSTM_BASED = "lstm-based"
    TRANSFORMER_BASED = "transformer-based"
    OTHER = "other"
    MULTIPLE = "multiple"
    UNCLEAR = "unclear"
    NA = "na"


class PrecisionRecall(Enum):
    HPHR = "high-precision-high-recall"
    HPLR = "high-precision-low-recall"
    LPHR = "low-precision-high-recall"
    LPLR = "low-precision-low-recall"
    UNCLEAR = "unclear"
    NA = "na"


class GpuRequired(Enum):
    NO = "no"
    YES = "yes"
    UNCLEAR = "unclear"
    NA = "na"


class Complexity(Enum):
    HIGH = "high"
    MEDIUM = "medium"
    LOW = "low"


@dataclass(frozen=True)
class GeneralTags:
    augmented_set_type: SetType
    purpose: frozenset[Purpose]
    task_types: frozenset[TaskType]
    languages: frozenset[str]  # ISO-639-1 codes
    linguistic_levels: frozenset[LinguisticLevel]


@dataclass(frozen=True)
class OutputTags:
    output_input_ratio: OutputRatio = OutputRatio.NA
    io_similarity: frozenset[Similarity] = frozenset()
    meaning: Meaning = Meaning.NA
    grammaticality: Preservation = Preservation.NA
    readability: Preservation = Preservation.NA
    naturalness: Preservation = Preservation.NA


@dataclass(frozen=True)
class ProcessingTags:
    input_processing: frozenset[InputProcessing]
    implementation: Implementation
    algorithm_type: frozenset[AlgorithmType]
    precision_recall: PrecisionRecall
    gpu_required: GpuRequired
    complexity: Complexity


_NA_OUTPUT = OutputTags(
    output_input_ratio=OutputRatio.NA,
    io_similarity=frozenset({Similarity.NA}),
    meaning=Meaning.NA,
    grammaticality=Preservation.NA,
    readability=Preservation.NA,
    naturalness=Preservation.NA,
)


@dataclass(frozen=True)
class TagSet:
    general: GeneralTags
    output: OutputTags
    processing: ProcessingTags
    # free-text qualifiers for "other"/"multiple" values, keyed by field name
    notes: tuple[tuple[str, str], ...] = ()

    def validate(self) -> None:
        for code in self.general.languages:
            if not (len(code) == 2 and code.isalpha() and code.islower()):
                raise ValueError(f"not an ISO-639-1 code: {code!r}")
        if self.general.augmented_set_type is not SetType.TRANSFORMATION:
            if self.output != _NA_OUTPUT:
                raise ValueError(
                    "output tags apply to transformations only; "
                    "filters must carry all-NA output tags"
                )

    def note(self, field_name: str) -> str | None:
        for key, value in self.notes:
            if key == field_name:
                return value
        return None


def na_output_tags() -> OutputTags:
    """The all-NA output axis required for non-transformation entries."""
    return _NA_OUTPUT


def _enum_set(values) -> list[str]:
    return sorted(v.value for v in values)


def tagset_to_dict(tags: TagSet) -> dict:
    """Plain-dict form with kebab-case enum values (datacard body)."""
    g, o, p = tags.general, tags.output, tags.processing
    out = {
        "general": {
            "augmented_set_type": g.augmented_set_type.value,
            "purpose": _enum_set(g.purpose),
            "task_types": _enum_set(g.task_types),
            "languages": sorted(g.languages),
            "linguistic_levels": _enum_set(g.linguistic_levels),
        },
        "output": {
            "output_input_ratio": o.output_input_ratio.value,
            "io_similarity": _enum_set(o.io_similarity),
            "meaning": o.meaning.value,
            "grammaticality": o.grammaticality.value,
            "readability": o.readability.value,
            "naturalness": o.naturalness.value,
        },
        "processing": {
            "input_processing": _enum_set(p.input_processing),
            "implementation": p.implementation.value,
            "algorithm_type": _enum_set(p.algorithm_type),
            "precision_recall": p.precision_recall.value,
            "gpu_required": p.gpu_required.value,
            "complexity": p.complexity.value,
        },
    }
    if tags.notes:
        out["notes"] = {k: v for k, v in tags.notes}
    return out


def tagset_from_dict(data: dict) -> TagSet:
    g = data["general"]
    o = data["output"]
    p = data["processing"]
    tags = TagSet(
        general=GeneralTags(
            augmented_set_type=SetType(g["augmented_set_type"]),
            purpose=frozenset(Purpose(v) for v in g["purpose"]),
            task_types=frozenset(TaskType(v) for v in g["task_types"]),
            languages=frozenset(g["languages"]),
            linguistic_levels=frozenset(LinguisticLevel(v) for v in g["linguistic_levels"]),
        ),
        output=OutputTags(
            output_input_ratio=OutputRatio(o["output_input_ratio"]),
            io_similarity=frozenset(Similarity(v) for v in o["io_similarity"]),
            meaning=Meaning(o["meaning"]),
            grammaticality=Preservation(o["grammaticality"]),
            readability=Preservation(o["readability"]),
            naturalness=Preservation(o["naturalness"]),
        ),
        processing=ProcessingTags(
            input_processing=frozenset(InputProcessing(v) for v in p["input_processing"]),
            implementation=Implementation(p["implementation"]),
            algorithm_type=frozenset(AlgorithmType(v) for v in p["algorithm_type"]),
            precision_recall=PrecisionRecall(p["precision_recall"]),
            gpu_required=GpuRequired(p["gpu_required"]),
            complexity=Complexity(p["complexity"]),
        ),
        notes=tuple(sorted(data.get("notes", {}).items())),
    )
    tags.validate()
    return tags


# Aggregation criteria: name -> (accessor over TagSet, enum type in canonical
# row order, whether the axis is set-valued).
CRITERIA: dict[str, tuple] = {
    "set-type": (lambda t: t.general.augmented_set_type, SetType, False),
    "purpose": (lambda t: t.general.purpose, Purpose, True),
    "task-type": (lambda t: t.general.task_types, TaskType, True),
    "linguistic-level": (lambda t: t.general.linguistic_levels, LinguisticLevel, True),
    "output-ratio": (lambda t: t.output.output_input_ratio, OutputRatio, False),
    "io-similarity": (lambda t: t.output.io_similarity, Similarity, True),
    "meaning": (lambda t: t.output.meaning, Meaning, False),
    "grammaticality": (lambda t: t.output.grammaticality, Preservation, False),
    "readability": (lambda t: t.output.readability, Preservation, False),
    "naturalness": (lambda t: t.output.naturalness, Preservation, False),
    "input-processing": (lambda t: t.processing.input_processing, InputProcessing, True),
    "implementation": (lambda t: t.processing.implementation, Implementation, False),
    "algorithm-type": (lambda t: t.processing.algorithm_type, AlgorithmType, True),
    "precision-recall": (lambda t: t.processing.precision_recall, PrecisionRecall, False),
    "gpu-required": (lambda t: t.processing.gpu_required, GpuRequired, False),
    "complexity": (lambda t: t.processing.complexity, Complexity, False),
}


def criterion_tags(tags: TagSet, criterion: str) -> frozenset[str]:
    """Kebab-case tag values this TagSet carries under ``criterion``."""
    accessor, _, set_valued = CRITERIA[criterion]
    value = accessor(tags)
    if set_valued:
        return frozenset(v.value for v in value)
    return frozenset({value.value})


def criterion_order(criterion: str) -> list[str]:
    """Canonical row order of tag values for ``criterion``."""
    _, enum_type, _ = CRITERIA[criterion]
    return [member.value for member in enum_type]


# output-axis criteria apply to transformations only; filters carry a fixed
# all-NA output axis and are excluded from these tables
OUTPUT_CRITERIA = frozenset(
    {"output-ratio", "io-similarity", "meaning", "grammaticality", "readability", "naturalness"}
)
