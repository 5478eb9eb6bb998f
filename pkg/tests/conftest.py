from __future__ import annotations

import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from augforge.registry import EntryKind, RegistryEntry  # noqa: E402
from augforge.tags import (  # noqa: E402
    AlgorithmType,
    Complexity,
    GeneralTags,
    GpuRequired,
    Implementation,
    InputProcessing,
    LinguisticLevel,
    Meaning,
    OutputRatio,
    OutputTags,
    Preservation,
    PrecisionRecall,
    ProcessingTags,
    Purpose,
    SetType,
    Similarity,
    TagSet,
    TaskType,
    na_output_tags,
)


class StubRng:
    """Scripted random source for forcing specific decisions in tests."""

    def __init__(self, randoms=(), choices=None):
        self._randoms = list(randoms)
        self._choices = list(choices) if choices is not None else None

    def random(self):
        return self._randoms.pop(0) if self._randoms else 0.0

    def below(self, n):
        if self._choices is not None and self._choices:
            return self._choices.pop(0) % n
        return 0

    def choice(self, seq):
        return seq[self.below(len(seq))]


def make_tagset(
    kind: EntryKind = EntryKind.TRANSFORMATION,
    meaning: Meaning = Meaning.ALWAYS_PRESERVED,
    implementation: Implementation = Implementation.RULE_BASED,
) -> TagSet:
    set_type = SetType.TRANSFORMATION if kind is EntryKind.TRANSFORMATION else SetType.FILTER
    output = (
        OutputTags(
            output_input_ratio=OutputRatio.EQ1,
            io_similarity=frozenset({Similarity.MEANING}),
            meaning=meaning,
            grammaticality=Preservation.ALWAYS_PRESERVED,
            readability=Preservation.ALWAYS_PRESERVED,
            naturalness=Preservation.ALWAYS_PRESERVED,
        )
        if kind is EntryKind.TRANSFORMATION
        else na_output_tags()
    )
    return TagSet(
        general=GeneralTags(
            augmented_set_type=set_type,
            purpose=frozenset({Purpose.ROBUSTNESS}),
            task_types=frozenset({TaskType.TEXT_CLASSIFICATION}),
            languages=frozenset({"en"}),
            linguistic_levels=frozenset({LinguisticLevel.LEXICAL}),
        ),
        output=output,
        processing=ProcessingTags(
            input_processing=frozenset({InputProcessing.SUBSTITUTION}),
            implementation=implementation,
            algorithm_type=frozenset({AlgorithmType.OTHER}),
            precision_recall=PrecisionRecall.HPHR,
            gpu_required=GpuRequired.NO,
            complexity=Complexity.LOW,
        ),
    )


def make_entry(entry_id: str, kind: EntryKind = EntryKind.TRANSFORMATION, **tag_kwargs) -> RegistryEntry:
    return RegistryEntry(
        id=entry_id,
        kind=kind,
        tags=make_tagset(kind=kind, **tag_kwargs),
        description=f"synthetic entry {entry_id}",
    )


@pytest.fixture
def write_jsonl(tmp_path):
    def _write(name: str, rows: list[dict]) -> Path:
        path = tmp_path / name
        path.write_text(
            "\n".join(json.dumps(r, ensure_ascii=False) for r in rows) + "\n",
            encoding="utf-8",
        )
        return path

    return _write
