"""Dataset ingestion, the 20%-sample perturbation strategy, and run files."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Callable

from .errors import ParseError
from .rng import Rng, derive_rng, fnv1a64
from .types import Example


class Split(Enum):
    TRAIN = "train"
    VALIDATION = "validation"
    TEST = "test"


class Pairing(Enum):
    SINGLE = "single"
    PAIR = "pair"


@dataclass
class Corpus:
    name: str
    split: Split
    pairing: Pairing
    examples: list[Example]

    def __post_init__(self):
        seen = set()
        for ex in self.examples:
            if ex.id in seen:
                raise ParseError(f"duplicate example id {ex.id!r}")
            seen.add(ex.id)
            if (ex.text2 is not None) != (self.pairing is Pairing.PAIR):
                raise ParseError(f"example {ex.id!r} does not match corpus pairing")

    def __len__(self) -> int:
        return len(self.examples)

    def ids(self) -> list[str]:
        return [ex.id for ex in self.examples]


@dataclass(frozen=True)
class RunRecord:
    id: str
    original: str | tuple[str, str]
    perturbed: str | tuple[str, str]
    changed: bool
    error: str | None = None


@dataclass
class PerturbationRun:
    entry_id: str
    global_seed: int
    sample_fraction: float
    selected_ids: tuple[str, ...]
    records: list[RunRecord]


def load_corpus(
    path: str | Path,
    name: str | None = None,
    split: Split = Split.VALIDATION,
) -> Corpus:
    """Read a JSONL corpus: ``{"id", "text"}`` or ``{"id", "text1", "text2"}``
    per line, optional ``"label"``.  The pairing shape comes from the first
    line and must hold throughout."""
    path = Path(path)
    examples: list[Example] = []
    pairing: Pairing | None = None
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", line=lineno) from None
        if "text" in obj:
            shape = Pairing.SINGLE
            ex = Example(id=str(obj["id"]), text=obj["text"], label=obj.get("label"))
        elif "text1" in obj and "text2" in obj:
            shape = Pairing.PAIR
            ex = Example(
                id=str(obj["id"]), text=obj["text1"], text2=obj["text2"],
                label=obj.get("label"),
            )
        else:
            raise ParseError("expected 'text' or 'text1'/'text2'", line=lineno)
        if pairing is None:
            pairing = shape
        elif shape is not pairing:
            raise ParseError("mixed single/pair shapes in one corpus", line=lineno)
        examples.append(ex)
    try:
        return Corpus(
            name=name or path.stem,
            split=split,
            pairing=pairing or Pairing.SINGLE,
            examples=examples,
        )
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def sample_for_perturbation(corpus: Corpus, fraction: float = 0.2, seed: int = 0) -> set[str]:
    """Uniform sample without replacement of round(fraction*N) example ids.
    Rounding is half-up so 0.5 fractions never silently shrink."""
    if not 0 < fraction <= 1:
        raise ValueError("fraction must be in (0, 1]")
    n = len(corpus)
    k = int(fraction * n + 0.5)
    rng = derive_rng(seed, 0, "corpus-sample")
    indices = list(range(n))
    # partial Fisher-Yates: the first k slots are a uniform sample
    for i in range(min(k, n - 1)):
        j = i + rng.below(n - i)
        indices[i], indices[j] = indices[j], indices[i]
    ids = corpus.ids()
    return {ids[i] for i in indices[:k]}


def _perturb_one(
    ex: Example, entry_id: str, transform: Callable[[str, Rng], str], global_seed: int
) -> RunRecord:
    rng = derive_rng(global_seed, fnv1a64(ex.id), entry_id)
    error = None
    try:
        perturbed_first = transform(ex.text, rng)
    except Exception as exc:  # noqa: BLE001 - per-record isolation is the contract
        perturbed_first = ex.text
        error = f"{type(exc).__name__}: {exc}"
    if ex.is_pair:
        original = (ex.text, ex.text2)
        perturbed = (perturbed_first, ex.text2)
    else:
        original = ex.text
        perturbed = perturbed_first
    return RunRecord(
        id=ex.id,
        original=original,
        perturbed=perturbed,
        changed=perturbed != original,
        error=error,
    )


def apply_perturbation(
    corpus: Corpus,
    entry_id: str,
    transform: Callable[[str, Rng], str],
    sample: set[str],
    global_seed: int,
    sample_fraction: float | None = None,
    workers: int = 1,
) -> PerturbationRun:
    """Perturb the sampled examples.  Pair examples have only their first
    element transformed; the second is copied verbatim.  The per-example
    random stream is keyed by the example id (not its position), so corpus
    order and worker count never change the output.  A transformation error
    on one record keeps the original text (changed=False) and notes the error
    instead of aborting the run."""
    selected_examples = [ex for ex in corpus.examples if ex.id in sample]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(
                pool.map(lambda ex: _perturb_one(ex, entry_id, transform, global_seed),
                         selected_examples)
            )
    else:
        records = [_perturb_one(ex, entry_id, transform, global_seed) for ex in selected_examples]
    if sample_fraction is None:
        sample_fraction = len(selected_examples) / len(corpus) if len(corpus) else 0.0
    return PerturbationRun(
        entry_id=entry_id,
        global_seed=global_seed,
        sample_fraction=sample_fraction,
        selected_ids=tuple(ex.id for ex in selected_examples),
        records=records,
    )


def _payload_to_json(payload):
    if isinstance(payload, tuple):
        return {"text1": payload[0], "text2": payload[1]}
    return payload


def _payload_from_json(value):
    if isinstance(value, dict):
        return (value["text1"], value["text2"])
    return value


def write_run(run: PerturbationRun, path: str | Path) -> None:
    """Run JSONL: one header line, then one record per line."""
    path = Path(path)
    lines = [
        json.dumps(
            {
                "entry_id": run.entry_id,
                "global_seed": run.global_seed,
                "sample_fraction": run.sample_fraction,
                "selected_ids": list(run.selected_ids),
            },
            ensure_ascii=False,
            sort_keys=True,
        )
    ]
    for rec in run.records:
        obj = {
            "id": rec.id,
            "original": _payload_to_json(rec.original),
            "perturbed": _payload_to_json(rec.perturbed),
            "changed": rec.changed,
        }
        if rec.error is not None:
            obj["error"] = rec.error
        lines.append(json.dumps(obj, ensure_ascii=False, sort_keys=True))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_run(path: str | Path) -> PerturbationRun:
    path = Path(path)
    raw_lines = [l for l in path.read_text(encoding="utf-8").splitlines() if l.strip()]
    if not raw_lines:
        raise ParseError("empty run file")
    header = json.loads(raw_lines[0])
    records = []
    for lineno, raw in enumerate(raw_lines[1:], start=2):
        try:
            obj = json.loads(raw)
            records.append(
                RunRecord(
                    id=obj["id"],
                    original=_payload_from_json(obj["original"]),
                    perturbed=_payload_from_json(obj["perturbed"]),
                    changed=obj["changed"],
                    error=obj.get("error"),
                )
            )
        except (json.JSONDecodeError, KeyError) as exc:
            raise ParseError(f"bad run record: {exc}", line=lineno) from None
    return PerturbationRun(
        entry_id=header["entry_id"],
        global_seed=header["global_seed"],
        sample_fraction=header["sample_fraction"],
        selected_ids=tuple(header["selected_ids"]),
        records=records,
    )
