"""Registry of transformations and filters with their datacards."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable

from .errors import DuplicateIdError, UnknownEntryError
from .tags import SetType, TagSet, tagset_from_dict, tagset_to_dict


class EntryKind(Enum):
    TRANSFORMATION = "transformation"
    FILTER = "filter"


@dataclass(frozen=True)
class RegistryEntry:
    """One transformation or filter plus its tag metadata (datacard)."""

    id: str
    kind: EntryKind
    tags: TagSet
    description: str
    default_params: dict = field(default_factory=dict)
    data_files: tuple[str, ...] = ()

    def validate(self) -> None:
        if not self.id:
            raise ValueError("entry id must be nonempty")
        self.tags.validate()
        expected = (
            SetType.TRANSFORMATION if self.kind is EntryKind.TRANSFORMATION else SetType.FILTER
        )
        if self.tags.general.augmented_set_type is not expected:
            raise ValueError(
                f"{self.id}: kind {self.kind.value} inconsistent with "
                f"augmented_set_type {self.tags.general.augmented_set_type.value}"
            )


class Registry:
    """Id-keyed store of entries.  Construct once, then share freely: nothing
    here mutates after the last ``register`` call."""

    def __init__(self, entries: Iterable[RegistryEntry] = ()):
        self._entries: dict[str, RegistryEntry] = {}
        for entry in entries:
            self.register(entry)

    def register(self, entry: RegistryEntry) -> "Registry":
        entry.validate()
        if entry.id in self._entries:
            raise DuplicateIdError(entry.id)
        self._entries[entry.id] = entry
        return self

    def __contains__(self, entry_id: str) -> bool:
        return entry_id in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def get(self, entry_id: str) -> RegistryEntry:
        try:
            return self._entries[entry_id]
        except KeyError:
            raise UnknownEntryError(entry_id) from None

    def entries(self) -> list[RegistryEntry]:
        return [self._entries[k] for k in sorted(self._entries)]

    def query(
        self,
        predicate: Callable[[TagSet], bool] | None = None,
        kind: EntryKind | None = None,
    ) -> list[RegistryEntry]:
        """Entries whose TagSet satisfies ``predicate`` (and kind), id order."""
        out = []
        for entry in self.entries():
            if kind is not None and entry.kind is not kind:
                continue
            if predicate is not None and not predicate(entry.tags):
                continue
            out.append(entry)
        return out

    def query_by_tags(self, predicate: Callable[[TagSet], bool]) -> list[RegistryEntry]:
        return self.query(predicate)


def entry_to_datacard(entry: RegistryEntry) -> dict:
    return {
        "id": entry.id,
        "kind": entry.kind.value,
        "description": entry.description,
        "tags": tagset_to_dict(entry.tags),
        "default_params": dict(entry.default_params),
        "data_files": list(entry.data_files),
    }


def entry_from_datacard(data: dict) -> RegistryEntry:
    entry = RegistryEntry(
        id=data["id"],
        kind=EntryKind(data["kind"]),
        tags=tagset_from_dict(data["tags"]),
        description=data["description"],
        default_params=dict(data.get("default_params", {})),
        data_files=tuple(data.get("data_files", ())),
    )
    entry.validate()
    return entry


def datacard_json(entry: RegistryEntry) -> str:
    return json.dumps(entry_to_datacard(entry), indent=2, sort_keys=True, ensure_ascii=False)


def write_datacards(registry: Registry, directory: str | Path) -> list[Path]:
    """One ``<id>.json`` per entry under ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in registry.entries():
        path = directory / f"{entry.id}.json"
        path.write_text(datacard_json(entry) + "\n", encoding="utf-8")
        written.append(path)
    return written
