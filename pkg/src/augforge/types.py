"""Shared domain value types."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Example:
    """One evaluation instance: a single text or a text pair, optionally
    labeled.  ``text2 is None`` marks the single-text shape."""

    id: str
    text: str
    text2: str | None = None
    label: str | None = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("example id must be nonempty")

    @property
    def is_pair(self) -> bool:
        return self.text2 is not None

    def payload(self):
        return self.text if self.text2 is None else (self.text, self.text2)
