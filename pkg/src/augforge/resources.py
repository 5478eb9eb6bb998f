"""Bundled data files and user overrides.

Data files live under ``augforge/data``.  A user directory given via the
``--data-dir`` flag or the ``AUGFORGE_DATA_DIR`` environment variable is
searched first, falling back to the bundled copy, so individual lexicons and
charmaps can be overridden without forking the package.
"""

from __future__ import annotations

import os
from pathlib import Path

DATA_ENV = "AUGFORGE_DATA_DIR"
_BUNDLED = Path(__file__).parent / "data"


def data_path(relative: str, data_dir: str | Path | None = None) -> Path:
    override = data_dir or os.environ.get(DATA_ENV)
    if override:
        candidate = Path(override) / relative
        if candidate.exists():
            return candidate
    bundled = _BUNDLED / relative
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no data file {relative!r} (searched override and bundled)")


def read_tsv(path: Path) -> tuple[dict[str, str], list[list[str]]]:
    """Parse a TSV file with ``#key: value`` header directives and ``#``
    comments.  Returns (directives, rows)."""
    directives: dict[str, str] = {}
    rows: list[list[str]] = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        if not raw.strip():
            continue
        if raw.startswith("#"):
            body = raw[1:].strip()
            if ":" in body:
                key, _, value = body.partition(":")
                key = key.strip()
                if key and " " not in key:
                    directives[key] = value.strip()
            continue
        rows.append(raw.split("\t"))
    return directives, rows


def read_wordlist(path: Path) -> list[str]:
    out = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append(line)
    return out
