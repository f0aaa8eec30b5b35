"""
Structure-constant table files.

Layout (UTF-8, newline-terminated, one entry per line)::

    {"header": {"backend": "algebraic", "format_version": 1, "kappa": 2, "left_factors": "all"},
     "entries": [
      {"u": [1, 2], "v": [1, 2], "w": [1, 2], "coeffs": [1]},
      ...
     ]}

Entries are sorted by (u, v, w) and zero entries are omitted, so identical
inputs give byte-identical files.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path
from typing import Iterable

from .hbar import HbarPoly
from .perm import Permutation

__all__ = [
    "FORMAT_VERSION", "TableFormatError", "write_table", "read_table",
    "cached_table_path", "CACHE_ENV",
]

FORMAT_VERSION = 1
CACHE_ENV = "HECKE_CACHE_DIR"

Entry = tuple[Permutation, Permutation, Permutation, HbarPoly]


class TableFormatError(ValueError):
    pass


def _header(kappa: int, backend: str, left_factors: str) -> dict:
    return {"backend": backend, "format_version": FORMAT_VERSION, "kappa": kappa, "left_factors": left_factors}


def _entry_line(u, v, w, c: HbarPoly) -> str:
    return json.dumps({"u": list(u), "v": list(v), "w": list(w), "coeffs": c.to_json()})


def write_table(path: str | os.PathLike, kappa: int, backend: str, entries: Iterable[Entry],
                left_factors: str = "all") -> int:
    """
    Write atomically: stream into a temporary file next to ``path``, then rename.

    Returns the number of entries written.
    """
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    count = 0
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write('{"header": ' + json.dumps(_header(kappa, backend, left_factors), sort_keys=True))
            fh.write(',\n "entries": [')
            for u, v, w, c in entries:
                fh.write(("\n  " if count == 0 else ",\n  ") + _entry_line(u, v, w, c))
                count += 1
            fh.write("\n ]}\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise
    return count


def read_table(path: str | os.PathLike) -> tuple[dict, list[Entry]]:
    """Load a table file, rejecting unknown format versions and unsorted entries."""
    with open(path, encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"{path}: not valid JSON ({exc})") from None
    header = data.get("header")
    if not isinstance(header, dict):
        raise TableFormatError(f"{path}: missing header")
    if header.get("format_version") != FORMAT_VERSION:
        raise TableFormatError(f"{path}: unsupported format_version {header.get('format_version')!r}")
    kappa = header.get("kappa")
    entries = []
    prev = None
    for e in data.get("entries", []):
        u, v, w = Permutation(e["u"]), Permutation(e["v"]), Permutation(e["w"])
        if not len(u) == len(v) == len(w) == kappa:
            raise TableFormatError(f"{path}: entry {e} does not match kappa={kappa}")
        key = (u, v, w)
        if prev is not None and key <= prev:
            raise TableFormatError(f"{path}: entries not strictly sorted at {e}")
        prev = key
        c = HbarPoly.from_json(e["coeffs"])
        if not c:
            raise TableFormatError(f"{path}: zero entry stored at {e}")
        entries.append((u, v, w, c))
    return header, entries


def cached_table_path(kappa: int, backend: str) -> Path | None:
    """The table file for (kappa, backend) under $HECKE_CACHE_DIR, if it exists."""
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    path = Path(root) / f"hecke_k{kappa}_{backend}.json"
    return path if path.is_file() else None
