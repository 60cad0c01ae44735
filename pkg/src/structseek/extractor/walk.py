"""Source-tree discovery and (optionally parallel) extraction."""

from __future__ import annotations

import os
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .diagnostics import Diagnostic
from .model import FileExtraction, MethodStructure, SourceUnit
from .parser import extract_file


def find_sources(root: str | os.PathLike, extensions: Sequence[str] = (".java",)) -> list[Path]:
    root = Path(root)
    exts = tuple(e if e.startswith(".") else "." + e for e in extensions)
    found = [
        Path(dirpath) / name
        for dirpath, _, files in os.walk(root)
        for name in files
        if name.endswith(exts)
    ]
    return sorted(found)


def read_unit(path: Path, root: Path | None = None) -> tuple[SourceUnit | None, list[Diagnostic]]:
    """Load a file as a SourceUnit; unreadable files yield None plus a warning."""
    label = str(path.relative_to(root)) if root is not None else str(path)
    label = label.replace(os.sep, "/")
    try:
        data = path.read_bytes()
    except OSError as exc:
        return None, [Diagnostic(label, 1, f"unreadable file: {exc.strerror or exc}")]
    try:
        return SourceUnit(label, data.decode("utf-8")), []
    except UnicodeDecodeError:
        return SourceUnit(label, data.decode("latin-1")), [Diagnostic(label, 1, "not UTF-8; decoded as Latin-1")]


def extract_units(units: Iterable[SourceUnit], jobs: int = 1) -> list[FileExtraction]:
    """Extract many units; results come back in path order regardless of ``jobs``."""
    units = sorted(units, key=lambda u: u.path)
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(extract_file, units, chunksize=8))
    else:
        results = [extract_file(u) for u in units]
    return results


def merge_methods(results: Iterable[FileExtraction]) -> list[MethodStructure]:
    methods = [m for r in results for m in r.methods]
    methods.sort(key=lambda m: (m.file, m.line_start))
    return methods
