from __future__ import annotations

from collections.abc import Iterable

from .masking import strip_noise
from .model import FileExtraction, FileMetrics, SourceUnit
from .parser import extract_file


def line_counts(text: str) -> tuple[int, int, int]:
    """(code, comment, total) line counts for one file.

    A line with any code is a code line even if it also carries a comment;
    a line with only comment text is a comment line; the rest are blank.
    """
    masked = strip_noise(text, keep_literals=True)
    code = comment = 0
    orig_lines = text.splitlines()
    masked_lines = masked.splitlines()
    for orig, mask in zip(orig_lines, masked_lines):
        if mask.strip():
            code += 1
        elif orig.strip():
            comment += 1
    return code, comment, len(orig_lines)


def file_metrics(unit: SourceUnit, extraction: FileExtraction | None = None) -> FileMetrics:
    if extraction is None:
        extraction = extract_file(unit)
    code, comment, total = line_counts(unit.text)
    return FileMetrics(1, extraction.classes, len(extraction.methods), code, comment, total)


def compute_metrics(units: Iterable[SourceUnit]) -> FileMetrics:
    total = FileMetrics()
    for unit in units:
        total = total + file_metrics(unit)
    return total
