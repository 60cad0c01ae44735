"""Java source → per-method statement-token sequences."""

from .diagnostics import Diagnostic
from .masking import strip_noise
from .metrics import compute_metrics, file_metrics, line_counts
from .model import FileExtraction, FileMetrics, MethodStructure, SourceUnit, TypeEnvironment, resolve_receiver
from .parser import extract_file, extract_methods
from .walk import extract_units, find_sources, merge_methods, read_unit

__all__ = [
    "Diagnostic",
    "FileExtraction",
    "FileMetrics",
    "MethodStructure",
    "SourceUnit",
    "TypeEnvironment",
    "compute_metrics",
    "extract_file",
    "extract_methods",
    "extract_units",
    "file_metrics",
    "find_sources",
    "line_counts",
    "merge_methods",
    "read_unit",
    "resolve_receiver",
    "strip_noise",
]
