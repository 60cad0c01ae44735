"""Structural statement extraction from Java and sequence-based method retrieval."""

__version__ = "0.1.0"
