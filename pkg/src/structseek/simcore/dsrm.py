"""Derived-sequence retrieval model: ordered, consuming pattern matching.

The query is matched as a contiguous window over the document. Exact
matches of the full query are counted first, then every derived pattern
(the query with ``r`` positions negated, ``r = 1 .. n-1``) is matched
against what is left. Matched positive slots are consumed and can never
match again, so the leftover partial matches form the denominator
remainder.
"""

from __future__ import annotations

from collections.abc import Hashable, Sequence
from dataclasses import dataclass
from itertools import combinations

CONSUMED = None  # marker for a used slot; never equal to any term


@dataclass(frozen=True)
class ModelScore:
    similarity: float
    exact: int
    partial: int

    @classmethod
    def from_counts(cls, exact: int, partial: int) -> ModelScore:
        total = exact + partial
        return cls(exact / total if total else 0.0, exact, partial)


ZERO = ModelScore(0.0, 0, 0)


@dataclass(frozen=True)
class DerivedPattern:
    terms: tuple[Hashable, ...]
    negated: frozenset[int]  # 1-based positions

    @property
    def r(self) -> int:
        return len(self.negated)

    @property
    def weight(self) -> int:
        return len(self.terms) - len(self.negated)


def negation_masks(n: int, r: int) -> list[tuple[int, ...]]:
    """All r-subsets of 1..n, later positions negated first."""
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got r={r}, n={n}")
    return sorted(combinations(range(1, n + 1), r), reverse=True)


def sqc_comb(query: Sequence[Hashable], r: int) -> list[DerivedPattern]:
    terms = tuple(query)
    return [DerivedPattern(terms, frozenset(mask)) for mask in negation_masks(len(terms), r)]


def pass_count(n: int) -> int:
    """Number of matching passes over a document for an n-term query."""
    return 2**n - 1


def count_pass(work: list, pattern: DerivedPattern) -> int:
    """Scan ``work`` once with ``pattern``, consuming matched positive slots.

    A window matches when every positive position holds its term and every
    negated position does not (a consumed slot satisfies a negation).
    Scanning resumes at the next window start after a match. Returns the
    number of consumed slots, i.e. ``weight`` per matching window.
    """
    n = len(pattern.terms)
    positives = [(k, pattern.terms[k]) for k in range(n) if k + 1 not in pattern.negated]
    negatives = [(k, pattern.terms[k]) for k in range(n) if k + 1 in pattern.negated]
    total = 0
    for j in range(len(work) - n + 1):
        if all(work[j + k] == t for k, t in positives) and all(work[j + k] != t for k, t in negatives):
            for k, _ in positives:
                work[j + k] = CONSUMED
            total += len(positives)
    return total


def sim_dsrm(doc: Sequence[Hashable], query: Sequence[Hashable]) -> ModelScore:
    """DSRM similarity of a document sequence to a query sequence.

    When the document is shorter than the query the two swap roles, so the
    longer sequence is always the one scanned.
    """
    if not query:
        raise ValueError("empty query")
    if not doc:
        return ZERO
    if len(doc) < len(query):
        doc, query = query, doc
    if set(doc).isdisjoint(query):
        return ZERO  # every pattern has a positive term, none can match
    work = list(doc)
    n = len(query)
    exact = count_pass(work, DerivedPattern(tuple(query), frozenset()))
    partial = 0
    for r in range(1, n):
        for pattern in sqc_comb(query, r):
            partial += count_pass(work, pattern)
    return ModelScore.from_counts(exact, partial)
