"""Sorensen-Dice index extended to n sets, evaluated on term counts.

With the query's distinct terms as the sets and each term's occurrence
count in the document as the set size, the exact part is n' times the
number of complete tuples (the minimum count) and the weighted sum over
all negation combinations collapses to the total count of query terms in
the document.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Hashable, Iterable, Sequence

from .dsrm import ModelScore


def query_term_counts(doc: Iterable[Hashable], terms: Iterable[Hashable]) -> dict[Hashable, int]:
    counts = Counter(doc)
    return {t: counts.get(t, 0) for t in terms}


def dice_from_counts(counts: Sequence[int]) -> ModelScore:
    if not counts:
        raise ValueError("empty query")
    exact = len(counts) * min(counts)
    return ModelScore.from_counts(exact, sum(counts) - exact)


def sim_dice(doc: Iterable[Hashable], query: Sequence[Hashable]) -> ModelScore:
    if not query:
        raise ValueError("empty query")
    distinct = list(dict.fromkeys(query))
    return dice_from_counts(list(query_term_counts(doc, distinct).values()))
