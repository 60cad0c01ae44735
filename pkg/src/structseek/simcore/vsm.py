"""tf-idf weighting and cosine similarity.

Weights are ``tf * log2(M / df)``. Queries are weighted the same way with
their raw term counts and the corpus idf; terms the corpus never saw get
weight 0.
"""

from __future__ import annotations

import math
from collections import Counter
from collections.abc import Hashable, Iterable, Mapping
from dataclasses import dataclass, field


class UnknownTermError(KeyError):
    pass


@dataclass
class TfIdfModel:
    M: int
    df: dict[Hashable, int] = field(default_factory=dict)

    @classmethod
    def build(cls, documents: Iterable[Iterable[Hashable]]) -> TfIdfModel:
        df: Counter = Counter()
        m = 0
        for doc in documents:
            m += 1
            df.update(set(doc))
        if m == 0:
            raise ValueError("cannot build a tf-idf model from zero documents")
        return cls(m, dict(df))

    @property
    def vocabulary(self) -> set[Hashable]:
        return set(self.df)

    def idf(self, term: Hashable) -> float:
        try:
            df = self.df[term]
        except KeyError:
            raise UnknownTermError(term) from None
        return math.log2(self.M / df)

    def weight(self, tf: int, term: Hashable) -> float:
        if tf == 0 or term not in self.df:
            return 0.0
        return tf * self.idf(term)

    def vector(self, counts: Mapping[Hashable, int]) -> dict[Hashable, float]:
        return {t: self.weight(c, t) for t, c in counts.items()}


def idf(term: Hashable, model: TfIdfModel) -> float:
    return model.idf(term)


def weight(tf: int, term: Hashable, model: TfIdfModel) -> float:
    return model.weight(tf, term)


def norm(vec: Mapping[Hashable, float]) -> float:
    return math.sqrt(sum(w * w for w in vec.values()))


def cosine(d: Mapping[Hashable, float], q: Mapping[Hashable, float]) -> float:
    nd, nq = norm(d), norm(q)
    if nd == 0.0 or nq == 0.0:
        return 0.0
    if len(q) > len(d):
        d, q = q, d
    dot = sum(w * d.get(t, 0.0) for t, w in q.items())
    return dot / (nd * nq)


def sim_vsm(doc_counts: Mapping[Hashable, int], query_counts: Mapping[Hashable, int], model: TfIdfModel) -> float:
    return cosine(model.vector(doc_counts), model.vector(query_counts))
