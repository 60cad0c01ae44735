"""Persisted method structures, ranked retrieval, and model comparison."""

from __future__ import annotations

import json
from collections import Counter
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import cached_property
from pathlib import Path

from .extractor.model import MethodStructure
from .simcore import ModelScore, TfIdfModel, cosine, sim_dice, sim_dsrm
from .tokens import QuerySyntaxError, StatementToken, parse_term

FORMAT = "struct-seek/1"
MODELS = ("dsrm", "dice", "vsm")


class CorpusFormatError(ValueError):
    pass


class UnknownModelError(ValueError):
    pass


def dedupe_ids(methods: Iterable[MethodStructure]) -> list[MethodStructure]:
    """Order by (file, line_start) and suffix repeated ids with ``#2``, ``#3``..."""
    ordered = sorted(methods, key=lambda m: (m.file, m.line_start))
    seen: Counter = Counter()
    taken = {m.method_id for m in ordered}
    out = []
    for m in ordered:
        seen[m.method_id] += 1
        if seen[m.method_id] > 1:
            k = seen[m.method_id]
            new_id = f"{m.method_id}#{k}"
            while new_id in taken:
                k += 1
                new_id = f"{m.method_id}#{k}"
            taken.add(new_id)
            m = MethodStructure(new_id, m.file, m.line_start, m.line_end, m.statements, m.code_lines)
        out.append(m)
    return out


@dataclass
class CorpusStore:
    methods: list[MethodStructure] = field(default_factory=list)
    source_root: str = ""
    created_at: str = ""

    @classmethod
    def from_methods(cls, methods: Iterable[MethodStructure], source_root: str = "", created_at: str | None = None) -> CorpusStore:
        if created_at is None:
            created_at = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
        return cls(dedupe_ids(methods), source_root, created_at)

    @cached_property
    def term_lists(self) -> list[tuple[str, ...]]:
        return [m.terms for m in self.methods]

    @cached_property
    def term_counts(self) -> list[Counter]:
        return [Counter(t) for t in self.term_lists]

    @cached_property
    def vocabulary(self) -> set[str]:
        return {t for terms in self.term_lists for t in terms}

    def __len__(self) -> int:
        return len(self.methods)


# ----------------------------------------------------------------------
# persistence


def dumps(store: CorpusStore) -> str:
    lines = [json.dumps({"format": FORMAT, "root": store.source_root, "created": store.created_at}, ensure_ascii=False, separators=(",", ":"))]
    for m in store.methods:
        record = {
            "id": m.method_id,
            "file": m.file,
            "ls": m.line_start,
            "le": m.line_end,
            "cl": m.code_lines,
            "stmts": [t.canonical_text for t in m.statements],
        }
        lines.append(json.dumps(record, ensure_ascii=False, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def loads(text: str) -> CorpusStore:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CorpusFormatError("line 1: missing header record")
    header = _record(lines[0], 1)
    found = header.get("format")
    if found != FORMAT:
        raise CorpusFormatError(f"unsupported format version: found {found!r}, expected {FORMAT!r}")
    try:
        store = CorpusStore([], str(header["root"]), str(header["created"]))
    except KeyError as exc:
        raise CorpusFormatError(f"line 1: header missing key {exc}") from None
    for lineno, line in enumerate(lines[1:], start=2):
        rec = _record(line, lineno)
        try:
            stmts: Sequence[StatementToken] = tuple(parse_term(s) for s in rec["stmts"])
            method = MethodStructure(rec["id"], rec["file"], int(rec["ls"]), int(rec["le"]), tuple(stmts), int(rec["cl"]))
        except (KeyError, TypeError, ValueError, QuerySyntaxError) as exc:
            raise CorpusFormatError(f"line {lineno}: malformed method record ({exc})") from None
        store.methods.append(method)
    return store


def _record(line: str, lineno: int) -> dict:
    try:
        rec = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"line {lineno}: invalid JSON ({exc.msg})") from None
    if not isinstance(rec, dict):
        raise CorpusFormatError(f"line {lineno}: expected a JSON object")
    return rec


def save(store: CorpusStore, path: str | Path) -> None:
    Path(path).write_text(dumps(store), encoding="utf-8", newline="\n")


def load(path: str | Path) -> CorpusStore:
    return loads(Path(path).read_text(encoding="utf-8"))


# ----------------------------------------------------------------------
# retrieval


def build_tfidf(store: CorpusStore) -> TfIdfModel:
    if not store.methods:
        raise ValueError("empty store")
    return TfIdfModel.build(store.term_lists)


@dataclass(frozen=True)
class RankedResult:
    rank: int
    method_id: str
    similarity: float
    exact: int | None
    partial: int | None
    code_lines: int


def _query_terms(query: Sequence) -> tuple[str, ...]:
    return tuple(t.canonical_text if isinstance(t, StatementToken) else t for t in query)


def candidates(store: CorpusStore, query: Sequence) -> list[int]:
    """Indices of methods sharing at least one term with the query."""
    q = set(_query_terms(query))
    return [i for i, counts in enumerate(store.term_counts) if not q.isdisjoint(counts)]


def score(store: CorpusStore, model: str, query: Sequence, tfidf: TfIdfModel | None = None) -> dict[int, ModelScore | float]:
    """Score methods under ``model``, keyed by store index.

    DSRM and Dice score every method; VSM scores only the candidates
    sharing a term with the query (see :func:`candidates`).
    """
    if model not in MODELS:
        raise UnknownModelError(f"unknown model: {model} (choose from {', '.join(MODELS)})")
    q = _query_terms(query)
    if not q:
        raise ValueError("empty query")
    if model == "dsrm":
        return {i: sim_dsrm(terms, q) for i, terms in enumerate(store.term_lists)}
    if model == "dice":
        return {i: sim_dice(terms, q) for i, terms in enumerate(store.term_lists)}
    idx = candidates(store, q)
    tfidf = tfidf or build_tfidf(store)
    qvec = tfidf.vector(Counter(q))
    return {i: cosine(tfidf.vector(store.term_counts[i]), qvec) for i in idx}


def _similarity(s: ModelScore | float) -> float:
    return s.similarity if isinstance(s, ModelScore) else s


def rank(
    store: CorpusStore,
    model: str,
    query: Sequence,
    top_k: int | None = None,
    min_sim: float = 0.0,
    tfidf: TfIdfModel | None = None,
) -> list[RankedResult]:
    """Rank scored methods by similarity (desc), then method id (asc).

    ``min_sim`` is inclusive and applied before the ``top_k`` cut.
    """
    scores = score(store, model, query, tfidf)
    rows = [(i, s) for i, s in scores.items() if _similarity(s) >= min_sim]
    rows.sort(key=lambda r: (-_similarity(r[1]), store.methods[r[0]].method_id))
    if top_k is not None:
        rows = rows[: max(top_k, 0)]
    out = []
    for pos, (i, s) in enumerate(rows, start=1):
        m = store.methods[i]
        if isinstance(s, ModelScore):
            out.append(RankedResult(pos, m.method_id, s.similarity, s.exact, s.partial, m.code_lines))
        else:
            out.append(RankedResult(pos, m.method_id, s, None, None, m.code_lines))
    return out


def boundary_cosine(store: CorpusStore, tfidf: TfIdfModel, query: Sequence) -> float | None:
    """Minimum cosine among DSRM-positive methods; None if there are none."""
    dsrm = score(store, "dsrm", query)
    positive = [i for i, s in dsrm.items() if s.similarity > 0]
    if not positive:
        return None
    cos = score(store, "vsm", query, tfidf)
    return min(cos[i] for i in positive)


@dataclass(frozen=True)
class ComparisonReport:
    query: str
    n_dsrm: int
    n_dice: int
    n_vsm: int
    improvement_vs_dice: float | None  # percent
    improvement_vs_vsm: float | None
    boundary_cosine: float | None


def improvement(reference: int, n_dsrm: int) -> float | None:
    """Percentage of the reference model's retrieved set that DSRM prunes."""
    if reference <= 0:
        return None
    return 100.0 * (reference - n_dsrm) / reference


def compare(store: CorpusStore, query: Sequence, tfidf: TfIdfModel | None = None, label: str = "") -> ComparisonReport:
    if not store.methods:
        raise ValueError("empty store")
    tfidf = tfidf or build_tfidf(store)
    dsrm = score(store, "dsrm", query)
    dice = score(store, "dice", query)
    cos = score(store, "vsm", query, tfidf)
    positive = [i for i, s in dsrm.items() if s.similarity > 0]
    n_dsrm = len(positive)
    n_dice = sum(1 for s in dice.values() if s.similarity > 0)
    boundary = min((cos[i] for i in positive), default=None)
    if boundary is not None:
        n_vsm = sum(1 for c in cos.values() if c >= boundary)
    else:
        n_vsm = sum(1 for c in cos.values() if c > 0)
    label = label or " -> ".join(_query_terms(query))
    return ComparisonReport(
        label, n_dsrm, n_dice, n_vsm, improvement(n_dice, n_dsrm), improvement(n_vsm, n_dsrm), boundary
    )
