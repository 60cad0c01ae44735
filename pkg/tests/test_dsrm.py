import random
from math import comb

import pytest
from hypothesis import given, strategies as st

from structseek.simcore import CONSUMED, DerivedPattern, count_pass, negation_masks, pass_count, sim_dsrm, sqc_comb

from oracles import dsrm_reference

A1, A2, A3 = "A1", "A2", "A3"


def negs(patterns):
    return [sorted(p.negated) for p in patterns]


def test_sqc_comb_two_terms():
    assert negs(sqc_comb([A1, A2], 1)) == [[2], [1]]


def test_sqc_comb_identity():
    (p,) = sqc_comb([A1, A2, A3], 0)
    assert p.negated == frozenset() and p.weight == 3


def test_sqc_comb_three_choose_two():
    assert negs(sqc_comb([A1, A2, A3], 2)) == [[2, 3], [1, 3], [1, 2]]


@pytest.mark.parametrize("r", [-1, 2, 3])
def test_negation_masks_bounds(r):
    with pytest.raises(ValueError):
        negation_masks(2, r)


def test_count_pass_consumes():
    work = [A1, A1, A2, A2]
    assert count_pass(work, DerivedPattern((A1, A2), frozenset())) == 2
    assert work == [A1, CONSUMED, CONSUMED, A2]
    assert count_pass(work, DerivedPattern((A1, A2), frozenset({2}))) == 1
    assert count_pass(work, DerivedPattern((A1, A2), frozenset({1}))) == 1
    assert work == [CONSUMED, CONSUMED, CONSUMED, CONSUMED]


def test_count_pass_negation_blocks():
    work = [A1, A2]
    assert count_pass(work, DerivedPattern((A1, A2), frozenset({2}))) == 0
    assert work == [A1, A2]


def test_two_term_example():
    s = sim_dsrm([A1, A1, A2, A2], [A1, A2])
    assert (s.similarity, s.exact, s.partial) == (0.5, 2, 2)


def test_action_error(action_error_terms):
    s = sim_dsrm(action_error_terms, ["if{", "addParameter", "}"])
    assert (s.similarity, s.exact, s.partial) == (0.0, 0, 8)


def test_swap_when_doc_shorter():
    assert sim_dsrm([A1, A2], [A1, A1, A2, A2]) == sim_dsrm([A1, A1, A2, A2], [A1, A2])


def test_edge_cases():
    with pytest.raises(ValueError):
        sim_dsrm([A1], [])
    assert sim_dsrm([], [A1]).similarity == 0.0
    s = sim_dsrm(["x", "y", "z"], [A1, A2])
    assert (s.similarity, s.exact, s.partial) == (0.0, 0, 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_pattern_counts(n):
    q = [f"t{i}" for i in range(n)]
    sizes = [len(sqc_comb(q, r)) for r in range(n)]
    assert sizes == [comb(n, r) for r in range(n)]
    assert sum(sizes) == pass_count(n) == 2**n - 1


terms = st.sampled_from("abcd")


@given(st.lists(terms, max_size=12), st.lists(terms, min_size=1, max_size=4))
def test_properties(doc, query):
    s = sim_dsrm(doc, query)
    longer, shorter = (doc, query) if len(doc) >= len(query) else (query, doc)
    if not doc:
        return
    assert 0.0 <= s.similarity <= 1.0
    assert s.exact + s.partial <= len(longer)
    assert s.exact % len(shorter) == 0


@given(st.lists(terms, min_size=1, max_size=8))
def test_self_similarity(seq):
    s = sim_dsrm(seq, seq)
    assert (s.similarity, s.exact, s.partial) == (1.0, len(seq), 0)


def test_matches_reference_transcription():
    rng = random.Random(20240531)
    for _ in range(1000):
        alphabet = "abcd"[: rng.randint(1, 4)]
        doc = [rng.choice(alphabet) for _ in range(rng.randint(0, 10))]
        query = [rng.choice(alphabet) for _ in range(rng.randint(1, 4))]
        s = sim_dsrm(doc, query)
        assert (s.similarity, s.exact, s.partial) == dsrm_reference(doc, query), (doc, query)
