import math

import pytest
from hypothesis import given, strategies as st

from structseek.simcore import TfIdfModel, UnknownTermError, cosine, idf, sim_vsm, weight


@pytest.fixture
def mini():
    docs = [["a", "a", "b"], ["a"], ["b", "b", "b"], ["a", "b", "c"]]
    return TfIdfModel.build(docs)


def test_idf_values():
    m = TfIdfModel(8, {"x": 2, "y": 8})
    assert idf("x", m) == 2.0
    assert idf("y", m) == 0.0
    assert TfIdfModel(4, {"z": 3}).idf("z") == pytest.approx(0.41504, abs=1e-5)


def test_unknown_term(mini):
    with pytest.raises(UnknownTermError):
        mini.idf("zz")
    assert weight(3, "zz", mini) == 0.0


def test_weights(mini):
    assert weight(0, "a", mini) == 0.0
    assert weight(2, "c", mini) == 4.0
    assert mini.df == {"a": 3, "b": 3, "c": 1}


def test_mini_corpus_cosine(mini):
    assert sim_vsm({"a": 1, "b": 1, "c": 1}, {"a": 1, "c": 1}, mini) == pytest.approx(0.980, abs=1e-3)


def test_zero_vectors():
    assert cosine({}, {"a": 1.0}) == 0.0
    assert cosine({"a": 0.0}, {"a": 1.0}) == 0.0


def test_empty_build():
    with pytest.raises(ValueError):
        TfIdfModel.build([])


vectors = st.dictionaries(st.sampled_from("abcdef"), st.floats(0.01, 100), min_size=1)


@given(vectors, vectors)
def test_symmetry_and_range(u, v):
    assert cosine(u, v) == pytest.approx(cosine(v, u), abs=1e-12)
    assert -1e-12 <= cosine(u, v) <= 1 + 1e-12


@given(vectors)
def test_self_cosine(v):
    assert math.isclose(cosine(v, v), 1.0, abs_tol=1e-9)
