from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sumdex.errors import InputError, LabelingError
from sumdex.graph import Graph, complete, complete_multipartite
from sumdex.labeling import (
    Labeling,
    affine_map,
    labeling_from_json,
    labeling_to_json,
    rank_sums,
    sum_classes,
    validate_labeling,
)


@st.composite
def labelled_graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    ranks = draw(st.lists(st.integers(-10**12, 10**12), min_size=n, max_size=n, unique=True))
    return Graph(n, tuple(edges)), Labeling(ranks)


def test_rank_sums_examples():
    assert rank_sums(complete(3), Labeling([1, 2, 3])).sums == (3, 4, 5)
    k23 = complete_multipartite([3, 2])
    sig = rank_sums(k23, Labeling([3, 4, 5, 1, 2]))
    assert sig.sums == (4, 5, 6, 7) and sig.count == 4
    assert rank_sums(complete(2), Labeling([0, 7])).sums == (7,)


def test_rank_sums_rejects_invalid():
    with pytest.raises(LabelingError):
        rank_sums(complete(3), Labeling([1, 1, 2]))
    with pytest.raises(LabelingError):
        rank_sums(complete(3), Labeling([1, 2]))


def test_validate():
    bad = validate_labeling(complete(3), [1, 1, 2])
    assert not bad.ok
    assert bad.duplicates == [(0, 1, 1)]
    assert "share rank" in bad.describe()
    assert validate_labeling(complete(3), [1, 2, 3]).ok
    wrong = validate_labeling(complete(3), [1, 2, 3, 4])
    assert not wrong.ok and wrong.domain_error


def test_mapping_domain():
    assert Labeling({1: 5, 0: 4}).ranks == (4, 5)
    with pytest.raises(LabelingError):
        Labeling({0: 1, 2: 3})


def test_affine_examples():
    f = Labeling([1, 2, 3])
    assert affine_map(f, 1, 0) == f
    neg = affine_map(f, -1, 0)
    assert neg.ranks == (-1, -2, -3)
    assert rank_sums(complete(3), neg).sums == (-5, -4, -3)
    with pytest.raises(InputError):
        affine_map(f, 0, 1)


def test_sum_classes_are_matchings():
    classes = sum_classes(complete(4), Labeling([1, 2, 3, 4]))
    assert sorted(classes) == [3, 4, 5, 6, 7]
    assert classes[5] == [(0, 3), (1, 2)]


def test_big_ranks_json_roundtrip():
    g = complete(3)
    f = Labeling([10**40, -3, 2**70])
    data = labeling_to_json(g, f)
    assert all(isinstance(r, str) for r in data["ranks"])
    g2, f2 = labeling_from_json(data)
    assert (g2, f2) == (g, f)


@pytest.mark.parametrize("data", [{}, {"graph6": "Bw"}, {"graph6": "Bw", "ranks": ["a", "1", "2"]},
                                  {"graph6": "B", "ranks": []}])
def test_from_json_malformed(data):
    with pytest.raises(InputError):
        labeling_from_json(data)


@settings(max_examples=200, deadline=None)
@given(labelled_graphs(), st.integers(-50, 50).filter(bool), st.integers(-10**6, 10**6))
def test_affine_invariance(gf, a, b):
    g, f = gf
    assert rank_sums(g, affine_map(f, a, b)).count == rank_sums(g, f).count


@settings(max_examples=200, deadline=None)
@given(labelled_graphs())
def test_adjacent_edges_differ(gf):
    g, f = gf
    for e1, e2 in itertools.combinations(g.edges, 2):
        if set(e1) & set(e2):
            assert f[e1[0]] + f[e1[1]] != f[e2[0]] + f[e2[1]]


@settings(max_examples=200, deadline=None)
@given(labelled_graphs(), st.data())
def test_subgraph_monotone(gf, data):
    g, f = gf
    keep = data.draw(st.lists(st.sampled_from(g.edges), unique=True) if g.edges else st.just([]))
    h = Graph(g.n, tuple(keep))
    assert rank_sums(h, f).count <= rank_sums(g, f).count
