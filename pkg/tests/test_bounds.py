from __future__ import annotations

import random

import pytest

from sumdex.bounds import (
    chromatic_index,
    cluster3_index,
    cluster4_capacity,
    cluster4_index,
    haslegrave_bound,
    known_formula,
    sum_index_bounds,
)
from sumdex.errors import InputError
from sumdex.graph import FamilySpec, Graph, complete, complete_multipartite, cycle, empty, hypercube, ladder, path


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def test_haslegrave_examples():
    assert haslegrave_bound(complete_multipartite([3, 1])) == 1
    assert haslegrave_bound(ladder(6)) == 3
    for g, d in [(hypercube(4), 4), (complete(6), 5), (cycle(9), 2), (petersen(), 3)]:
        assert haslegrave_bound(g) == 2 * d - 1
    with pytest.raises(InputError):
        haslegrave_bound(empty(1))


def test_haslegrave_relabel_invariant(graphs_upto6):
    rng = random.Random(3)
    for g in graphs_upto6:
        if g.n < 2:
            continue
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert haslegrave_bound(g.relabel(perm)) == haslegrave_bound(g)


def test_chromatic_index():
    assert tuple(chromatic_index(cycle(4))) == (2, 2, True)
    # no proper 2-edge-colouring of a triangle, so the lower bound is raised to 3
    assert tuple(chromatic_index(complete(3))) == (3, 3, True)
    assert tuple(chromatic_index(petersen(), budget=1)) == (3, 4, False)
    assert tuple(chromatic_index(petersen())) == (4, 4, True)
    assert tuple(chromatic_index(complete(5))) == (5, 5, True)


def test_bound_reports():
    r = sum_index_bounds(complete(4))
    assert (r.haslegrave, r.best_lower, r.best_upper) == (5, 5, 5)
    r = sum_index_bounds(hypercube(3))
    assert (r.best_lower, r.best_upper) == (5, 13)
    r = sum_index_bounds(path(3))
    assert (r.best_lower, r.best_upper) == (2, 3)
    r = sum_index_bounds(empty(4))
    assert (r.best_lower, r.best_upper) == (0, 0)


def test_bound_chain(graphs_upto6):
    for g in graphs_upto6:
        if g.m == 0:
            continue
        r = sum_index_bounds(g)
        assert r.max_degree <= r.chromatic_index_lower <= r.best_lower <= r.best_upper == 2 * g.n - 3


def test_known_formula_examples():
    assert known_formula(FamilySpec.of("complete", 5)) == 7
    assert known_formula(FamilySpec.of("cluster", 3, 3)) == 4
    assert known_formula(FamilySpec.of("cluster", 2, 4)) == 6
    assert known_formula(FamilySpec.of("complete_multipartite", 2, 1, 1)) == 4
    assert known_formula(FamilySpec.of("cycle", 11)) == 3
    assert known_formula(FamilySpec.of("hypercube", 5)) == 9
    assert known_formula(FamilySpec.of("cluster", 7, 2)) == 1
    assert known_formula(FamilySpec.of("path", 5)) is None


def test_bipartite_multipartite_consistent():
    for m in range(1, 8):
        for n in range(1, m + 1):
            assert known_formula(FamilySpec.of("complete_bipartite", m, n)) == known_formula(
                FamilySpec.of("complete_multipartite", m, n)
            ) == m + n - 1


def test_cluster_formulas_scan():
    # smallest s with n <= C(s,3)
    assert [cluster3_index(n) for n in (1, 2, 4, 5, 10, 11, 20)] == [3, 4, 4, 5, 5, 6, 6]
    assert [cluster4_capacity(s) for s in range(4, 11)] == [0, 1, 2, 5, 8, 14, 20]
    assert [cluster4_index(n) for n in (1, 2, 3, 5, 6, 8, 9, 14, 15, 20)] == [5, 6, 7, 7, 8, 8, 9, 9, 10, 10]
