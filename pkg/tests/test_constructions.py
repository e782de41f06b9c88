from __future__ import annotations

import itertools
import random
from collections import Counter

import pytest

from sumdex.bounds import cluster3_index, cluster4_index, known_formula
from sumdex.constructions import (
    extremal_construction,
    hypercube_ranks,
    hypercube_sum_set,
    k4_ranks_from_sums,
    label_cluster,
    label_hypercube,
    label_join_family,
    label_multipartite,
)
from sumdex.errors import InputError
from sumdex.extremal import lbeg_count, max_edges_closed_form
from sumdex.graph import FamilySpec, complete, is_isomorphic, ladder
from sumdex.labeling import Labeling, rank_sums, validate_labeling
from sumdex.solver import sum_index_exact


class TestMultipartite:
    def test_examples(self):
        r = label_multipartite([2, 3])
        assert r.achieved == r.claimed == 4
        r = label_multipartite([2, 1, 1])
        assert r.achieved == 4
        assert set(rank_sums(r.graph, r.labeling).sums) <= set(range(4, 10))
        assert label_multipartite([1, 1]).achieved == 1

    def test_sum_window(self):
        rng = random.Random(1)
        for _ in range(100):
            parts = sorted((rng.randint(1, 8) for _ in range(rng.randint(2, 5))), reverse=True)
            r = label_multipartite(parts)
            N, n1, n2 = sum(parts), parts[0], parts[1]
            sums = rank_sums(r.graph, r.labeling).sums
            assert min(sums) >= n1 + 2 and max(sums) <= 2 * N - n2
            assert sorted(r.labeling.ranks) == list(range(1, N + 1))

    def test_bad_parts(self):
        with pytest.raises(InputError):
            label_multipartite([4])
        with pytest.raises(InputError):
            label_multipartite([3, 0])


class TestJoinFamily:
    def test_two_two_is_c4(self):
        r = label_join_family([2, 2])
        assert r.graph.m == 4
        assert r.achieved == r.claimed == 3

    def test_three_two(self):
        r = label_join_family([3, 2])
        assert r.achieved == r.claimed == 4

    def test_k2(self):
        assert label_join_family([1, 1]).achieved == 1

    def test_matches_solver_small(self):
        for parts in [(2, 2), (3, 2), (2, 2, 1), (3, 1, 1), (2, 1, 1, 1)]:
            r = label_join_family(parts)
            if r.graph.m <= 16:
                assert sum_index_exact(r.graph).value == r.claimed, parts

    def test_random_parts(self):
        rng = random.Random(2)
        for _ in range(60):
            parts = [rng.randint(1, 7) for _ in range(rng.randint(2, 4))]
            r = label_join_family(parts)
            assert r.achieved == known_formula(FamilySpec("complete_multipartite", tuple(parts)))


class TestHypercube:
    def test_small(self):
        r = label_hypercube(1)
        assert r.labeling.ranks == (1, 2)
        assert rank_sums(r.graph, r.labeling).sums == (3,)
        assert hypercube_ranks(2) == [1, 4, 3, 2]
        assert set(rank_sums(label_hypercube(2).graph, Labeling([1, 4, 3, 2])).sums) == {4, 5, 6}
        r = label_hypercube(3)
        assert set(rank_sums(r.graph, r.labeling).sums) == {7, 8, 9, 10, 11}

    def test_bipartition_every_level(self):
        for d in range(1, 9):
            r = label_hypercube(d)
            half = 1 << (d - 1)
            assert sorted(r.labeling.ranks) == list(range(1, 2 * half + 1))
            for u, v in r.graph.edges:
                lo, hi = sorted((r.labeling[u], r.labeling[v]))
                assert lo <= half < hi

    def test_sum_set(self):
        for d in range(1, 9):
            r = label_hypercube(d)
            assert set(rank_sums(r.graph, r.labeling).sums) == hypercube_sum_set(d)
            assert r.achieved == 2 * d - 1

    def test_bad_dimension(self):
        with pytest.raises(InputError):
            label_hypercube(0)


class TestK4Recovery:
    def test_examples(self):
        assert k4_ranks_from_sums(3, 4, 5, 7, 6, 5) == (4, 3, 2, 1)
        assert k4_ranks_from_sums(10, 12, 14, 18, 16, 14) == (10, 8, 6, 4)

    @pytest.mark.parametrize(
        "args", [(4, 4, 4, 4, 4, 4), (3, 4, 5, 7, 6, 6), (3, 4, 6, 7, 6, 4)]
    )
    def test_rejects(self, args):
        with pytest.raises(InputError):
            k4_ranks_from_sums(*args)

    def test_roundtrip(self):
        rng = random.Random(4)
        k4 = complete(4)
        for _ in range(500):
            ranks = rng.sample(range(-1000, 1000), 4)
            r = dict(enumerate(ranks))
            a = (r[2] + r[3], r[1] + r[3], r[1] + r[2])
            b = (r[0] + r[1], r[0] + r[2], r[0] + r[3])
            got = k4_ranks_from_sums(*a, *b)
            assert Counter(rank_sums(k4, Labeling(got)).sums) == Counter(rank_sums(k4, Labeling(ranks)).sums)
            assert got == tuple(ranks)


class TestClusters:
    def test_examples(self):
        r = label_cluster(1, 4)
        assert r.achieved == 5
        r = label_cluster(2, 4)
        assert r.achieved == 6 and len(set(r.labeling.ranks)) == 8
        r = label_cluster(4, 3)
        assert r.achieved == 4 and len(set(r.labeling.ranks)) == 12
        assert label_cluster(5, 2).achieved == 1

    def test_k4_structure(self):
        for n in range(1, 21):
            r = label_cluster(n, 4)
            ranks = r.labeling.ranks
            assert len(set(ranks)) == 4 * n
            assert r.achieved == cluster4_index(n)

    def test_k4_opposite_edges_share_one_total(self):
        # every sum value is paired with its mirror, so each cluster's opposite
        # edges add up to the same total across all clusters
        for n in (1, 5, 12, 20):
            ranks = label_cluster(n, 4).labeling.ranks
            totals = set()
            for c in range(n):
                q = ranks[4 * c:4 * c + 4]
                totals |= {q[0] + q[1] + q[2] + q[3]}
            assert len(totals) == 1

    def test_k3(self):
        for n in range(1, 21):
            r = label_cluster(n, 3)
            assert r.achieved == cluster3_index(n)
            assert validate_labeling(r.graph, r.labeling).ok

    def test_bad_k(self):
        with pytest.raises(InputError):
            label_cluster(2, 5)
        with pytest.raises(InputError):
            label_cluster(0, 3)

    def test_small_clusters_match_solver(self):
        for n, k in [(1, 3), (2, 3), (3, 3), (1, 4), (2, 4), (4, 2)]:
            r = label_cluster(n, k)
            assert sum_index_exact(r.graph).value == r.claimed


class TestExtremalConstruction:
    def test_examples(self):
        r = extremal_construction(6, 3)
        assert r.graph.m == 7
        assert set(rank_sums(r.graph, r.labeling).sums) == {6, 7, 8}
        assert is_isomorphic(r.graph, ladder(6))
        assert extremal_construction(4, 3).graph.m == 4
        assert extremal_construction(5, 3).graph.m == 6
        assert extremal_construction(4, 5).graph.m == 6

    def test_closed_forms_small_n(self):
        for n in range(3, 15):
            for N in (1, 2, 3):
                assert extremal_construction(n, N).graph.m == max_edges_closed_form(n, N)

    def test_counts(self):
        for n in range(2, 21):
            for N in range(1, 2 * n - 2):
                r = extremal_construction(n, N)
                assert r.graph.m == lbeg_count(n, N)
                assert r.achieved <= N

    def test_out_of_range(self):
        with pytest.raises(InputError):
            extremal_construction(4, 6)
        with pytest.raises(InputError):
            extremal_construction(4, 0)
