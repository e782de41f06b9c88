from __future__ import annotations

import pytest

from sumdex.bounds import haslegrave_bound, known_formula, sum_index_bounds
from sumdex.errors import InputError
from sumdex.extremal import enumerate_graphs
from sumdex.graph import FamilySpec, complete, complete_multipartite, cycle, empty, generate, path
from sumdex.labeling import Labeling, rank_sums, validate_labeling
from sumdex.solver import (
    SumIndexCertificate,
    brute_force_min_sums,
    solve_for_k,
    sum_index_exact,
    verify_certificate,
)


def test_solve_for_k_examples():
    assert solve_for_k(cycle(4), 2).status == "infeasible"
    r = solve_for_k(complete(2), 1)
    assert r.status == "feasible" and rank_sums(complete(2), r.labeling).count == 1
    r = solve_for_k(complete(3), 3)
    assert r.status == "feasible"
    assert rank_sums(complete(3), r.labeling).count == 3
    with pytest.raises(InputError):
        solve_for_k(complete(3), 0)
    with pytest.raises(InputError):
        solve_for_k(empty(3), 1)


@pytest.mark.parametrize(
    "g,value",
    [(complete(4), 5), (cycle(7), 3), (complete_multipartite([2, 1, 1]), 4),
     (complete_multipartite([3, 1]), 3), (path(3), 2), (empty(3), 0)],
)
def test_exact_examples(g, value):
    cert = sum_index_exact(g)
    assert cert.status == "exact"
    assert cert.value == value
    assert verify_certificate(g, cert)


def test_exhaustion_evidence():
    cert = sum_index_exact(complete_multipartite([2, 1, 1]))
    ev = cert.lower_evidence
    assert ev["method"] == "exhaustion"
    assert ev["k_range"] == [3]
    assert int(ev["colorings_examined"]["3"]) > 0


def test_brute_force_examples():
    assert brute_force_min_sums(path(3), 3)[0] == 2
    assert brute_force_min_sums(cycle(4), 4)[0] == 3
    assert brute_force_min_sums(complete(3), 3)[0] == 3
    with pytest.raises(InputError):
        brute_force_min_sums(complete(3), 2)


def test_budget_exhaustion_reports_unknown():
    g = generate(FamilySpec.of("cluster", 2, 4))
    cert = sum_index_exact(g, node_budget=10)
    assert cert.status == "unknown" and cert.value is None
    lo, hi = cert.bracket
    assert lo <= 6 <= hi
    assert not verify_certificate(g, cert)


def test_edge_limit_falls_back_to_lower_bound_only():
    # 18 edges: only k = best_lower is attempted, and it is infeasible
    g = generate(FamilySpec.of("cluster", 3, 4))
    cert = sum_index_exact(g)
    assert cert.status == "unknown"
    assert cert.bracket[0] <= 7 <= cert.bracket[1]


def test_tampered_certificate_rejected():
    g = complete(4)
    cert = sum_index_exact(g)
    forged = SumIndexCertificate(4, cert.witness, {"method": "bound", "value": 4}, "exact", 0, graph=g)
    assert not verify_certificate(g, forged)
    bad_witness = SumIndexCertificate(5, Labeling([1, 2, 3, 5]), cert.lower_evidence, "exact", 0, graph=g)
    assert not verify_certificate(g, bad_witness)


def test_seeded_witness_is_deterministic():
    g = generate(FamilySpec.of("hypercube", 3))
    a = sum_index_exact(g, seed=5).to_json()
    b = sum_index_exact(g, seed=5).to_json()
    assert a == b


def test_agreement_all_graphs_upto6(graphs_upto6):
    for g in graphs_upto6:
        cert = sum_index_exact(g)
        assert cert.status == "exact", g
        assert validate_labeling(g, cert.witness).ok
        assert rank_sums(g, cert.witness).count == cert.value
        assert verify_certificate(g, cert)
        if g.m == 0:
            assert cert.value == 0
            continue
        assert cert.value >= haslegrave_bound(g)
        assert cert.value >= g.max_degree()
        assert cert.value <= 2 * g.n - 3
        upper, f = brute_force_min_sums(g, g.n + 3)
        assert rank_sums(g, f).count == upper
        assert cert.value <= upper


def test_brute_force_matches_upto6():
    # labels drawn from {1..n+4} already reach the optimum on six vertices
    for n in range(2, 7):
        for g in enumerate_graphs(n):
            if g.m:
                assert sum_index_exact(g).value == brute_force_min_sums(g, g.n + 4)[0], g


def test_known_formula_agreement_small_families():
    specs = [FamilySpec.of("complete", n) for n in range(2, 6)]
    specs += [FamilySpec.of("cycle", m) for m in range(3, 7)]
    specs += [FamilySpec.of("complete_bipartite", a, b) for a in range(1, 5) for b in range(1, a + 1)
              if a + b <= 6]
    specs += [FamilySpec.of("complete_multipartite", *p) for p in [(2, 1, 1), (2, 2, 1), (1, 1, 1, 1, 1)]]
    specs += [FamilySpec.of("hypercube", 2), FamilySpec.of("cluster", 2, 3), FamilySpec.of("cluster", 3, 2)]
    for spec in specs:
        assert sum_index_exact(generate(spec)).value == known_formula(spec), spec.tag


def test_lipschitz_upto6(graphs_upto6):
    values = {}

    def s(g):
        key = g.edges, g.n
        if key not in values:
            values[key] = sum_index_exact(g).value
        return values[key]

    for g in graphs_upto6:
        for e in g.non_edges():
            base, plus = s(g), s(g.add_edge(*e))
            assert base <= plus <= base + 1


def test_bounds_consistent_with_exact(graphs_upto6):
    for g in graphs_upto6:
        if g.m:
            r = sum_index_bounds(g)
            assert r.best_lower <= sum_index_exact(g).value <= r.best_upper
