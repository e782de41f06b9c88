"""Exact sum index with certificates.

A labeling with ``k`` distinct sums partitions the edges into ``k`` matchings
whose class sums differ; conversely a partition is realizable iff the linear
system ``x_u + x_v = s_c`` (one equation per edge) admits a point where all
vertex ranks differ and all class sums differ.  The search colours edges in
the graph's edge order, keeping every vertex rank as an integer linear form
over the free parameters of the system.  A branch dies as soon as two vertex
forms (or two class-sum forms) coincide, since that difference then vanishes
on the whole solution space.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

import numpy as np

from .bounds import sum_index_bounds
from .errors import InputError
from .graph import Graph, encode_graph6
from .labeling import Labeling, labeling_to_json, rank_sums

DEFAULT_SEED = 20240611
DEFAULT_NODE_BUDGET = 10**8
DEFAULT_EDGE_LIMIT = 16

Form = tuple[int, ...]


class _OutOfBudget(Exception):
    pass


@dataclass
class KResult:
    """Outcome of a single ``k``: ``status`` is feasible, infeasible or unknown."""

    status: str
    k: int
    labeling: Labeling | None = None
    colouring: tuple[int, ...] | None = None
    nodes: int = 0


@dataclass
class SumIndexCertificate:
    value: int | None
    witness: Labeling | None
    lower_evidence: dict
    status: str
    budget_used: int
    bracket: tuple[int, int] | None = None
    graph: Graph | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        g = self.graph
        out = {
            "graph6": encode_graph6(g) if g is not None else None,
            "sum_index": self.value,
            "witness": labeling_to_json(g, self.witness) if self.witness is not None else None,
            "lower_evidence": self.lower_evidence,
            "status": self.status,
            "budget_used": self.budget_used,
        }
        if self.bracket is not None:
            out["bracket"] = list(self.bracket)
        return out


def _substitute(forms: list[Form], delta: Form) -> list[Form]:
    """Impose ``delta . p = 0`` on the parameters and rescale to primitive integers."""
    j = min((i for i, c in enumerate(delta) if c), key=lambda i: abs(delta[i]))
    dj = delta[j]
    out = []
    g = 0
    for f in forms:
        fj = f[j]
        if fj:
            row = tuple(dj * a - fj * b for a, b in zip(f, delta))
        else:
            row = tuple(dj * a for a in f)
        out.append(row)
        for a in row:
            if a:
                g = gcd(g, a)
    if g > 1:
        out = [tuple(a // g for a in row) for row in out]
    return out


class _Search:
    def __init__(self, g: Graph, k: int, budget: int, deadline: float | None):
        self.g = g
        self.k = k
        self.budget = budget
        self.deadline = deadline
        self.nodes = 0
        self.edges = g.edges
        self.colour = [-1] * g.m
        self.at: list[set[int]] = [set() for _ in range(g.n)]
        self.reps: list[tuple[int, int]] = []
        self.solution: list[Form] | None = None

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise _OutOfBudget
        if self.deadline is not None and not self.nodes & 4095 and time.monotonic() > self.deadline:
            raise _OutOfBudget

    def _classes_distinct(self, forms: list[Form], extra: tuple[int, int] | None = None) -> bool:
        seen = set()
        reps = self.reps if extra is None else self.reps + [extra]
        for a, b in reps:
            s = tuple(x + y for x, y in zip(forms[a], forms[b]))
            if s in seen:
                return False
            seen.add(s)
        return True

    def run(self) -> bool:
        n = self.g.n
        forms = [tuple(1 if i == v else 0 for i in range(n)) for v in range(n)]
        return self._dfs(0, forms, 0)

    def _assign(self, i: int, c: int) -> None:
        u, v = self.edges[i]
        self.colour[i] = c
        self.at[u].add(c)
        self.at[v].add(c)

    def _unassign(self, i: int, c: int) -> None:
        u, v = self.edges[i]
        self.colour[i] = -1
        self.at[u].discard(c)
        self.at[v].discard(c)

    def _dfs(self, i: int, forms: list[Form], used: int) -> bool:
        if i == len(self.edges):
            self.solution = forms
            return True
        self._tick()
        u, v = self.edges[i]
        busy = self.at[u] | self.at[v]
        fu, fv = forms[u], forms[v]
        for c in range(min(used + 1, self.k)):
            if c in busy:
                continue
            if c == used:
                if not self._classes_distinct(forms, (u, v)):
                    continue
                self.reps.append((u, v))
                self._assign(i, c)
                found = self._dfs(i + 1, forms, used + 1)
                self._unassign(i, c)
                self.reps.pop()
            else:
                a, b = self.reps[c]
                fa, fb = forms[a], forms[b]
                delta = tuple(w + x - y - z for w, x, y, z in zip(fu, fv, fa, fb))
                if any(delta):
                    nxt = _substitute(forms, delta)
                    if len(set(nxt)) < len(nxt) or not self._classes_distinct(nxt):
                        continue
                else:
                    nxt = forms
                self._assign(i, c)
                found = self._dfs(i + 1, nxt, used)
                self._unassign(i, c)
            if found:
                return True
        return False


def _generic_point(
    forms: Sequence[Form], reps: Sequence[tuple[int, int]], seed: int
) -> list[int]:
    """Integer ranks at a pseudorandom parameter point avoiding all collisions."""
    rng = random.Random(seed)
    dim = len(forms[0]) if forms else 0
    span = 8
    while True:
        params = [rng.randint(-span, span) for _ in range(dim)]
        ranks = [sum(a * p for a, p in zip(f, params)) for f in forms]
        sums = [ranks[a] + ranks[b] for a, b in reps]
        if len(set(ranks)) == len(ranks) and len(set(sums)) == len(sums):
            break
        span *= 2
    lo = min(ranks)
    step = 0
    for r in ranks:
        step = gcd(step, r - lo)
    step = step or 1
    return [(r - lo) // step + 1 for r in ranks]


def solve_for_k(
    g: Graph,
    k: int,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seed: int = DEFAULT_SEED,
    deadline: float | None = None,
) -> KResult:
    """Find a labeling of ``g`` with at most ``k`` distinct sums, or prove none exists."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    if g.m == 0:
        raise InputError("solve_for_k needs a graph with at least one edge")
    search = _Search(g, k, node_budget, deadline)
    try:
        found = search.run()
    except _OutOfBudget:
        return KResult("unknown", k, nodes=search.nodes)
    if not found:
        return KResult("infeasible", k, nodes=search.nodes)
    # recompute representatives from the final colouring
    reps: dict[int, tuple[int, int]] = {}
    colouring = []
    for e, c in zip(g.edges, _final_colouring(search)):
        reps.setdefault(c, e)
        colouring.append(c)
    ranks = _generic_point(search.solution, [reps[c] for c in sorted(reps)], seed)
    labeling = Labeling(ranks)
    sig = rank_sums(g, labeling)
    if sig.count != len(reps) or sig.count > k:
        raise AssertionError("witness extraction produced an inconsistent labeling")
    return KResult("feasible", k, labeling, tuple(colouring), search.nodes)


def _final_colouring(search: _Search) -> list[int]:
    # the search unwinds assignments on success, so rebuild from the final forms
    forms = search.solution
    sums: dict[Form, int] = {}
    out = []
    for u, v in search.edges:
        s = tuple(a + b for a, b in zip(forms[u], forms[v]))
        out.append(sums.setdefault(s, len(sums)))
    return out


def sum_index_exact(
    g: Graph,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    seed: int = DEFAULT_SEED,
    edge_limit: int = DEFAULT_EDGE_LIMIT,
    time_limit: float | None = None,
) -> SumIndexCertificate:
    """Scan ``k`` upward from the best lower bound; the first feasible ``k`` is S(g)."""
    if g.m == 0:
        return SumIndexCertificate(
            0, Labeling(range(1, g.n + 1)), {"method": "bound", "value": 0, "source": "edgeless"},
            "exact", 0, graph=g,
        )
    deadline = time.monotonic() + time_limit if time_limit is not None else None
    report = sum_index_bounds(g)
    lo, hi = report.best_lower, report.best_upper
    used = 0
    examined: dict[str, int] = {}
    for k in range(lo, hi + 1):
        if g.m > edge_limit and k > lo:
            return _unknown(g, k, hi, lo, examined, used)
        res = solve_for_k(g, k, node_budget=node_budget - used, seed=seed, deadline=deadline)
        used += res.nodes
        if res.status == "unknown":
            return _unknown(g, k, hi, lo, examined, used)
        if res.status == "feasible":
            if k == lo:
                evidence = {"method": "bound", "value": lo, "source": report.lower_method}
            else:
                evidence = {
                    "method": "exhaustion",
                    "value": k,
                    "bound": lo,
                    "k_range": list(range(lo, k)),
                    "colorings_examined": examined,
                }
            return SumIndexCertificate(k, res.labeling, evidence, "exact", used, graph=g)
        examined[str(k)] = res.nodes
    raise AssertionError("no feasible k up to 2n-3; the complete-graph bound was violated")


def _unknown(g, k, hi, lo, examined, used) -> SumIndexCertificate:
    evidence = {
        "method": "exhaustion" if examined else "bound",
        "value": k,
        "bound": lo,
        "k_range": list(range(lo, k)),
        "colorings_examined": examined,
    }
    return SumIndexCertificate(None, None, evidence, "unknown", used, bracket=(k, hi), graph=g)


def verify_certificate(g: Graph, cert: SumIndexCertificate) -> bool:
    """Check the witness realizes ``value`` sums and the evidence closes the gap."""
    if cert.status != "exact" or cert.witness is None:
        return False
    if rank_sums(g, cert.witness).count != cert.value:
        return False
    ev = cert.lower_evidence
    if ev["method"] == "bound":
        return ev["value"] == cert.value
    return ev["k_range"] == list(range(ev["bound"], cert.value))


# ---------------------------------------------------------------------------
# brute-force oracle

BRUTE_MAX_N = 8
BRUTE_EXTRA = 4


def brute_force_min_sums(g: Graph, label_budget: int, chunk: int = 200_000) -> tuple[int, Labeling]:
    """Minimum sum count over injections ``V -> {1..B}`` that use rank 1.

    An upper bound on the sum index that is independent of the colouring search.
    """
    n, B = g.n, label_budget
    if B < n:
        raise InputError(f"label budget {B} is smaller than n={n}")
    if n > BRUTE_MAX_N or B > n + BRUTE_EXTRA:
        raise InputError(f"brute force capped at n<={BRUTE_MAX_N}, B<=n+{BRUTE_EXTRA}")
    if n == 0:
        return 0, Labeling([])
    us = np.array([u for u, _ in g.edges], dtype=np.intp)
    vs = np.array([v for _, v in g.edges], dtype=np.intp)
    best = None
    best_row = None
    perms = itertools.permutations(range(1, B + 1), n)
    while True:
        block = np.array(list(itertools.islice(perms, chunk)), dtype=np.int32)
        if block.size == 0:
            break
        block = block[(block == 1).any(axis=1)]
        if not len(block):
            continue
        if g.m == 0:
            return 0, Labeling(block[0].tolist())
        sums = np.sort(block[:, us] + block[:, vs], axis=1)
        counts = 1 + (np.diff(sums, axis=1) != 0).sum(axis=1)
        i = int(np.argmin(counts))
        if best is None or counts[i] < best:
            best, best_row = int(counts[i]), block[i].tolist()
    return best, Labeling(best_row)
