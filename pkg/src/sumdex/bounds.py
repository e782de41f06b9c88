"""Lower and upper bounds on the sum index, plus closed-form values for the
families where it is known."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb
from typing import NamedTuple

from .errors import InputError
from .graph import FamilySpec, Graph, degree_sequence

DEFAULT_CHROMATIC_BUDGET = 10**6


class ChromaticIndex(NamedTuple):
    lower: int
    upper: int
    exact: bool


@dataclass(frozen=True)
class BoundReport:
    max_degree: int
    chromatic_index_lower: int
    chromatic_index_upper: int
    chromatic_index_exact: bool
    haslegrave: int
    trivial_upper: int
    best_lower: int
    best_upper: int
    lower_method: str
    upper_method: str

    def to_dict(self) -> dict:
        return asdict(self)


def haslegrave_bound(g: Graph) -> int:
    """``max_k (d_k + d_{k+1} - k)`` over the ascending degree sequence (1-based k)."""
    if g.n < 2:
        raise InputError("the degree-sequence bound needs at least two vertices")
    d = degree_sequence(g)
    return max(d[k - 1] + d[k] - k for k in range(1, g.n))


def _edge_colourable(g: Graph, colours: int, budget: int) -> bool | None:
    """Backtracking proper edge colouring; ``None`` when the budget runs out."""
    edges = g.edges
    used: list[set[int]] = [set() for _ in range(g.n)]
    nodes = 0

    def place(i: int, top: int) -> bool | None:
        nonlocal nodes
        if i == len(edges):
            return True
        nodes += 1
        if nodes > budget:
            return None
        u, v = edges[i]
        # colours beyond top+1 are symmetric to top+1
        for c in range(min(top + 2, colours)):
            if c in used[u] or c in used[v]:
                continue
            used[u].add(c)
            used[v].add(c)
            res = place(i + 1, max(top, c))
            used[u].discard(c)
            used[v].discard(c)
            if res is not False:
                return res
        return False

    return place(0, -1)


def chromatic_index(g: Graph, budget: int = DEFAULT_CHROMATIC_BUDGET) -> ChromaticIndex:
    """Chromatic index bracket; ``lower == upper`` whenever ``exact`` is set."""
    delta = g.max_degree()
    if g.m == 0:
        return ChromaticIndex(0, 0, True)
    ok = _edge_colourable(g, delta, budget)
    if ok is None:
        return ChromaticIndex(delta, delta + 1, False)
    if ok:
        return ChromaticIndex(delta, delta, True)
    return ChromaticIndex(delta + 1, delta + 1, True)


def sum_index_bounds(g: Graph, budget: int = DEFAULT_CHROMATIC_BUDGET) -> BoundReport:
    if g.m == 0:
        return BoundReport(0, 0, 0, True, 0, max(2 * g.n - 3, 0), 0, 0, "edgeless", "edgeless")
    chi = chromatic_index(g, budget)
    hb = haslegrave_bound(g)
    candidates = [
        (chi.lower, "chromatic_index" if chi.exact else "max_degree"),
        (hb, "haslegrave"),
        (1, "trivial"),
    ]
    best, method = max(candidates, key=lambda t: t[0])
    upper = 2 * g.n - 3
    return BoundReport(
        max_degree=g.max_degree(),
        chromatic_index_lower=chi.lower,
        chromatic_index_upper=chi.upper,
        chromatic_index_exact=chi.exact,
        haslegrave=hb,
        trivial_upper=upper,
        best_lower=best,
        best_upper=upper,
        lower_method=method,
        upper_method="complete_graph",
    )


def cluster3_index(n: int) -> int:
    """Smallest ``s`` with ``n <= C(s, 3)``."""
    s = 1
    while comb(s, 3) < n:
        s += 1
    return s


def cluster4_capacity(s: int) -> int:
    return comb(s // 2, 3) + comb(s - s // 2, 3)


def cluster4_index(n: int) -> int:
    """Smallest ``s`` with ``n <= C(floor(s/2), 3) + C(ceil(s/2), 3)``."""
    s = 1
    while cluster4_capacity(s) < n:
        s += 1
    return s


def multipartite_index(parts) -> int:
    parts = sorted(parts, reverse=True)
    return 2 * sum(parts) - parts[0] - parts[1] - 1


def known_formula(spec: FamilySpec) -> int | None:
    """Closed-form sum index for catalogued families, else ``None``."""
    kind, p = spec.kind, spec.params
    if kind == "complete" and len(p) == 1:
        return 2 * p[0] - 3 if p[0] >= 2 else 0
    if kind == "complete_bipartite" and len(p) == 2:
        return p[0] + p[1] - 1
    if kind == "complete_multipartite" and len(p) >= 2:
        return multipartite_index(p)
    if kind == "cycle" and len(p) == 1 and p[0] >= 3:
        return 3
    if kind == "hypercube" and len(p) == 1:
        return 2 * p[0] - 1
    if kind == "cluster" and len(p) == 2:
        n, k = p
        if k == 1:
            return 0
        if k == 2:
            return 1
        if k == 3:
            return cluster3_index(n)
        if k == 4:
            return cluster4_index(n)
    return None
