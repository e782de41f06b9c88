"""Maximum edge counts for a fixed sum index: closed forms, bounds, and exact
small-n tables built from isomorphism-free enumeration."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from .errors import InputError
from .graph import Graph, canonical_form, canonical_key, decode_graph6, encode_graph6
from .solver import DEFAULT_NODE_BUDGET, sum_index_exact

MAX_ENUM_N = 7
MAX_EXACT_N = 6


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    seen: dict[tuple[int, int], Graph] = {}
    for base in _classes(n - 1):
        for mask in range(1 << (n - 1)):
            extra = tuple((u, n - 1) for u in range(n - 1) if mask >> u & 1)
            g = Graph(n, base.edges + extra)
            key = canonical_key(g)
            if key not in seen:
                seen[key] = canonical_form(g)
    return tuple(seen[k] for k in sorted(seen, key=lambda k: (seen[k].m, k[1])))


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class, ordered by (edges, code)."""
    if n < 0 or n > MAX_ENUM_N:
        raise InputError(f"enumeration supports 0 <= n <= {MAX_ENUM_N}, got {n}")
    return list(_classes(n))


# ---------------------------------------------------------------------------
# closed forms and bounds


def max_edges_closed_form(n: int, N: int) -> int | None:
    if N == 1:
        return n // 2
    if N == 2:
        return n - 1
    if N == 3:
        return (3 * n - 4) // 2 if n % 2 == 0 else 3 * (n - 1) // 2
    return None


def turan_bound(n: int, N: int) -> int:
    if N < 1:
        raise InputError("N must be positive")
    r = ceil(N / 2) + 1
    return floor((1 - Fraction(1, r)) * Fraction(n * n, 2))


def ubeg_bound(n: int, N: int) -> int:
    """Degree-sequence edge bound, ``N <= n-1`` and ``N >= n`` branches."""
    if N < 1 or n < 2:
        raise InputError("ubeg bound needs N >= 1 and n >= 2")
    half = Fraction((N + 1) // 2, 4)
    if N <= n - 1:
        value = Fraction(N * n, 2) - Fraction(N * N, 8) - Fraction(N, 8) + half
    else:
        value = (
            Fraction(N * n, 4) + Fraction(n * n, 8) - Fraction(N, 4) + Fraction(n, 8)
            + half - Fraction(1, 4)
        )
    return floor(value)


def _check_lbeg(n: int, N: int) -> None:
    if N < 1 or n < 2 or N > 2 * n - 3:
        raise InputError(f"layered construction needs 1 <= N <= 2n-3, got n={n}, N={N}")


def lbeg_targets(n: int, N: int) -> list[int]:
    """Sum targets ``n+1, n+2, n, n+3, n-1, ...`` (``N`` of them)."""
    _check_lbeg(n, N)
    out = [n + 1]
    step = 1
    while len(out) < N:
        out.append(n + 1 + step)
        if len(out) < N:
            out.append(n + 1 - step)
        step += 1
    return out


def lbeg_count(n: int, N: int) -> int:
    """Floor-sum edge count of the layered construction."""
    _check_lbeg(n, N)
    total = n // 2
    for j in range(1, N):
        total += (n - (j + 1) // 2) // 2
    return total


def lbeg_epsilon(n: int, N: int) -> Fraction:
    if N % 2 == 0:
        return Fraction(0)
    if (n % 2 == 0 and N % 4 == 1) or (n % 2 == 1 and N % 4 == 3):
        return Fraction(3, 8)
    return Fraction(-1, 8)


def lbeg_closed_form(n: int, N: int) -> Fraction:
    return Fraction(N * n, 2) - Fraction(N * N, 8) - Fraction(N, 4) + lbeg_epsilon(n, N)


# ---------------------------------------------------------------------------
# exact tables


@dataclass
class ClassResult:
    graph6: str
    edges: int
    sum_index: int | None
    status: str


def _solve_class(args) -> ClassResult:
    g6, node_budget = args
    g = decode_graph6(g6)
    cert = sum_index_exact(g, node_budget=node_budget)
    return ClassResult(g6, g.m, cert.value, cert.status)


@lru_cache(maxsize=None)
def _class_results(n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> tuple[ClassResult, ...]:
    return tuple(_solve_class((encode_graph6(g), node_budget)) for g in _classes(n))


def class_sum_indices(
    n: int, workers: int = 1, node_budget: int = DEFAULT_NODE_BUDGET
) -> list[ClassResult]:
    """Sum index of every isomorphism class on ``n`` vertices, in enumeration order."""
    if n > MAX_EXACT_N:
        raise InputError(f"exact tables support n <= {MAX_EXACT_N}, got {n}")
    if workers <= 1:
        return list(_class_results(n, node_budget))
    jobs = [(encode_graph6(g), node_budget) for g in enumerate_graphs(n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_solve_class, jobs, chunksize=8))


def max_edges_exact(
    n: int, N: int, workers: int = 1, node_budget: int = DEFAULT_NODE_BUDGET
) -> tuple[int, Graph] | None:
    """Largest edge count among ``n``-vertex graphs with sum index exactly ``N``.

    Raises ``RuntimeError`` if some class could not be solved, since the
    maximum would then be unsound.
    """
    results = class_sum_indices(n, workers, node_budget)
    unknown = [r for r in results if r.status != "exact"]
    if unknown:
        raise RuntimeError(f"{len(unknown)} classes on n={n} unresolved within budget")
    best = None
    for r in results:
        if r.sum_index == N and (best is None or r.edges > best.edges):
            best = r
    if best is None:
        return None
    return best.edges, decode_graph6(best.graph6)


@dataclass
class TableEntry:
    n: int
    N: int
    max_edges: int | None
    witness: str | None
    lbeg: int
    ubeg: int
    turan: int
    closed_form: int | None
    conjecture_tight: bool | None
    status: str

    def sandwich_ok(self) -> bool:
        if self.max_edges is None:
            return False
        return self.lbeg <= self.max_edges <= min(self.ubeg, self.turan)


def extremal_table(
    n_max: int, workers: int = 1, node_budget: int = DEFAULT_NODE_BUDGET, n_min: int = 2
) -> list[TableEntry]:
    entries = []
    for n in range(n_min, n_max + 1):
        results = class_sum_indices(n, workers, node_budget)
        unresolved = any(r.status != "exact" for r in results)
        for N in range(1, 2 * n - 2):
            hits = [r for r in results if r.sum_index == N]
            best = max(hits, key=lambda r: r.edges) if hits else None
            lb = lbeg_count(n, N)
            status = "unknown" if unresolved else ("exact" if best else "empty")
            max_e = best.edges if best and not unresolved else None
            entries.append(TableEntry(
                n=n, N=N, max_edges=max_e,
                witness=best.graph6 if best and not unresolved else None,
                lbeg=lb, ubeg=ubeg_bound(n, N), turan=turan_bound(n, N),
                closed_form=max_edges_closed_form(n, N),
                conjecture_tight=(max_e == lb) if max_e is not None else None,
                status=status,
            ))
    return entries


def conjecture_probe(n_max: int, workers: int = 1) -> list[dict]:
    if n_max > MAX_EXACT_N:
        raise InputError(f"conjecture probe supports n_max <= {MAX_EXACT_N}")
    return [
        {"n": e.n, "N": e.N, "exact": e.max_edges, "lbeg": e.lbeg, "tight": e.conjecture_tight}
        for e in extremal_table(n_max, workers)
    ]


CSV_FIELDS = ("n", "N", "max_edges", "lbeg", "ubeg", "turan", "tight", "status", "witness")


def table_to_csv(entries: list[TableEntry]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for e in entries:
        w.writerow([e.n, e.N, e.max_edges, e.lbeg, e.ubeg, e.turan,
                    e.conjecture_tight, e.status, e.witness])
    return buf.getvalue()


def table_to_json(entries: list[TableEntry]) -> list[dict]:
    return [asdict(e) for e in entries]
