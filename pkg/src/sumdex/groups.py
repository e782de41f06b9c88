"""Sumsets over the integers and finite abelian groups, and the group-valued
sum index.

Group elements are tuples ``(a_1, ..., a_k)`` with ``0 <= a_i < m_i``.  Inside
the search kernels they are encoded as mixed-radix integers with the first
coordinate most significant, so integer order equals tuple order.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable

import numpy as np
from numba import njit

from .errors import InputError
from .graph import Graph

Element = tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        mods = tuple(int(m) for m in self.moduli)
        if not mods or any(m < 2 for m in mods):
            raise InputError(f"moduli must be >= 2, got {self.moduli}")
        object.__setattr__(self, "moduli", mods)

    @classmethod
    def parse(cls, text: str) -> AbelianGroup:
        try:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        except ValueError:
            raise InputError(f"bad group spec {text!r}; expected moduli like '5,5'") from None

    @property
    def order(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    @property
    def zero(self) -> Element:
        return (0,) * len(self.moduli)

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def elements(self) -> list[Element]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == len(self.moduli)
            and all(isinstance(a, int) and 0 <= a < m for a, m in zip(x, self.moduli))
        )

    def encode(self, x: Element) -> int:
        code = 0
        for a, m in zip(x, self.moduli):
            code = code * m + a
        return code

    def decode(self, code: int) -> Element:
        out = []
        for m in reversed(self.moduli):
            code, a = divmod(code, m)
            out.append(a)
        return tuple(reversed(out))

    @cached_property
    def add_table(self) -> np.ndarray:
        elems = self.elements()
        table = np.empty((len(elems), len(elems)), dtype=np.int64)
        for i, x in enumerate(elems):
            for j, y in enumerate(elems):
                table[i, j] = self.encode(self.add(x, y))
        return table

    def __str__(self) -> str:
        return " x ".join(f"Z_{m}" for m in self.moduli)


def _coerce(xs: Iterable, group: AbelianGroup | None) -> list:
    xs = list(xs)
    if not xs:
        raise InputError("sumset operands must be non-empty")
    if group is None:
        if not all(isinstance(x, int) for x in xs):
            raise InputError("integer mode needs integer elements")
        return xs
    out = []
    for x in xs:
        x = tuple(x) if not isinstance(x, int) else (x,)
        if not group.contains(x):
            raise InputError(f"{x} is not an element of {group}")
        out.append(x)
    return out


def _plus(group: AbelianGroup | None):
    return (lambda x, y: x + y) if group is None else group.add


def sumset(X: Iterable, Y: Iterable, group: AbelianGroup | None = None) -> set:
    """``{x + y}`` over the integers (``group=None``) or in ``group``."""
    X, Y = _coerce(X, group), _coerce(Y, group)
    add = _plus(group)
    return {add(x, y) for x in X for y in Y}


def restricted_sumset(X: Iterable, group: AbelianGroup | None = None) -> set:
    X = list(dict.fromkeys(_coerce(X, group)))
    if len(X) < 2:
        raise InputError("restricted sumset needs at least two distinct elements")
    add = _plus(group)
    return {add(x, y) for x, y in itertools.combinations(X, 2)}


def partial_sumset(
    X: Iterable, Y: Iterable, pairs: Iterable[tuple], group: AbelianGroup | None = None
) -> set:
    """Sums over the prescribed pairs only; every pair must lie in ``X x Y``."""
    pairs = list(pairs)
    if not pairs:
        return set()
    Xs, Ys = set(_coerce(X, group)), set(_coerce(Y, group))
    add = _plus(group)
    out = set()
    for x, y in pairs:
        if group is not None:
            x = tuple(x) if not isinstance(x, int) else (x,)
            y = tuple(y) if not isinstance(y, int) else (y,)
        if x not in Xs or y not in Ys:
            raise InputError(f"pair ({x}, {y}) is not in X x Y")
        out.add(add(x, y))
    return out


# ---------------------------------------------------------------------------
# K_m in a group: subset scan


@njit(cache=True, nogil=True)
def _scan_subsets(table, m, first_lo, first_hi, prune, best_init):  # pragma: no cover - jitted
    order = table.shape[0]
    counts = np.zeros(order, dtype=np.int64)
    chosen = np.zeros(m, dtype=np.int64)
    nxt = np.zeros(m + 1, dtype=np.int64)
    witness = np.full(m, -1, dtype=np.int64)
    best = best_init
    distinct = 0
    examined = 0
    d = 0
    nxt[0] = first_lo
    while d >= 0:
        limit = order - (m - d)
        if d == 0 and first_hi - 1 < limit:
            limit = first_hi - 1
        x = nxt[d]
        if x > limit:
            d -= 1
            if d >= 0:
                y = chosen[d]
                for t in range(d):
                    s = table[y, chosen[t]]
                    counts[s] -= 1
                    if counts[s] == 0:
                        distinct -= 1
                nxt[d] = y + 1
            continue
        chosen[d] = x
        for t in range(d):
            s = table[x, chosen[t]]
            if counts[s] == 0:
                distinct += 1
            counts[s] += 1
        descend = True
        if d + 1 == m:
            examined += 1
            if distinct < best:
                best = distinct
                for t in range(m):
                    witness[t] = chosen[t]
            descend = False
        elif prune and distinct >= best:
            descend = False
        if descend:
            nxt[d + 1] = x + 1
            d += 1
        else:
            for t in range(d):
                s = table[x, chosen[t]]
                counts[s] -= 1
                if counts[s] == 0:
                    distinct -= 1
            nxt[d] = x + 1
    return best, witness, examined


@dataclass
class SubsetScan:
    value: int | None
    witness: list[Element] | None
    examined: int
    total: int
    status: str


def min_restricted_sumset_complete(
    group: AbelianGroup,
    m: int,
    *,
    exhaustive: bool = False,
    pin_zero: bool = False,
    workers: int = 1,
    max_subsets: int = 10**8,
) -> SubsetScan:
    """Minimum ``|X +^ X|`` over ``m``-subsets ``X`` of ``group``.

    ``exhaustive`` visits every subset (no pruning); ``pin_zero`` restricts to
    subsets containing zero, which is exact by translation.  The witness is the
    lexicographically first minimizer in the scanned range.
    """
    order = group.order
    if not 2 <= m <= order:
        raise InputError(f"need 2 <= m <= |A| = {order}, got m={m}")
    total = comb(order - 1, m - 1) if pin_zero else comb(order, m)
    if total > max_subsets:
        return SubsetScan(None, None, 0, total, "unknown")
    table = group.add_table
    hi = 1 if pin_zero else order - m + 1
    cap = m * (m - 1) // 2 + 1
    if workers <= 1 or hi == 1:
        ranges = [(0, hi)]
    else:
        bounds = np.linspace(0, hi, min(workers, hi) + 1).astype(int)
        ranges = [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]

    def run(r):
        return _scan_subsets(table, m, r[0], r[1], not exhaustive, cap)

    if len(ranges) == 1:
        results = [run(ranges[0])]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, ranges))
    best, wit = cap, None
    examined = 0
    for value, witness, count in results:
        examined += int(count)
        if value < best:
            best, wit = int(value), witness
    return SubsetScan(best, [group.decode(int(c)) for c in wit], examined, total, "exact")


def zp2_construction(p: int) -> tuple[list[Element], int, set[Element]]:
    """The ``2p+1``-element subset of ``Z_p^2`` with ``4p`` restricted sums."""
    if p < 5 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
        raise InputError(f"p must be a prime >= 5, got {p}")
    h = (p + 1) // 2
    X = [(0, 0)] + [(1, i) for i in range(p)] + [(h, j) for j in range(p)]
    sums = restricted_sumset(X, AbelianGroup((p, p)))
    return X, len(sums), sums


def zp2_expected_sums(p: int) -> set[Element]:
    h = (p + 1) // 2
    return {(k % p, ell) for k in (1, 2, h, h + 1) for ell in range(p)}


# ---------------------------------------------------------------------------
# general graphs


@dataclass
class GroupIndexResult:
    value: int | None
    witness: list[Element] | None
    status: str
    lower: int
    nodes: int


def group_sum_index(
    g: Graph, group: AbelianGroup, *, node_budget: int = 10**7, workers: int = 1
) -> GroupIndexResult:
    """Fewest distinct edge sums over injective maps ``V -> group``.

    Vertex 0 is pinned to the identity: translating every label by ``c``
    shifts each sum by ``2c`` and keeps the count.
    """
    n = g.n
    if group.order < n:
        raise InputError(f"{group} has fewer than n={n} elements")
    delta = g.max_degree()
    if g.m == 0:
        return GroupIndexResult(0, [group.decode(i) for i in range(n)], "exact", 0, 0)
    if g.m == n * (n - 1) // 2:
        scan = min_restricted_sumset_complete(group, n, pin_zero=True, workers=workers)
        if scan.status != "exact":
            return GroupIndexResult(None, None, "unknown", delta, 0)
        return GroupIndexResult(scan.value, scan.witness, "exact", delta, scan.examined)
    return _injective_search(g, group, node_budget, delta)


def _injective_search(g: Graph, group: AbelianGroup, budget: int, delta: int) -> GroupIndexResult:
    table = group.add_table.tolist()
    order = group.order
    n = g.n
    back: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        back[max(u, v)].append(min(u, v))
    label = [-1] * n
    used = [False] * order
    counts = [0] * order
    state = {"best": g.m + 1, "witness": None, "nodes": 0, "distinct": 0}

    def place(v: int) -> None:
        if v == n:
            if state["distinct"] < state["best"]:
                state["best"] = state["distinct"]
                state["witness"] = list(label)
            return
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise OverflowError
        choices = [0] if v == 0 else range(order)
        for x in choices:
            if used[x]:
                continue
            added = []
            for w in back[v]:
                s = table[x][label[w]]
                if counts[s] == 0:
                    state["distinct"] += 1
                counts[s] += 1
                added.append(s)
            if state["distinct"] < state["best"]:
                used[x] = True
                label[v] = x
                place(v + 1)
                used[x] = False
                label[v] = -1
            for s in added:
                counts[s] -= 1
                if counts[s] == 0:
                    state["distinct"] -= 1
            if state["best"] == delta:
                return

    try:
        place(0)
    except OverflowError:
        wit = [group.decode(x) for x in state["witness"]] if state["witness"] else None
        value = state["best"] if state["witness"] else None
        return GroupIndexResult(value, wit, "unknown", delta, state["nodes"])
    return GroupIndexResult(
        state["best"], [group.decode(x) for x in state["witness"]], "exact", delta, state["nodes"]
    )
