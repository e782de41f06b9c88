"""Explicit labelings that attain known sum-index values.

Every public ``label_*`` function recomputes the number of distinct sums of
the labeling it builds and raises :class:`ConstructionError` if it differs
from the value the construction is supposed to reach.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .bounds import cluster3_index, cluster4_index, multipartite_index
from .errors import ConstructionError, InputError
from .extremal import lbeg_targets
from .graph import Graph, cluster, complete_multipartite, hypercube, join_family
from .labeling import Labeling, labeling_to_json, rank_sums


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    labeling: Labeling
    claimed: int
    achieved: int

    def to_json(self) -> dict:
        out = labeling_to_json(self.graph, self.labeling)
        out["claimed"] = self.claimed
        out["achieved"] = self.achieved
        return out


def _finish(g: Graph, ranks: Sequence[int], claimed: int) -> ConstructionResult:
    f = Labeling(ranks)
    achieved = rank_sums(g, f).count
    if achieved != claimed:
        raise ConstructionError(
            f"{g.family_tag or g}: construction reached {achieved} sums, expected {claimed}"
        )
    return ConstructionResult(g, f, claimed, achieved)


def _parts(parts: Sequence[int]) -> list[int]:
    parts = sorted((int(p) for p in parts), reverse=True)
    if len(parts) < 2:
        raise InputError("need at least two parts")
    if parts[-1] < 1:
        raise InputError(f"part sizes must be positive, got {parts}")
    return parts


def label_multipartite(parts: Sequence[int]) -> ConstructionResult:
    """Ranks ``1..n_1`` on the largest part, ``N-n_2+1..N`` on the second, the
    middle block on the rest in vertex order."""
    parts = _parts(parts)
    N = sum(parts)
    n1, n2 = parts[0], parts[1]
    ranks = list(range(1, n1 + 1)) + list(range(N - n2 + 1, N + 1)) + list(range(n1 + 1, N - n2 + 1))
    return _finish(complete_multipartite(parts), ranks, multipartite_index(parts))


def label_join_family(parts: Sequence[int]) -> ConstructionResult:
    parts = _parts(parts)
    N = sum(parts)
    n1, n2 = parts[0], parts[1]
    # v'_i carries N - i + 1, i.e. the second block counts down
    ranks = list(range(1, n1 + 1)) + list(range(N, N - n2, -1)) + list(range(n1 + 1, N - n2 + 1))
    return _finish(join_family(parts), ranks, multipartite_index(parts))


def hypercube_ranks(d: int) -> list[int]:
    """Ranks ``f_d`` on ``Q_d`` (binary vertex order) by the doubling recursion."""
    if d < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {d}")
    f = [1, 2]
    for k in range(1, d):
        half = 1 << (k - 1)
        low = [r if r <= half else r + (1 << k) for r in f]
        copy = [3 * half + 1 - r for r in f]
        f = low + copy
    return f


def hypercube_sum_set(d: int) -> set[int]:
    top = (1 << d) + 1
    return {top} | {top + sgn * (1 << i) for i in range(d - 1) for sgn in (1, -1)}


def label_hypercube(d: int) -> ConstructionResult:
    return _finish(hypercube(d), hypercube_ranks(d), 2 * d - 1)


# ---------------------------------------------------------------------------
# cluster graphs


def k4_ranks_from_sums(a1: int, a2: int, a3: int, b1: int, b2: int, b3: int) -> tuple[int, int, int, int]:
    """Vertex ranks of a K_4 whose opposite edge pairs carry sums ``(a_i, b_i)``.

    ``a_1, a_2, a_3`` land on ``v3v4, v2v4, v2v3`` and ``b_i`` on the edge
    opposite ``a_i``.
    """
    total = a1 + b1
    if a2 + b2 != total or a3 + b3 != total:
        raise InputError("opposite edge sums must share one total")
    nums = (b1 + b2 - a3, a2 + a3 - a1, a1 + a3 - a2, a1 + a2 - a3)
    if any(x % 2 for x in nums):
        raise InputError("rank numerators must be even")
    ranks = tuple(x // 2 for x in nums)
    if len(set(ranks)) < 4:
        raise InputError(f"sums force repeated ranks {ranks}")
    return ranks


def _k4_symbolic(a1, a2, a3, b1, b2, b3):
    """Same formulas as ``k4_ranks_from_sums`` over vectors; returns doubled ranks."""

    def lin(x, y, z):
        return tuple(p + q - r for p, q, r in zip(x, y, z))

    return (lin(b1, b2, a3), lin(a2, a3, a1), lin(a1, a3, a2), lin(a1, a2, a3))


def _primes(count: int) -> list[int]:
    out: list[int] = []
    c = 2
    while len(out) < count:
        if all(c % p for p in out if p * p <= c):
            out.append(c)
        c += 1
    return out


def _sqrt_floor(p: int, bits: int) -> int:
    """``floor(sqrt(p) * 2**bits)``."""
    return isqrt(p << (2 * bits))


def _nearest_scaled_sqrt(p: int, bits: int) -> int:
    r = _sqrt_floor(p, bits)
    return r + 1 if (2 * r + 1) ** 2 < (p << (2 * bits + 2)) else r


def _gap_lower_bound(vectors: list[tuple[int, ...]], primes: list[int], scale: int) -> Fraction:
    """Certified lower bound on ``min |x - y|`` over distinct real values.

    Each vector holds integer coefficients on ``sqrt(primes[i])``; the value is
    ``sum(c_i sqrt(p_i)) / scale``.  Precision is raised until every pairwise
    difference has an interval excluding zero.
    """
    bits = 32
    diffs = [
        tuple(a - b for a, b in zip(x, y)) for x, y in itertools.combinations(vectors, 2)
    ]
    while True:
        roots = [_sqrt_floor(p, bits) for p in primes]
        best = None
        for d in diffs:
            centre = sum(c * r for c, r in zip(d, roots))
            # true value * 2**bits lies in [centre + neg, centre + pos]
            lo = centre + sum(c for c in d if c < 0)
            hi = centre + sum(c for c in d if c > 0)
            if lo <= 0 <= hi:
                best = None
                break
            mag = min(abs(lo), abs(hi))
            if best is None or mag < best:
                best = mag
        if best is not None or not diffs:
            return Fraction(best or 0, scale << bits)
        bits *= 2


@dataclass(frozen=True)
class K4Plan:
    """Symbolic layout of the nK_4 construction before integer rounding."""

    s: int
    primes: tuple[int, ...]
    patterns: tuple[tuple[tuple[str, int], ...], ...]
    delta_sums: Fraction
    delta_ranks: Fraction


def _k4_patterns(s: int) -> list[tuple[tuple[str, int], ...]]:
    """Admissible ``(a1, a2, a3)`` sum triples; ``('a', i)`` is the i-th low
    value, ``('b', i)`` its mirror, ``('p', 0)`` the centre."""
    h = s // 2
    low = [tuple(("a", i) for i in t) for t in itertools.combinations(range(h), 3)]
    high = [tuple(("b", i) for i in t) for t in itertools.combinations(range(h), 3)]
    centre = []
    if s % 2:
        centre = [(("p", 0), ("a", i), ("a", j)) for i, j in itertools.combinations(range(h), 2)]
    return low + high + centre


def _mirror_tag(tag):
    kind, i = tag
    if kind == "a":
        return ("b", i)
    if kind == "b":
        return ("a", i)
    return ("p", 0)


def _pattern_values(pattern) -> set:
    return set(pattern) | {_mirror_tag(t) for t in pattern}


def _choose_patterns(s: int, n: int) -> list[tuple[tuple[str, int], ...]]:
    """``n`` distinct patterns jointly using all ``s`` sum values."""
    pool = _k4_patterns(s)
    if n > len(pool):
        raise InputError(f"{n} clusters exceed the {len(pool)} patterns available with s={s}")
    chosen: list = []
    covered: set = set()
    universe = set().union(*(_pattern_values(p) for p in pool)) if pool else set()
    while covered != universe and len(chosen) < n:
        best = max(
            (p for p in pool if p not in chosen),
            key=lambda p: len(_pattern_values(p) - covered),
        )
        chosen.append(best)
        covered |= _pattern_values(best)
    chosen += [p for p in pool if p not in chosen][: n - len(chosen)]
    return chosen


def _symbolic_value(tag, h: int) -> tuple[int, ...]:
    """Coefficient vector (length h+1) of a sum value; index h is the centre root."""
    kind, i = tag
    vec = [0] * (h + 1)
    if kind == "a":
        vec[i] = 1
    elif kind == "b":
        vec[h] = 2
        vec[i] = -1
    else:
        vec[h] = 1
    return tuple(vec)


def plan_cluster4(n: int) -> K4Plan:
    s = cluster4_index(n)
    h = s // 2
    primes = _primes(h + 1)
    patterns = _choose_patterns(s, n)
    values = [_symbolic_value(("a", i), h) for i in range(h)]
    values += [_symbolic_value(("b", i), h) for i in range(h)]
    if s % 2:
        values.append(_symbolic_value(("p", 0), h))
    delta_sums = _gap_lower_bound(values, primes, 1)
    ranks = []
    for pat in patterns:
        a = [_symbolic_value(t, h) for t in pat]
        b = [_symbolic_value(_mirror_tag(t), h) for t in pat]
        ranks.extend(_k4_symbolic(*a, *b))
    # doubled ranks: scale 2
    delta_ranks = _gap_lower_bound(ranks, primes, 2)
    return K4Plan(s, tuple(primes), tuple(patterns), delta_sums, delta_ranks)


def _multiplier_bits(plan: K4Plan) -> int:
    """Smallest ``m`` with ``2**m`` times each gap bound exceeding 10."""
    delta = min(plan.delta_sums, plan.delta_ranks)
    m = 0
    while (1 << m) * delta <= 10:
        m += 1
    return m


def label_cluster4(n: int) -> ConstructionResult:
    if n < 1:
        raise InputError("need at least one cluster")
    plan = plan_cluster4(n)
    h = plan.s // 2
    g = cluster(n, 4)
    bits = _multiplier_bits(plan)
    for _ in range(16):
        alpha = [_nearest_scaled_sqrt(p, bits) for p in plan.primes[:h]]
        centre = _nearest_scaled_sqrt(plan.primes[h], bits)

        def value(tag):
            kind, i = tag
            if kind == "a":
                return 2 * alpha[i]
            if kind == "b":
                return 2 * (2 * centre - alpha[i])
            return 2 * centre

        ranks: list[int] = []
        try:
            for pat in plan.patterns:
                a = [value(t) for t in pat]
                b = [value(_mirror_tag(t)) for t in pat]
                ranks.extend(k4_ranks_from_sums(*a, *b))
            return _finish(g, ranks, plan.s)
        except (InputError, ConstructionError):
            bits += 1
    raise ConstructionError(f"nK_4 construction failed to integerize for n={n}")


def label_cluster3(n: int) -> ConstructionResult:
    """Each triangle gets its own 3-subset of the sum values ``2*4**j`` (colex order)."""
    if n < 1:
        raise InputError("need at least one cluster")
    s = cluster3_index(n)
    values = [2 * 4**j for j in range(s)]
    triples = sorted(itertools.combinations(range(s), 3), key=lambda t: t[::-1])[:n]
    ranks = []
    for i, j, k in triples:
        a, b, c = values[i], values[j], values[k]
        ranks += [(a + b - c) // 2, (a + c - b) // 2, (b + c - a) // 2]
    return _finish(cluster(n, 3), ranks, s)


def label_cluster(n: int, k: int) -> ConstructionResult:
    if n < 1:
        raise InputError("need at least one cluster")
    if k == 2:
        ranks = [r for i in range(n) for r in (i + 1, 2 * n - i)]
        return _finish(cluster(n, 2), ranks, 1)
    if k == 3:
        return label_cluster3(n)
    if k == 4:
        return label_cluster4(n)
    raise InputError(f"cluster constructions exist for k in {{2, 3, 4}}, got {k}")


# ---------------------------------------------------------------------------
# layered extremal construction


def extremal_construction(n: int, N: int) -> ConstructionResult:
    """Ranks ``1..n`` with every pair whose sum is one of the first ``N`` layered targets."""
    targets = lbeg_targets(n, N)
    wanted = set(targets)
    edges = tuple(
        (i - 1, j - 1)
        for i, j in itertools.combinations(range(1, n + 1), 2)
        if i + j in wanted
    )
    g = Graph(n, edges, f"lbeg({n},{N})")
    return _finish(g, list(range(1, n + 1)), N)
