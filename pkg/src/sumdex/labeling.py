"""Vertex rank assignments and their rank-sum signatures."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import InputError, LabelingError
from .graph import Graph, decode_graph6, encode_graph6


@dataclass(frozen=True)
class Labeling:
    """Ranks indexed by vertex: ``ranks[v]`` is the integer on vertex ``v``."""

    ranks: tuple[int, ...]

    def __init__(self, ranks: Sequence[int] | Mapping[int, int]):
        if isinstance(ranks, Mapping):
            keys = sorted(ranks)
            if keys != list(range(len(keys))):
                raise LabelingError(f"labeling domain {keys} is not 0..{len(keys) - 1}")
            ranks = [ranks[v] for v in keys]
        object.__setattr__(self, "ranks", tuple(int(r) for r in ranks))

    def __len__(self) -> int:
        return len(self.ranks)

    def __getitem__(self, v: int) -> int:
        return self.ranks[v]


@dataclass(frozen=True)
class SumSignature:
    sums: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sums)


@dataclass
class LabelingReport:
    ok: bool
    duplicates: list[tuple[int, int, int]] = field(default_factory=list)
    domain_error: str | None = None

    def describe(self) -> str:
        if self.ok:
            return "ok"
        parts = []
        if self.domain_error:
            parts.append(self.domain_error)
        for u, v, r in self.duplicates:
            parts.append(f"vertices {u},{v} share rank {r}")
        return "; ".join(parts)


def validate_labeling(g: Graph, f: Labeling | Sequence[int] | Mapping[int, int]) -> LabelingReport:
    """Report domain mismatches and repeated ranks; never raises."""
    if isinstance(f, Mapping):
        keys = sorted(f)
        if keys != list(range(g.n)):
            return LabelingReport(False, domain_error=f"labeling domain {keys} is not 0..{g.n - 1}")
        ranks = [int(f[v]) for v in keys]
    else:
        ranks = list(f.ranks if isinstance(f, Labeling) else f)
        if len(ranks) != g.n:
            return LabelingReport(
                False, domain_error=f"labeling has {len(ranks)} ranks for {g.n} vertices"
            )
    first_at: dict[int, int] = {}
    dups = []
    for v, r in enumerate(ranks):
        if r in first_at:
            dups.append((first_at[r], v, r))
        else:
            first_at[r] = v
    return LabelingReport(not dups, duplicates=dups)


def _checked(g: Graph, f: Labeling) -> tuple[int, ...]:
    report = validate_labeling(g, f)
    if not report.ok:
        raise LabelingError(report.describe())
    return f.ranks


def rank_sums(g: Graph, f: Labeling) -> SumSignature:
    r = _checked(g, f)
    return SumSignature(tuple(sorted({r[u] + r[v] for u, v in g.edges})))


def sum_classes(g: Graph, f: Labeling) -> dict[int, list[tuple[int, int]]]:
    """Edges grouped by rank sum; each group is a matching."""
    r = _checked(g, f)
    classes: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for u, v in g.edges:
        classes[r[u] + r[v]].append((u, v))
    return dict(sorted(classes.items()))


def affine_map(f: Labeling, a: int, b: int) -> Labeling:
    if a == 0:
        raise InputError("affine multiplier must be non-zero")
    return Labeling([a * r + b for r in f.ranks])


def labeling_to_json(g: Graph, f: Labeling) -> dict:
    sig = rank_sums(g, f)
    return {
        "graph6": encode_graph6(g),
        "ranks": [str(r) for r in f.ranks],
        "sums": [str(s) for s in sig.sums],
        "sum_count": sig.count,
    }


def labeling_from_json(data: Mapping) -> tuple[Graph, Labeling]:
    try:
        g = decode_graph6(data["graph6"])
        f = Labeling([int(r) for r in data["ranks"]])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed labeling JSON: {exc}") from None
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"malformed labeling JSON: {exc}") from None
    return g, f
