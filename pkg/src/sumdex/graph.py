"""Simple undirected graphs, the named families used throughout sumdex, and
graph6 / edge-list interchange.

Vertex numbering per family (frozen; constructions assign ranks by position):

* ``complete``, ``path``, ``empty``: vertices ``0..n-1``; a path runs 0-1-2-...
* ``cycle``: ``i ~ i+1 (mod m)``.
* ``complete_bipartite`` / ``complete_multipartite``: part sizes are sorted
  non-increasing and parts occupy consecutive vertex blocks in that order.
* ``hypercube``: vertex ``v`` is the bit string of ``v``; the copy of ``v``
  made when passing from ``Q_{d-1}`` to ``Q_d`` is ``v + 2**(d-1)``.
* ``cluster`` ``(n, k)``: cluster ``i`` is vertices ``k*i .. k*i+k-1``.
* ``ladder`` ``(2m)``: ``P_m □ P_2``; rail one is ``0..m-1``, rail two ``m..2m-1``.
* ``threshold_tail`` ``(n)``: ``L_n``; 1-based ``v_i`` is vertex ``i-1``, with
  ``v_i v_j`` an edge iff ``i != j`` and ``i + j >= n + 2``.
* ``join_family`` ``(n_1, ..., n_k)``: ``L_{n_1} ∨ L_{n_2} ∨ K_{n_3} ∨ ...`` with
  the blocks laid out consecutively in that order.

``cartesian_product(g1, g2)`` maps the pair ``(a, b)`` to ``a + g1.n * b``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import Graph6Error, InputError

Edge = tuple[int, int]

FAMILY_KINDS = (
    "empty",
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cycle",
    "path",
    "hypercube",
    "cluster",
    "ladder",
    "threshold_tail",
    "join_family",
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Edges are normalized to sorted ``(min, max)`` pairs in lexicographic order.
    ``family_tag`` is informational and ignored by equality.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    family_tag: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be non-negative, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge ({u}, {v}) out of range for n={self.n}")
            pair = (u, v) if u < v else (v, u)
            if pair in normalized:
                raise InputError(f"duplicate edge {pair}")
            normalized.add(pair)
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        pair = (u, v) if u < v else (v, u)
        return pair in set(self.edges)

    def non_edges(self) -> list[Edge]:
        present = set(self.edges)
        return [p for p in itertools.combinations(range(self.n), 2) if p not in present]

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, self.edges + ((u, v),))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def with_tag(self, tag: str | None) -> Graph:
        return Graph(self.n, self.edges, tag)

    def __repr__(self) -> str:
        tag = f" {self.family_tag}" if self.family_tag else ""
        return f"<Graph{tag} n={self.n} m={self.m}>"


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise InputError(f"unknown family kind {self.kind!r}")
        params = tuple(int(p) for p in self.params)
        if any(p <= 0 for p in params) and self.kind != "empty":
            raise InputError(f"{self.kind} parameters must be positive, got {params}")
        if self.kind == "empty" and any(p < 0 for p in params):
            raise InputError(f"empty graph size must be non-negative, got {params}")
        if self.kind in ("complete_multipartite", "join_family", "complete_bipartite"):
            params = tuple(sorted(params, reverse=True))
        object.__setattr__(self, "params", params)

    @classmethod
    def of(cls, kind: str, *params: int) -> FamilySpec:
        return cls(kind, tuple(params))

    @property
    def tag(self) -> str:
        p = self.params
        if self.kind == "complete":
            return f"K_{p[0]}"
        if self.kind in ("complete_bipartite", "complete_multipartite"):
            return "K_{" + ",".join(map(str, p)) + "}"
        if self.kind == "cycle":
            return f"C_{p[0]}"
        if self.kind == "path":
            return f"P_{p[0]}"
        if self.kind == "hypercube":
            return f"Q_{p[0]}"
        if self.kind == "cluster":
            return f"{p[0]}K_{p[1]}"
        if self.kind == "threshold_tail":
            return f"L_{p[0]}"
        if self.kind == "empty":
            return f"E_{p[0]}"
        return f"{self.kind}({','.join(map(str, p))})"


def _need(spec: FamilySpec, count: int | None = None, minimum: int | None = None) -> None:
    if count is not None and len(spec.params) != count:
        raise InputError(f"{spec.kind} takes {count} parameter(s), got {len(spec.params)}")
    if minimum is not None and len(spec.params) < minimum:
        raise InputError(f"{spec.kind} takes at least {minimum} parameters")


def empty(n: int) -> Graph:
    return Graph(n, (), f"E_{n}")


def complete(n: int) -> Graph:
    return Graph(n, tuple(itertools.combinations(range(n), 2)), f"K_{n}")


def path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), f"P_{n}")


def cycle(m: int) -> Graph:
    if m < 3:
        raise InputError(f"cycle needs at least 3 vertices, got {m}")
    return Graph(m, tuple((i, (i + 1) % m) for i in range(m)), f"C_{m}")


def complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = sorted(parts, reverse=True)
    starts = list(itertools.accumulate([0] + parts[:-1]))
    edges = []
    for (i, si), (j, sj) in itertools.combinations(enumerate(starts), 2):
        for u in range(si, si + parts[i]):
            for v in range(sj, sj + parts[j]):
                edges.append((u, v))
    return Graph(sum(parts), tuple(edges), "K_{" + ",".join(map(str, parts)) + "}")


def threshold_tail(n: int) -> Graph:
    edges = [
        (i - 1, j - 1)
        for i, j in itertools.combinations(range(1, n + 1), 2)
        if i + j >= n + 2
    ]
    return Graph(n, tuple(edges), f"L_{n}")


def hypercube(d: int) -> Graph:
    if d < 1:
        raise InputError(f"hypercube dimension must be >= 1, got {d}")
    n = 1 << d
    edges = [(v, v | (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1]
    return Graph(n, tuple(edges), f"Q_{d}")


def cluster(n: int, k: int) -> Graph:
    edges = [
        (k * c + i, k * c + j)
        for c in range(n)
        for i, j in itertools.combinations(range(k), 2)
    ]
    return Graph(n * k, tuple(edges), f"{n}K_{k}")


def ladder(n: int) -> Graph:
    if n < 2 or n % 2:
        raise InputError(f"ladder needs an even vertex count >= 2, got {n}")
    return cartesian_product(path(n // 2), path(2)).with_tag(f"ladder({n})")


def join_family(parts: Sequence[int]) -> Graph:
    parts = sorted(parts, reverse=True)
    if len(parts) < 2:
        raise InputError("join family needs at least two parts")
    g = join(threshold_tail(parts[0]), threshold_tail(parts[1]))
    for size in parts[2:]:
        g = join(g, complete(size))
    return g.with_tag("join_family(" + ",".join(map(str, parts)) + ")")


def generate(spec: FamilySpec) -> Graph:
    """Build the graph named by ``spec`` with the documented vertex numbering."""
    kind, p = spec.kind, spec.params
    if kind == "empty":
        _need(spec, 1)
        g = empty(p[0])
    elif kind == "complete":
        _need(spec, 1)
        g = complete(p[0])
    elif kind == "complete_bipartite":
        _need(spec, 2)
        g = complete_multipartite(p)
    elif kind == "complete_multipartite":
        _need(spec, minimum=2)
        g = complete_multipartite(p)
    elif kind == "cycle":
        _need(spec, 1)
        g = cycle(p[0])
    elif kind == "path":
        _need(spec, 1)
        g = path(p[0])
    elif kind == "hypercube":
        _need(spec, 1)
        g = hypercube(p[0])
    elif kind == "cluster":
        _need(spec, 2)
        g = cluster(p[0], p[1])
    elif kind == "ladder":
        _need(spec, 1)
        g = ladder(p[0])
    elif kind == "threshold_tail":
        _need(spec, 1)
        g = threshold_tail(p[0])
    else:
        _need(spec, minimum=2)
        g = join_family(p)
    return g.with_tag(spec.tag)


def join(g1: Graph, g2: Graph) -> Graph:
    """Union of ``g1`` and ``g2`` (shifted by ``g1.n``) plus every cross edge."""
    shift = g1.n
    edges = list(g1.edges)
    edges += [(u + shift, v + shift) for u, v in g2.edges]
    edges += [(u, v + shift) for u in range(g1.n) for v in range(g2.n)]
    return Graph(g1.n + g2.n, tuple(edges))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    edges = list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges]
    return Graph(g1.n + g2.n, tuple(edges))


def cartesian_product(g1: Graph, g2: Graph) -> Graph:
    n1 = g1.n
    edges = []
    for b in range(g2.n):
        edges += [(u + n1 * b, v + n1 * b) for u, v in g1.edges]
    for a in range(n1):
        edges += [(a + n1 * x, a + n1 * y) for x, y in g2.edges]
    return Graph(n1 * g2.n, tuple(edges))


def degree_sequence(g: Graph) -> list[int]:
    return sorted(g.degrees())


# ---------------------------------------------------------------------------
# canonical form


def _refined_cells(g: Graph) -> list[list[int]]:
    """Ordered vertex partition from colour refinement seeded by degree."""
    adj = g.adjacency()
    colour = [len(a) for a in adj]
    while True:
        sig = [(colour[v], tuple(sorted(colour[w] for w in adj[v]))) for v in range(g.n)]
        ranking = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranking[s] for s in sig]
        if len(set(new)) == len(set(colour)):
            colour = new
            break
        colour = new
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colour[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def canonical_key(g: Graph) -> tuple[int, int]:
    """Isomorphism invariant ``(n, code)``; equal keys iff isomorphic graphs.

    ``code`` is the largest adjacency bit string over all vertex orders that
    respect the colour-refinement partition.
    """
    cells = _refined_cells(g)
    n = g.n
    bit = {}
    for idx, (i, j) in enumerate(itertools.combinations(range(n), 2)):
        bit[(i, j)] = 1 << (n * (n - 1) // 2 - 1 - idx)
    best = -1
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        order = [v for block in choice for v in block]
        pos = [0] * n
        for p, v in enumerate(order):
            pos[v] = p
        code = 0
        for u, v in g.edges:
            a, b = pos[u], pos[v]
            code |= bit[(a, b) if a < b else (b, a)]
        if code > best:
            best = code
    return (n, best)


def canonical_form(g: Graph) -> Graph:
    n, code = canonical_key(g)
    pairs = list(itertools.combinations(range(n), 2))
    total = len(pairs)
    edges = tuple(p for idx, p in enumerate(pairs) if code >> (total - 1 - idx) & 1)
    return Graph(n, edges)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.m != g2.m or degree_sequence(g1) != degree_sequence(g2):
        return False
    return canonical_key(g1) == canonical_key(g2)


# ---------------------------------------------------------------------------
# graph6


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InputError(f"graph too large for graph6: n={n}")


def encode_graph6(g: Graph) -> str:
    present = set(g.edges)
    bits = [1 if (i, j) in present else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chunks.append(chr(value + 63))
    return _encode_size(g.n) + "".join(chunks)


def decode_graph6(text: str) -> Graph:
    data = text.strip()
    start = 0
    if data.startswith(">>graph6<<"):
        start = len(">>graph6<<")
    for off in range(start, len(data)):
        if not 63 <= ord(data[off]) <= 126:
            raise Graph6Error(f"byte {data[off]!r} outside graph6 range 63..126", off)
    if start >= len(data):
        raise Graph6Error("missing size header", start)
    if data[start] != "~":
        n, pos = ord(data[start]) - 63, start + 1
    elif start + 1 < len(data) and data[start + 1] == "~":
        if len(data) < start + 8:
            raise Graph6Error("truncated 8-byte size header", len(data))
        n = 0
        for c in data[start + 2:start + 8]:
            n = n << 6 | (ord(c) - 63)
        pos = start + 8
    else:
        if len(data) < start + 4:
            raise Graph6Error("truncated 4-byte size header", len(data))
        n = 0
        for c in data[start + 1:start + 4]:
            n = n << 6 | (ord(c) - 63)
        pos = start + 4
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} edge bytes for n={n}, found {len(body)}", pos + min(len(body), need)
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    for k in range(nbits, need * 6):
        if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
            raise Graph6Error("non-zero padding bits", pos + k // 6)
    return Graph(n, tuple(edges))


# ---------------------------------------------------------------------------
# edge-list text


def format_edge_list(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if not line.startswith("n="):
                raise InputError(f"line {lineno}: expected 'n=<k>' header, got {raw!r}")
            try:
                n = int(line[2:])
            except ValueError:
                raise InputError(f"line {lineno}: bad vertex count {raw!r}") from None
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex in {raw!r}") from None
    if n is None:
        raise InputError("edge list is missing the 'n=<k>' header")
    return Graph(n, tuple(edges))


def read_graph(text: str) -> Graph:
    """Parse graph6 or edge-list text, deciding by the first meaningful line."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            return parse_edge_list(text) if line.startswith("n=") else decode_graph6(line)
    raise InputError("no graph found in input")
