"""Simple undirected graphs stored as per-vertex bit rows.

Vertices are the integers ``0..n-1``. A vertex set is a plain Python ``int``
used as a bitmask (bit ``v`` set means ``v`` is a member), so neighbourhood
intersection is a single ``&``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

import numpy as np

VertexSet = int


def vset(vertices: Iterable[int]) -> VertexSet:
    """Bitmask of the given vertices."""
    mask = 0
    for v in vertices:
        if v < 0:
            raise ValueError(f"negative vertex {v}")
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> list[int]:
    """Sorted vertex list of a bitmask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``rows[v]`` is the neighbourhood bitmask of ``v``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise ValueError(f"row {v} has out-of-range bits")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at {v}")
        for v, row in enumerate(self.rows):
            for u in iter_members(row):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> VertexSet:
        return self.rows[v]

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in iter_members(self.rows[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: VertexSet) -> bool:
        return all((mask & ~self.rows[v]) == 1 << v for v in iter_members(mask))

    def is_independent(self, mask: VertexSet) -> bool:
        return all(not (self.rows[v] & mask) for v in iter_members(mask))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def empty(k: int) -> Graph:
    """Edgeless graph on ``k`` vertices."""
    return Graph(k, (0,) * k)


def complete(k: int) -> Graph:
    full = (1 << k) - 1
    return Graph(k, tuple(full & ~(1 << v) for v in range(k)))


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(empty(a), empty(b))


def path(k: int) -> Graph:
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    rows = g1.rows + tuple(r << shift for r in g2.rows)
    return Graph(g1.n + g2.n, rows)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two parts; ``g2`` is shifted by ``g1.n``."""
    shift = g1.n
    block1 = (1 << g1.n) - 1
    block2 = ((1 << g2.n) - 1) << shift
    rows = tuple(r | block2 for r in g1.rows) + tuple((r << shift) | block1 for r in g2.rows)
    return Graph(g1.n + g2.n, rows)


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~r & ~(1 << v) for v, r in enumerate(g.rows)))


def _check_subset(g: Graph, s: VertexSet) -> None:
    if s < 0 or s >> g.n:
        bad = [v for v in members(s) if v >= g.n]
        raise ValueError(f"vertices {bad} out of range for n={g.n}")


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """Subgraph induced by ``s``, relabelled ``0..|s|-1`` in increasing vertex order."""
    _check_subset(g, s)
    verts = members(s)
    index = {v: i for i, v in enumerate(verts)}
    rows = []
    for v in verts:
        rows.append(vset(index[u] for u in iter_members(g.rows[v] & s)))
    return Graph(len(verts), tuple(rows))


def add_vertex(g: Graph, nbrs: VertexSet) -> Graph:
    """Append vertex ``g.n`` adjacent exactly to ``nbrs``."""
    _check_subset(g, nbrs)
    new = 1 << g.n
    rows = tuple(r | new if (nbrs >> v) & 1 else r for v, r in enumerate(g.rows))
    return Graph(g.n + 1, rows + (nbrs,))


def add_vertices(g: Graph, neighbourhoods: Iterable[VertexSet]) -> Graph:
    """Append pairwise non-adjacent vertices, one per given neighbourhood (all within ``V(g)``)."""
    rows = list(g.rows)
    for nbrs in neighbourhoods:
        _check_subset(g, nbrs)
        new = 1 << len(rows)
        for v in iter_members(nbrs):
            rows[v] |= new
        rows.append(nbrs)
    return Graph(len(rows), tuple(rows))


def sample_gnp(n: int, p: Fraction | float | int | str, seed: int) -> Graph:
    """Erdős–Rényi ``G(n, p)`` sample, reproducible across platforms.

    The generator is numpy's Philox4x64-10 keyed with ``seed`` (mod 2**64). Its
    raw 64-bit outputs are consumed one per vertex pair in graph6 order
    (``(0,1), (0,2), (1,2), (0,3), ...``) and pair ``{i, j}`` is an edge iff
    ``raw < p * 2**64``, compared exactly in rational arithmetic.
    """
    p = Fraction(p)
    if not 0 <= p <= 1:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    pairs = n * (n - 1) // 2
    bitgen = np.random.Philox(key=seed % (1 << 64))
    raw = bitgen.random_raw(pairs).tolist() if pairs else []
    threshold_num = p.numerator << 64
    den = p.denominator
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if raw[k] * den < threshold_num:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
