"""Exact solvers for clique, independence, chromatic and cochromatic numbers.

Every solver returns a :class:`SolveResult` whose witness can be re-checked
with :func:`verify_coloring`, :func:`verify_homogeneous_partition` or
``Graph.is_clique``. Search is deterministic: ties are always broken towards
the lowest vertex index.

A caller may pass a :class:`Budget`. When it runs out the solver stops and
returns the best bounds found so far, with a witness for the upper bound
(lower bound for the maximisation problems).
"""
from __future__ import annotations

import heapq
import time
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .graph import Graph, VertexSet, complement, iter_members, lowest, members

CLIQUE = "clique"
INDEPENDENT = "independent"


class BudgetExceeded(Exception):
    pass


class Budget:
    """Wall-clock and/or node-count limit shared by one or more searches."""

    def __init__(self, time_ms: float | None = None, node_limit: int | None = None):
        self.deadline = None if time_ms is None else time.monotonic() + time_ms / 1000.0
        self.node_limit = node_limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise BudgetExceeded
        if self.deadline is not None and not self.nodes & 127 and time.monotonic() > self.deadline:
            raise BudgetExceeded


def _budget(budget: Budget | None) -> Budget:
    return budget if budget is not None else Budget()


@dataclass(frozen=True)
class Coloring:
    assignment: tuple[int, ...]

    @property
    def color_count(self) -> int:
        return len(set(self.assignment))

    def classes(self) -> list[VertexSet]:
        by_color: dict[int, int] = {}
        for v, c in enumerate(self.assignment):
            by_color[c] = by_color.get(c, 0) | (1 << v)
        return [by_color[c] for c in sorted(by_color)]


@dataclass(frozen=True)
class HomogeneousPartition:
    classes: tuple[tuple[VertexSet, str], ...]

    def __len__(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [m.bit_count() for m, _ in self.classes]


@dataclass
class SolveResult:
    lower: int
    upper: int
    witness: object
    nodes_explored: int = 0
    elapsed: float = 0.0

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def value(self) -> int | None:
        return self.upper if self.exact else None


@dataclass(frozen=True)
class Verdict:
    ok: bool
    violation: Optional[str] = None
    detail: tuple = field(default=())

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------- verifiers

def verify_coloring(g: Graph, c: Coloring | Sequence[int]) -> Verdict:
    assignment = c.assignment if isinstance(c, Coloring) else tuple(c)
    if len(assignment) != g.n:
        raise ValueError(f"coloring covers {len(assignment)} vertices, graph has {g.n}")
    for u, v in g.edges():
        if assignment[u] == assignment[v]:
            return Verdict(False, f"edge ({u}, {v}) is monochromatic", (u, v))
    return Verdict(True)


def verify_homogeneous_partition(g: Graph, p: HomogeneousPartition) -> Verdict:
    seen = 0
    for idx, (mask, kind) in enumerate(p.classes):
        if mask >> g.n:
            return Verdict(False, f"class {idx} has out-of-range vertices", (idx,))
        overlap = seen & mask
        if overlap:
            v = lowest(overlap)
            return Verdict(False, f"vertex {v} lies in two classes", (v,))
        seen |= mask
        if kind == CLIQUE:
            for v in iter_members(mask):
                missing = mask & ~g.rows[v] & ~(1 << v)
                if missing:
                    return Verdict(False, f"class {idx} declared clique but {v},{lowest(missing)} non-adjacent",
                                   (v, lowest(missing)))
        elif kind == INDEPENDENT:
            for v in iter_members(mask):
                hit = mask & g.rows[v]
                if hit:
                    return Verdict(False, f"class {idx} declared independent but {v},{lowest(hit)} adjacent",
                                   (v, lowest(hit)))
        else:
            return Verdict(False, f"class {idx} has unknown kind {kind!r}", (idx,))
    uncovered = g.full & ~seen
    if uncovered:
        v = lowest(uncovered)
        return Verdict(False, f"vertex {v} is not covered", (v,))
    return Verdict(True)


# ------------------------------------------------------------------ cliques

def _color_sort(rows: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy colouring of ``cand``; returns vertices in colour order and their colour numbers."""
    order, bounds = [], []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            v = lowest(q)
            q &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def degeneracy_order(g: Graph) -> list[int]:
    """Smallest-last vertex order (ties to lowest index)."""
    deg = [r.bit_count() for r in g.rows]
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    removed = [False] * g.n
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in iter_members(g.rows[v]):
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order


def clique_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Maximum clique by colour-bounded branch and bound over a degeneracy decomposition."""
    start = time.perf_counter()
    bud = _budget(budget)
    nodes0 = bud.nodes
    rows = g.rows
    if g.n == 0:
        return SolveResult(0, 0, 0, 0, time.perf_counter() - start)

    best = [1 << 0, 1]

    def expand(clique: int, size: int, cand: int) -> None:
        bud.tick()
        order, bounds = _color_sort(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[1]:
                return
            v = order[i]
            bit = 1 << v
            nxt = cand & rows[v]
            if nxt:
                expand(clique | bit, size + 1, nxt)
            elif size + 1 > best[1]:
                best[0], best[1] = clique | bit, size + 1
            cand &= ~bit

    order = degeneracy_order(g)
    later = [0] * g.n
    remaining = g.full
    for v in order:
        remaining &= ~(1 << v)
        later[v] = rows[v] & remaining
    upper = max(r.bit_count() for r in later) + 1
    try:
        for v in order:
            cand = later[v]
            if cand.bit_count() + 1 <= best[1]:
                continue
            expand(1 << v, 1, cand)
            if best[1] == upper:
                break
    except BudgetExceeded:
        return SolveResult(best[1], upper, best[0], bud.nodes - nodes0, time.perf_counter() - start)
    return SolveResult(best[1], best[1], best[0], bud.nodes - nodes0, time.perf_counter() - start)


def independence_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    return clique_number(complement(g), budget)


# ----------------------------------------------------------------- coloring

def dsatur_greedy(g: Graph) -> Coloring:
    n = g.n
    rows = g.rows
    colors = [-1] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    degree = [r.bit_count() for r in rows]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] < 0), key=lambda u: (len(sat[u]), degree[u], -u))
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        for u in iter_members(rows[v]):
            sat[u].add(c)
    return Coloring(tuple(colors))


def chromatic_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """DSATUR branch and bound seeded with a maximum clique.

    The clique is precoloured ``0..w-1``; afterwards a vertex may open colour
    ``k`` only when colours ``0..k-1`` are already in use.
    """
    start = time.perf_counter()
    bud = _budget(budget)
    nodes0 = bud.nodes
    n = g.n
    if n == 0:
        return SolveResult(0, 0, Coloring(()), 0, 0.0)
    rows = g.rows

    greedy = dsatur_greedy(g)
    best = [greedy.color_count, greedy.assignment]
    cres = clique_number(g, bud)
    lower = cres.lower
    if not cres.exact or best[0] == lower:
        return SolveResult(lower, best[0], Coloring(best[1]), bud.nodes - nodes0, time.perf_counter() - start)

    colors = [-1] * n
    class_masks: list[int] = []
    for c, v in enumerate(members(cres.witness)):
        colors[v] = c
        class_masks.append(1 << v)
    uncolored = g.full & ~cres.witness

    def dfs(uncolored: int, k: int) -> bool:
        bud.tick()
        if not uncolored:
            best[0], best[1] = k, tuple(colors)
            return k == lower
        pick, pick_key = -1, None
        for u in iter_members(uncolored):
            nu = rows[u]
            s = 0
            for m in class_masks:
                if m & nu:
                    s += 1
            key = (s, (nu & uncolored).bit_count())
            if pick_key is None or key > pick_key:
                pick, pick_key = u, key
        v = pick
        nv = rows[v]
        bit = 1 << v
        rest = uncolored & ~bit
        for c in range(k):
            if not class_masks[c] & nv:
                colors[v] = c
                class_masks[c] |= bit
                done = dfs(rest, k)
                class_masks[c] &= ~bit
                colors[v] = -1
                if done:
                    return True
                if k >= best[0]:
                    return False
        if k + 1 < best[0]:
            colors[v] = k
            class_masks.append(bit)
            done = dfs(rest, k + 1)
            class_masks.pop()
            colors[v] = -1
            if done:
                return True
        return False

    try:
        dfs(uncolored, len(class_masks))
    except BudgetExceeded:
        return SolveResult(lower, best[0], Coloring(best[1]), bud.nodes - nodes0, time.perf_counter() - start)
    return SolveResult(best[0], best[0], Coloring(best[1]), bud.nodes - nodes0, time.perf_counter() - start)


def enumerate_proper_colorings(
    g: Graph,
    k: int,
    visitor: Callable[[tuple[int, ...]], object] | None = None,
    canonical: bool = False,
    budget: Budget | None = None,
) -> int:
    """Count (and visit) proper colourings of ``g`` with colours ``0..k-1``.

    With ``canonical=True`` only one representative per colour permutation
    class is produced: scanning vertices ``0, 1, ...`` colours first appear in
    increasing order. Vertices are assigned in index order.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    n = g.n
    rows = g.rows
    colors = [-1] * n
    class_masks = [0] * k
    count = 0
    bud = budget

    def rec(v: int, used: int) -> None:
        nonlocal count
        if bud is not None:
            bud.tick()
        if v == n:
            count += 1
            if visitor is not None:
                visitor(tuple(colors))
            return
        nv = rows[v]
        limit = min(k, used + 1) if canonical else k
        for c in range(limit):
            if not class_masks[c] & nv:
                colors[v] = c
                class_masks[c] |= 1 << v
                rec(v + 1, max(used, c + 1))
                class_masks[c] &= ~(1 << v)
        colors[v] = -1

    rec(0, 0)
    return count


# ------------------------------------------------------------- cochromatic

def cochromatic_number(g: Graph, budget: Budget | None = None) -> SolveResult:
    """Minimum partition into cliques and independent sets.

    Branch and bound over set partitions: the next vertex (the one that fits
    the fewest existing classes) either joins a class it keeps homogeneous or
    opens a new one. A class's kind is fixed when it receives its second
    vertex. The bound counts open classes plus the classes still needed for
    vertices the open classes cannot absorb, where a clique class holds at
    most ``omega`` vertices, an independent class at most ``alpha``.
    The incumbent starts at ``min(chi(g), chi(complement(g)))``.
    """
    start = time.perf_counter()
    bud = _budget(budget)
    nodes0 = bud.nodes
    n = g.n
    if n == 0:
        return SolveResult(0, 0, HomogeneousPartition(()), 0, 0.0)
    rows = g.rows
    full = g.full
    co = complement(g)

    def elapsed_result(lower, upper, witness):
        return SolveResult(lower, upper, witness, bud.nodes - nodes0, time.perf_counter() - start)

    chi = chromatic_number(g, bud)
    chi_bar = chromatic_number(co, bud)
    if chi.upper <= chi_bar.upper:
        incumbent = HomogeneousPartition(tuple((m, INDEPENDENT) for m in chi.witness.classes()))
    else:
        incumbent = HomogeneousPartition(tuple((m, CLIQUE) for m in chi_bar.witness.classes()))
    omega_res = clique_number(g, bud)
    alpha_res = clique_number(co, bud)
    omega, alpha = omega_res.upper, alpha_res.upper
    cap = max(omega, alpha)
    root_lower = -(-n // cap)
    best = [len(incumbent), incumbent]
    if not (chi.exact and chi_bar.exact and omega_res.exact and alpha_res.exact):
        return elapsed_result(root_lower, best[0], best[1])
    if best[0] <= root_lower:
        return elapsed_result(best[0], best[0], best[1])

    # class record: [mask, kind (None for singleton), joinable mask, size]
    classes: list[list] = []

    def bound(unassigned: int) -> int:
        remaining = unassigned.bit_count()
        absorb = 0
        covered = 0
        for mask, kind, join, size in classes:
            room = (omega if kind == CLIQUE else alpha if kind == INDEPENDENT else cap) - size
            j = join & unassigned
            covered |= j
            absorb += min(room, j.bit_count())
        extra = remaining - absorb
        need = -(-extra // cap) if extra > 0 else 0
        if need == 0 and unassigned & ~covered:
            need = 1
        return len(classes) + need

    def dfs(unassigned: int) -> bool:
        bud.tick()
        if not unassigned:
            best[0] = len(classes)
            best[1] = HomogeneousPartition(tuple(
                (mask, kind if kind is not None else INDEPENDENT) for mask, kind, _, _ in classes))
            return best[0] <= root_lower
        if bound(unassigned) >= best[0]:
            return False
        pick, pick_opts = -1, None
        for u in iter_members(unassigned):
            bit = 1 << u
            opts = 0
            for rec in classes:
                if rec[2] & bit:
                    opts += 1
            if pick_opts is None or opts < pick_opts:
                pick, pick_opts = u, opts
                if opts == 0:
                    break
        u = pick
        bit = 1 << u
        nu = rows[u]
        rest = unassigned & ~bit
        # larger classes first so good partitions turn up early
        order = sorted((i for i, rec in enumerate(classes) if rec[2] & bit), key=lambda i: -classes[i][3])
        for i in order:
            rec = classes[i]
            saved = rec[:]
            if rec[1] is None:
                w = lowest(rec[0])
                if (nu >> w) & 1:
                    rec[1] = CLIQUE
                    rec[2] = rows[w] & nu
                else:
                    rec[1] = INDEPENDENT
                    rec[2] = full & ~rows[w] & ~nu & ~rec[0] & ~bit
            elif rec[1] == CLIQUE:
                rec[2] &= nu
            else:
                rec[2] &= ~nu & ~bit
            rec[0] |= bit
            rec[3] += 1
            done = dfs(rest)
            classes[i] = saved
            if done:
                return True
        if len(classes) + 1 < best[0]:
            classes.append([bit, None, full & ~bit, 1])
            done = dfs(rest)
            classes.pop()
            if done:
                return True
        return False

    try:
        dfs(full)
    except BudgetExceeded:
        return elapsed_result(root_lower, best[0], best[1])
    return elapsed_result(best[0], best[0], best[1])
