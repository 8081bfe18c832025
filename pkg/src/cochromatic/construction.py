"""The 11-vertex gadget H and the family of graphs G built on top of it.

H is two 5-cycles joined completely, plus an apex ``v`` adjacent to one vertex
of each cycle. Labels are fixed: the first cycle is ``0..4``, the second
``5..9`` (each in cyclic order), the apex is ``10``, and the apex attaches to
``x1 = 0`` and ``x2 = 5``. Any other choice of attachment vertices gives an
isomorphic graph.

G adds, for every set X in a family of subsets of V(H), ``m_X >= 1`` new
pairwise non-adjacent vertices with neighbourhood exactly X. With the full
family (every X with ``omega(H[X]) <= 3``) G has clique number 4,
cochromatic number 4 and chromatic number 7; :func:`verify_theorem3` checks
this the way the argument goes, without running the exact cochromatic solver
on a graph with thousands of vertices.
"""
from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import (
    Graph,
    VertexSet,
    add_vertices,
    complement,
    cycle,
    induced_subgraph,
    iter_members,
    join,
    add_vertex,
    members,
    vset,
)
from .solvers import (
    CLIQUE,
    INDEPENDENT,
    Budget,
    BudgetExceeded,
    Coloring,
    HomogeneousPartition,
    chromatic_number,
    clique_number,
    cochromatic_number,
    enumerate_proper_colorings,
    independence_number,
    verify_coloring,
    verify_homogeneous_partition,
)

REPORT_SCHEMA = "cochromatic.verification/1"


@dataclass(frozen=True)
class GadgetH:
    graph: Graph
    c1: VertexSet
    c2: VertexSet
    x1: int
    x2: int
    v: int


def build_H() -> GadgetH:
    c5 = cycle(5)
    graph = add_vertex(join(c5, c5), vset([0, 5]))
    return GadgetH(graph, vset(range(5)), vset(range(5, 10)), 0, 5, 10)


def _require_gadget(h) -> None:
    if not isinstance(h, GadgetH):
        raise TypeError(f"expected a GadgetH, got {type(h).__name__}")


# ------------------------------------------------------------------ reports

@dataclass
class Check:
    name: str
    passed: bool
    elapsed: float = 0.0
    detail: dict = field(default_factory=dict)
    status: str = ""

    def __post_init__(self):
        if not self.status:
            self.status = "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "passed": self.passed,
            "values": self.values,
            "checks": [
                {"name": c.name, "passed": c.passed, "status": c.status,
                 "elapsed": c.elapsed, "detail": c.detail}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        if data.get("schema") != REPORT_SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        checks = [Check(c["name"], c["passed"], c["elapsed"], c["detail"], c["status"]) for c in data["checks"]]
        return cls(checks, data["values"])

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"[{c.status.upper():>4}] {c.name} ({c.elapsed:.3f}s)")
        if self.values:
            lines.append("values: " + ", ".join(f"{k}={v}" for k, v in sorted(self.values.items())))
        lines.append("OVERALL: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        check = fn(*args, **kwargs)
        check.elapsed = time.perf_counter() - t0
        return check
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# -------------------------------------------------------- lemma properties

def _cycle_order(g: Graph, mask: VertexSet, start: int) -> list[int]:
    """Vertices of the induced cycle on ``mask`` walked from ``start`` towards its lower-indexed neighbour."""
    order = [start]
    prev, cur = None, start
    while True:
        nbrs = [u for u in members(g.rows[cur] & mask) if u != prev]
        if prev is not None and start in nbrs:
            break
        nxt = nbrs[0]
        if nxt == start or len(order) > mask.bit_count():
            break
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def lemma_clique_partition(h: GadgetH) -> HomogeneousPartition:
    """``{v, x1, x2}`` plus two 4-cliques, each pairing a matching edge of ``C1 - x1`` with one of ``C2 - x2``."""
    _require_gadget(h)
    p1 = _cycle_order(h.graph, h.c1, h.x1)[1:]
    p2 = _cycle_order(h.graph, h.c2, h.x2)[1:]
    classes = [(vset([h.v, h.x1, h.x2]), CLIQUE)]
    for i in (0, 2):
        classes.append((vset(p1[i:i + 2] + p2[i:i + 2]), CLIQUE))
    return HomogeneousPartition(tuple(classes))


def clique_cover_number(g: Graph, budget: Budget | None = None):
    """Fewest cliques covering ``V(g)``, via exact colouring of the complement."""
    return chromatic_number(complement(g), budget)


@_timed
def verify_lemma_property1(h: GadgetH) -> Check:
    _require_gadget(h)
    res = clique_number(h.graph)
    return Check("lemma.property1.omega_lt_5", res.exact and res.value <= 4,
                 detail={"omega": res.value, "max_clique": members(res.witness)})


@_timed
def verify_lemma_property2(h: GadgetH) -> Check:
    _require_gadget(h)
    part = lemma_clique_partition(h)
    explicit = verify_homogeneous_partition(h.graph, part)
    cover = clique_cover_number(h.graph)
    cover_classes = cover.witness.classes()
    independent = HomogeneousPartition(tuple((m, CLIQUE) for m in cover_classes))
    search_ok = cover.exact and cover.value <= 3 and bool(verify_homogeneous_partition(h.graph, independent))
    detail = {
        "explicit_classes": [members(m) for m, _ in part.classes],
        "explicit_sizes": sorted(part.sizes()),
        "explicit_ok": explicit.ok,
        "explicit_violation": explicit.violation,
        "clique_cover_number": cover.value,
        "search_classes": [members(m) for m in cover_classes],
    }
    return Check("lemma.property2.three_clique_partition", explicit.ok and search_ok, detail=detail)


class RainbowFinder:
    """Looks for a colour-complete set X inside H for a given colouring.

    Without a family, X ranges over 6-vertex sets taking each colour exactly
    once with ``omega(H[X]) <= 3``, trying sets shaped like
    ``{a, b, v} + one vertex per colour of the other pentagon`` first. With a
    family, X must be a member whose colours cover every colour.
    """

    def __init__(self, h: GadgetH, colors: int = 6, family: Sequence[VertexSet] | None = None):
        self.h = h
        self.colors = colors
        self.family = None if family is None else tuple(family)
        self._omega_cache: dict[int, int] = {}

    def omega(self, mask: VertexSet) -> int:
        w = self._omega_cache.get(mask)
        if w is None:
            w = clique_number(induced_subgraph(self.h.graph, mask)).value
            self._omega_cache[mask] = w
        return w

    def find(self, coloring: Sequence[int]) -> tuple[VertexSet, str] | None:
        want = (1 << self.colors) - 1
        if self.family is not None:
            for x in self.family:
                got = 0
                for u in iter_members(x):
                    got |= 1 << coloring[u]
                if got == want:
                    return x, "family"
            return None
        shaped = self._proof_shaped(coloring)
        if shaped is not None:
            return shaped, "proof-shaped"
        by_color: list[list[int]] = [[] for _ in range(self.colors)]
        for u, c in enumerate(coloring):
            by_color[c].append(u)
        if any(not b for b in by_color):
            return None
        for pick in itertools.product(*by_color):
            x = vset(pick)
            if self.omega(x) <= 3:
                return x, "general"
        return None

    def _proof_shaped(self, coloring: Sequence[int]) -> VertexSet | None:
        h = self.h
        g = h.graph
        cv = coloring[h.v]
        for home, other in ((h.c1, h.c2), (h.c2, h.c1)):
            home_colors = {coloring[u] for u in iter_members(home)}
            if cv not in home_colors or len(home_colors) != 3:
                continue
            need = home_colors - {cv}
            pairs = [(a, b) for a, b in itertools.combinations(members(home), 2)
                     if not g.has_edge(a, b) and {coloring[a], coloring[b]} == need]
            other_by_color: dict[int, list[int]] = {}
            for u in iter_members(other):
                other_by_color.setdefault(coloring[u], []).append(u)
            if len(other_by_color) + 3 != self.colors:
                continue
            for a, b in pairs:
                for pick in itertools.product(*(other_by_color[c] for c in sorted(other_by_color))):
                    x = vset((a, b, h.v) + pick)
                    if self.omega(x) <= 3:
                        return x
        return None


@_timed
def verify_lemma_property3(h: GadgetH, colors: int = 6, family: Sequence[VertexSet] | None = None,
                           node_limit: int | None = None, keep_witnesses: bool = True) -> Check:
    """Every canonical proper ``colors``-colouring of H admits a colour-complete X.

    Colourings are enumerated up to colour permutation (first appearances in
    increasing order), which is enough because both the colouring property and
    the target condition are invariant under renaming colours.
    """
    _require_gadget(h)
    finder = RainbowFinder(h, colors, family)
    witnesses = []
    failures = []
    shapes: dict[str, int] = {}

    def visit(c):
        hit = finder.find(c)
        if hit is None:
            failures.append(list(c))
            return
        x, shape = hit
        shapes[shape] = shapes.get(shape, 0) + 1
        if keep_witnesses:
            witnesses.append([list(c), members(x)])

    budget = Budget(node_limit=node_limit) if node_limit is not None else None
    name = "lemma.property3.rainbow_sets"
    try:
        count = enumerate_proper_colorings(h.graph, colors, visit, canonical=True, budget=budget)
    except BudgetExceeded:
        return Check(name, False, status="budget",
                     detail={"colors": colors, "colorings": len(witnesses) + len(failures),
                             "failures": len(failures), "reason": "enumeration node limit exceeded"})
    detail = {
        "colors": colors,
        "colorings": count,
        "failures": len(failures),
        "first_failure": failures[0] if failures else None,
        "witness_shapes": shapes,
        "restricted_family": family is not None,
    }
    if keep_witnesses:
        detail["witnesses"] = witnesses
    return Check(name, not failures, detail=detail)


@_timed
def verify_observation2() -> Check:
    """Each proper 3-colouring of C5 and each colour i leave two non-adjacent vertices coloured with the other two."""
    c5 = cycle(5)
    results = []

    def visit(c):
        results.append(tuple(c))

    enumerate_proper_colorings(c5, 3, visit)
    cases = 0
    failures = []
    example = None
    for c in results:
        for i in range(3):
            need = {0, 1, 2} - {i}
            pair = next(((a, b) for a, b in itertools.combinations(range(5), 2)
                         if not c5.has_edge(a, b) and {c[a], c[b]} == need), None)
            if pair is None:
                failures.append([list(c), i])
            else:
                cases += 1
                if c == (0, 1, 2, 1, 2) and i == 0:
                    example = list(pair)
    detail = {"colorings": len(results), "cases_ok": cases, "failures": failures,
              "example_coloring": [0, 1, 2, 1, 2], "example_target": 0, "example_pair": example}
    return Check("observation2.c5_pairs", not failures and len(results) == 30, detail=detail)


# --------------------------------------------------------------- family, G

def enumerate_X_family(h: GadgetH) -> tuple[VertexSet, ...]:
    """All subsets X of V(H) with ``omega(H[X]) <= 3``, sorted by bitmask value (so the empty set is first)."""
    _require_gadget(h)
    g = h.graph
    return tuple(x for x in range(1 << g.n) if clique_number(induced_subgraph(g, x)).value <= 3)


@dataclass(frozen=True)
class ConstructionSpec:
    """H, the family of neighbourhoods X, and how many new vertices get each X.

    ``full`` records that ``family`` is the complete collection of subsets with
    ``omega(H[X]) <= 3``; restricted families are allowed for small
    cross-checks.
    """

    h: GadgetH
    family: tuple[VertexSet, ...]
    multiplicities: tuple[int, ...]
    full: bool = True

    def __post_init__(self):
        if len(self.family) != len(self.multiplicities):
            raise ValueError("family and multiplicities differ in length")
        if any(m < 1 for m in self.multiplicities):
            raise ValueError("every multiplicity must be at least 1")
        if len(set(self.family)) != len(self.family):
            raise ValueError("family has repeated members")
        g = self.h.graph
        for x in self.family:
            if x >> g.n:
                raise ValueError(f"family member {members(x)} leaves V(H)")
            if clique_number(induced_subgraph(g, x)).value > 3:
                raise ValueError(f"family member {members(x)} contains a K4")

    @classmethod
    def complete_family(cls, h: GadgetH | None = None, multiplicities: Sequence[int] | None = None) -> ConstructionSpec:
        h = h or build_H()
        family = enumerate_X_family(h)
        mult = tuple(multiplicities) if multiplicities is not None else (1,) * len(family)
        return cls(h, family, mult, full=True)

    @classmethod
    def restricted(cls, h: GadgetH, family: Iterable[VertexSet],
                   multiplicities: Sequence[int] | None = None) -> ConstructionSpec:
        fam = tuple(sorted(set(family)))
        mult = tuple(multiplicities) if multiplicities is not None else (1,) * len(fam)
        return cls(h, fam, mult, full=False)

    def neighbourhoods(self) -> list[VertexSet]:
        """Neighbourhood of each added vertex, in label order ``11, 12, ...``."""
        return [x for x, m in zip(self.family, self.multiplicities) for _ in range(m)]

    @property
    def order(self) -> int:
        return self.h.graph.n + sum(self.multiplicities)


def build_G(spec: ConstructionSpec) -> Graph:
    return add_vertices(spec.h.graph, spec.neighbourhoods())


def singletons(h: GadgetH) -> list[VertexSet]:
    return [1 << u for u in range(h.graph.n)]


# ---------------------------------------------------------------- theorem

def verify_theorem3(g: Graph, spec: ConstructionSpec, property3: Check | None = None,
                    exact_cap: int = 40) -> VerificationReport:
    """Check ``omega(G) <= 4``, ``zeta(G) = 4`` and ``chi(G) = 7`` for ``G = build_G(spec)``.

    Sub-checks ``a``..``e`` follow the argument: (a) exact clique number;
    (b) the 3 cliques of H plus the independent set of added vertices;
    (c) no cover by 3 homogeneous sets, by counting and the ``V_{w}``
    obstruction; (d) an optimal colouring of H plus one colour; (e) the
    property-3 certificate. For a restricted family (e) is replaced by an
    exact chromatic solve on G, and the exact cochromatic solver
    cross-checks (b)/(c), provided ``G`` has at most ``exact_cap`` vertices.
    """
    _require_gadget(spec.h)
    report = VerificationReport()
    h = spec.h
    hg = h.graph
    nh = hg.n
    nbhds = spec.neighbourhoods()
    added = ((1 << g.n) - 1) & ~hg.full

    t0 = time.perf_counter()
    expected = build_G(spec)
    mismatched = [u for u in range(g.n) if u >= expected.n or g.rows[u] != expected.rows[u]]
    if g.n != expected.n:
        mismatched = mismatched or [min(g.n, expected.n)]
    report.checks.append(Check("construction", not mismatched and g.n == expected.n,
                               time.perf_counter() - t0,
                               {"order": g.n, "expected_order": expected.n,
                                "first_mismatch": mismatched[0] if mismatched else None}))
    if mismatched or g.n != expected.n:
        return report

    # (a)
    t0 = time.perf_counter()
    om = clique_number(g)
    omega_ok = om.exact and om.value <= 4
    report.checks.append(Check("a.omega_le_4", omega_ok, time.perf_counter() - t0,
                               {"omega": om.value, "max_clique": members(om.witness)}))
    report.values["omega"] = om.value

    # (b)
    t0 = time.perf_counter()
    h_part = lemma_clique_partition(h)
    full_part = HomogeneousPartition(h_part.classes + ((added, INDEPENDENT),))
    vb = verify_homogeneous_partition(g, full_part)
    report.checks.append(Check("b.zeta_le_4", vb.ok and len(full_part) == 4, time.perf_counter() - t0,
                               {"classes": [members(m) if m < (1 << nh) else f"{m.bit_count()} added vertices"
                                            for m, _ in full_part.classes],
                                "violation": vb.violation}))

    # (c)
    t0 = time.perf_counter()
    h_cover_ok = bool(verify_homogeneous_partition(hg, h_part)) and len(h_part) == 3
    alpha_h = independence_number(hg).value
    clique_max = om.value if om.exact else None
    order_ok = g.n > 12
    by_singleton = {}
    for idx, x in enumerate(nbhds):
        if x.bit_count() == 1:
            by_singleton.setdefault(x.bit_length() - 1, nh + idx)
    missing = [w for w in range(nh) if w not in by_singleton or not g.has_edge(w, by_singleton[w])]
    # cases by number of independent classes among three
    # covers by three homogeneous sets, split by how many of them are independent;
    # an independent set holds at most one vertex of each clique of h_part
    ind_cap = len(h_part)
    counting = {}
    if clique_max is not None:
        counting = {
            "no_independent": 3 * clique_max < g.n,
            "two_or_three_independent": 2 * ind_cap + clique_max < nh,
            # a clique through an added vertex has at most clique_max - 1 vertices in H
            "one_independent_cliques_inside_H": ind_cap + clique_max + (clique_max - 1) < nh,
            "one_independent_meets_H": nh - 2 * clique_max >= 1,
        }
    c_ok = (h_cover_ok and alpha_h is not None and alpha_h <= 3 and clique_max is not None
            and clique_max <= 4 and order_ok and bool(counting) and all(counting.values()) and not missing)
    report.checks.append(Check("c.zeta_ge_4", c_ok, time.perf_counter() - t0,
                               {"independent_meets_H_at_most_3": h_cover_ok, "alpha_H": alpha_h,
                                "clique_max": clique_max, "order": g.n, "order_gt_12": order_ok,
                                "counting": counting, "obstruction_missing_for": missing,
                                "obstruction_witnesses": {str(w): u for w, u in sorted(by_singleton.items())}}))
    report.values["zeta_upper"] = 4 if report["b.zeta_le_4"].passed else None
    report.values["zeta_lower"] = 4 if c_ok else None

    # (d)
    t0 = time.perf_counter()
    chi_h = chromatic_number(hg)
    k = chi_h.upper
    coloring = Coloring(chi_h.witness.assignment + (k,) * (g.n - nh))
    vd = verify_coloring(g, coloring)
    report.checks.append(Check("d.chi_le_7", vd.ok and k + 1 <= 7, time.perf_counter() - t0,
                               {"chi_H": chi_h.value, "colors_used": coloring.color_count,
                                "violation": vd.violation}))
    report.values["chi_H"] = chi_h.value
    report.values["chi_upper"] = k + 1 if vd.ok else None

    # (e)
    t0 = time.perf_counter()
    if spec.full:
        if property3 is None:
            property3 = verify_lemma_property3(h)
        family_ok = tuple(spec.family) == enumerate_X_family(h)
        fam_index = set(spec.family)
        witnesses = property3.detail.get("witnesses") or []
        bad = [w for _, w in witnesses if vset(w) not in fam_index]
        e_ok = (property3.passed and property3.detail.get("colors") == 6 and family_ok
                and all(m >= 1 for m in spec.multiplicities) and not bad)
        report.checks.append(Check("e.chi_ge_7", e_ok, time.perf_counter() - t0,
                                   {"route": "property3-certificate",
                                    "colorings_certified": property3.detail.get("colorings"),
                                    "certificate_failures": property3.detail.get("failures"),
                                    "family_is_full": family_ok, "family_size": len(spec.family),
                                    "witnesses_outside_family": len(bad)}))
        report.values["chi_lower"] = 7 if e_ok else None
    else:
        reduction = verify_lemma_property3(h, 6, spec.family, keep_witnesses=False)
        chi_by_reduction = 7 if reduction.passed else 6
        if g.n <= exact_cap:
            direct = chromatic_number(g)
            chi_direct = direct.value
        else:
            chi_direct = None
        e_ok = chi_direct is not None and chi_direct >= 7
        report.checks.append(Check("e.chi_ge_7", e_ok, time.perf_counter() - t0,
                                   {"route": "direct-exact", "chi_exact": chi_direct,
                                    "chi_by_reduction": chi_by_reduction,
                                    "reduction_first_failure": reduction.detail.get("first_failure")}))
        report.values["chi_exact"] = chi_direct
        report.values["chi_by_reduction"] = chi_by_reduction
        report.values["chi_lower"] = chi_direct
        if g.n <= exact_cap:
            t0 = time.perf_counter()
            z = cochromatic_number(g)
            structural = 4 if (report["b.zeta_le_4"].passed and c_ok) else None
            report.checks.append(Check("zeta_exact_crosscheck", z.exact and z.value == structural,
                                       time.perf_counter() - t0,
                                       {"zeta_exact": z.value, "zeta_structural": structural}))
            report.values["zeta_exact"] = z.value
    return report
