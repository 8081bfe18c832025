"""Finite-search machinery for f(n), the worst gap chi - zeta under a clique bound.

``peel_chromatic_bound`` and ``capital_N`` take the Ramsey number R(n,n) and
g(n) (the largest chromatic number of a graph on fewer than R(n,n) vertices
with clique number below n) as trusted inputs; neither is known for n >= 5.
"""
from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .graph import Graph, induced_subgraph, members
from .io import FormatError, parse_graph6, write_graph6
from .solvers import Budget, chromatic_number, clique_number, cochromatic_number, independence_number

log = logging.getLogger(__name__)

SEARCH_SCHEMA = "cochromatic.search/1"


class ParameterError(ValueError):
    """A trusted parameter (such as a claimed Ramsey bound) is contradicted by a concrete graph."""


@dataclass(frozen=True)
class RamseyParameters:
    n: int
    R: int
    g: int
    f: Optional[int] = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"clique bound n must exceed 2, got {self.n}")
        if self.R < self.n:
            raise ValueError(f"R={self.R} is below n={self.n}")
        if self.g < 1:
            raise ValueError(f"g must be positive, got {self.g}")
        if self.f is not None and self.f < self.n - 2:
            raise ValueError(f"f={self.f} violates f >= n - 2 = {self.n - 2}")


@dataclass
class PeelResult:
    bound: int
    rounds: int
    predicted_rounds: int
    peeled: list[list[int]]
    remaining: int


def peel_chromatic_bound(g: Graph, params: RamseyParameters) -> PeelResult:
    """``ceil((|V| - R + 1) / n) + g``, together with the peel that proves it.

    While at least R vertices remain, an independent set of size n is removed
    (the lowest-indexed vertices of a maximum independent set). Failing to
    find one means R is not a valid Ramsey bound for this input.
    """
    w = clique_number(g).value
    if w >= params.n:
        raise ValueError(f"graph has clique number {w}, need < {params.n}")
    n, R = params.n, params.R
    if g.n < R:
        return PeelResult(params.g, 0, 0, [], g.n)
    predicted = -(-(g.n - R + 1) // n)
    labels = list(range(g.n))
    current = g
    peeled = []
    while current.n >= R:
        res = independence_number(current)
        if res.value < n:
            raise ParameterError(
                f"{current.n} vertices remain with independence number {res.value} < {n}; "
                f"R={R} is not a valid bound for R({n},{n}) on this graph")
        take = members(res.witness)[:n]
        peeled.append([labels[u] for u in take])
        keep = current.full
        for u in take:
            keep &= ~(1 << u)
        labels = [labels[u] for u in members(keep)]
        current = induced_subgraph(current, keep)
    if len(peeled) != predicted:
        raise AssertionError(f"peel took {len(peeled)} rounds, formula predicts {predicted}")
    return PeelResult(predicted + params.g, len(peeled), predicted, peeled, current.n)


def capital_N(params: RamseyParameters) -> int:
    """``max(n(n-1)(g - (R-1)/n - f), R - 1)``, evaluated exactly."""
    if params.f is None:
        raise ValueError("capital_N needs the candidate bound f")
    n, R, g, f = params.n, params.R, params.g, params.f
    first = n * (n - 1) * (g - Fraction(R - 1, n) - f)
    # n(n-1)(g-f) - (n-1)(R-1) is always an integer
    assert first.denominator == 1
    return max(int(first), R - 1)


def known_f_lower_bound(n: int) -> int:
    """Lower bound on f(n): ``3(n-3)/2`` for odd n, ``(3n-10)/2`` for even n."""
    if n < 5:
        raise ValueError(f"bound stated for n >= 5, got {n}")
    return 3 * (n - 3) // 2 if n % 2 else (3 * n - 10) // 2


# ------------------------------------------------------------ batch search

@dataclass
class ViolationRecord:
    graph6: str
    chi: int
    zeta: int
    omega: int
    excess: int
    line: int = 0


@dataclass
class SearchReport:
    n: int
    f: int
    processed: int = 0
    skipped: int = 0
    excluded: int = 0
    decided: int = 0
    timeouts: list[int] = field(default_factory=list)
    malformed: list[tuple[int, str]] = field(default_factory=list)
    violations: list[ViolationRecord] = field(default_factory=list)
    max_excess: Optional[int] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["malformed"] = [list(m) for m in self.malformed]
        d["schema"] = SEARCH_SCHEMA
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> SearchReport:
        if data.get("schema") != SEARCH_SCHEMA:
            raise ValueError(f"unsupported report schema {data.get('schema')!r}")
        data = dict(data)
        del data["schema"]
        data["malformed"] = [tuple(m) for m in data["malformed"]]
        data["violations"] = [ViolationRecord(**v) for v in data["violations"]]
        return cls(**data)

    @classmethod
    def from_json(cls, text: str) -> SearchReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [
            f"n={self.n} f={self.f}",
            f"processed={self.processed} decided={self.decided} skipped(omega>={self.n})={self.skipped} "
            f"excluded(K_{self.n - 1})={self.excluded} timeouts={len(self.timeouts)} "
            f"malformed={len(self.malformed)} violations={len(self.violations)}",
            f"max certified excess chi-zeta: {self.max_excess}",
        ]
        for v in self.violations:
            lines.append(f"VIOLATION line {v.line}: {v.graph6} chi={v.chi} zeta={v.zeta} omega={v.omega}")
        return "\n".join(lines)


def _classify(task: tuple[int, bytes, int, int, Optional[float]]) -> tuple:
    lineno, g6, n, f, budget_ms = task
    try:
        g = parse_graph6(g6)
    except FormatError as exc:
        return ("malformed", lineno, str(exc))
    budget = Budget(time_ms=budget_ms) if budget_ms else None
    om = clique_number(g, budget)
    if om.lower >= n:
        return ("skipped", lineno)
    if not om.exact:
        return ("timeout", lineno)
    if f < n - 2 and g.n == n - 1 and om.value == n - 1:
        return ("excluded", lineno)
    chi = chromatic_number(g, budget)
    zeta = cochromatic_number(g, budget)
    exact = chi.exact and zeta.exact
    if chi.lower > zeta.upper + f:
        return ("violation", lineno, g6.decode(), chi.lower, zeta.upper, om.value, exact)
    if not exact:
        return ("timeout", lineno)
    return ("ok", lineno, chi.value - zeta.value)


def batch_check(lines: Iterable[bytes | str], n: int, f: int, budget_ms: float | None = None,
                workers: int = 1) -> SearchReport:
    """Hunt for graphs with clique number below ``n`` and ``chi > zeta + f``.

    A violation is only recorded when certified by bounds: the lower bound on
    chi exceeds the upper bound on zeta plus ``f``. The excluded graph
    ``K_{n-1}`` is set aside only when ``f < n - 2``; for ``f >= n - 2`` it
    satisfies the inequality anyway.
    """
    report = SearchReport(n=n, f=f)
    tasks = []
    for lineno, line in enumerate(lines, start=1):
        if isinstance(line, str):
            line = line.encode("ascii", errors="replace")
        line = line.strip()
        if not line:
            continue
        tasks.append((lineno, line, n, f, budget_ms))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_classify, tasks, chunksize=64))
    else:
        outcomes = [_classify(t) for t in tasks]
    for out in outcomes:
        kind, lineno = out[0], out[1]
        if kind == "malformed":
            report.malformed.append((lineno, out[2]))
            log.warning("line %d: %s", lineno, out[2])
            continue
        report.processed += 1
        if kind == "skipped":
            report.skipped += 1
        elif kind == "excluded":
            report.excluded += 1
        elif kind == "timeout":
            report.timeouts.append(lineno)
        elif kind == "violation":
            _, _, g6, chi, zeta, omega, exact = out
            report.violations.append(ViolationRecord(g6, chi, zeta, omega, chi - zeta, lineno))
            report.decided += 1
            report.max_excess = chi - zeta if report.max_excess is None else max(report.max_excess, chi - zeta)
        else:
            report.decided += 1
            report.max_excess = out[2] if report.max_excess is None else max(report.max_excess, out[2])
    return report


def recheck_violation(record: ViolationRecord, n: int, f: int) -> bool:
    """Re-solve a stored violation without any budget."""
    g = parse_graph6(record.graph6)
    om = clique_number(g).value
    chi = chromatic_number(g).value
    zeta = cochromatic_number(g).value
    return om < n and chi > zeta + f
