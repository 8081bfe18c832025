"""Monte Carlo measurements of chi(G) - zeta(G) on G(n, 1/2).

Trial ``i`` under master seed ``s`` samples its graph with seed
``SeedSequence(entropy=s, spawn_key=(i,)).generate_state(1, uint64)[0]``, so
any single trial can be re-run on its own. Nothing here makes a pass/fail
claim about asymptotics; the summary only reports what was observed.
"""
from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import complement, sample_gnp
from .solvers import Budget, chromatic_number, cochromatic_number

SOFT_CAP_N = 40
CSV_COLUMNS = ("n", "seed", "chi", "zeta", "chi_complement", "excess", "flagged")


def trial_seed(master_seed: int, index: int) -> int:
    ss = np.random.SeedSequence(entropy=master_seed, spawn_key=(index,))
    return int(ss.generate_state(1, dtype=np.uint64)[0])


@dataclass
class TrialRecord:
    n: int
    seed: int
    chi: int | None
    zeta: int | None
    chi_complement: int | None
    excess: int | None
    flagged: bool
    nodes: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def row(self) -> list:
        return [self.n, self.seed, self.chi, self.zeta, self.chi_complement, self.excess, int(self.flagged)]


def run_trial(n: int, seed: int, p: Fraction = Fraction(1, 2), budget_ms: float | None = None) -> TrialRecord:
    t0 = time.perf_counter()
    g = sample_gnp(n, p, seed)
    # one budget per solve
    mk = (lambda: Budget(time_ms=budget_ms)) if budget_ms else (lambda: None)
    chi = chromatic_number(g, mk())
    chi_c = chromatic_number(complement(g), mk())
    zeta = cochromatic_number(g, mk())
    nodes = {"chi": chi.nodes_explored, "chi_complement": chi_c.nodes_explored, "zeta": zeta.nodes_explored}
    flagged = not (chi.exact and chi_c.exact and zeta.exact)
    if flagged:
        return TrialRecord(n, seed, chi.value, zeta.value, chi_c.value, None, True, nodes,
                           time.perf_counter() - t0)
    return TrialRecord(n, seed, chi.value, zeta.value, chi_c.value, chi.value - zeta.value, False, nodes,
                       time.perf_counter() - t0)


def _run_trial_args(args):
    return run_trial(*args)


def run_trials(n: int, trials: int, master_seed: int, budget_ms: float | None = None,
               workers: int = 1) -> list[TrialRecord]:
    """Records in trial-index order. Past ``SOFT_CAP_N`` vertices a budget is required."""
    if n > SOFT_CAP_N and not budget_ms:
        raise ValueError(f"n={n} exceeds the exact-solver soft cap {SOFT_CAP_N}; pass a budget")
    args = [(n, trial_seed(master_seed, i), Fraction(1, 2), budget_ms) for i in range(trials)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_trial_args, args))
    return [_run_trial_args(a) for a in args]


def theoretical_band(n: int) -> tuple[float, float]:
    """Leading term ``n / (2 log2 n)`` of both ends of the known band for zeta and chi.

    The upper end carries an unspecified ``1 + o(1)`` factor, so both entries
    are the same number; it is a reference line, not a bound at small n.
    """
    if n < 2:
        raise ValueError("band needs n >= 2")
    c = n / (2 * math.log2(n))
    return c, c


@dataclass
class ExperimentSummary:
    n: int
    trials: int
    flagged: int
    mean_excess: float | None
    min_excess: int | None
    max_excess: int | None
    mean_chi: float | None
    mean_zeta: float | None
    tails: dict[int, float]
    band: tuple[float, float] | None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["tails"] = {str(k): v for k, v in self.tails.items()}
        d["band"] = list(self.band) if self.band else None
        return d


def summarize(records: Sequence[TrialRecord], thresholds: Sequence[int] = (1, 2, 3)) -> ExperimentSummary:
    if not records:
        raise ValueError("no records to summarise")
    ns = {r.n for r in records}
    if len(ns) != 1:
        raise ValueError(f"records mix vertex counts {sorted(ns)}")
    n = ns.pop()
    exact = [r for r in records if not r.flagged]
    flagged = len(records) - len(exact)
    tails = {}
    if exact:
        ex = [r.excess for r in exact]
        for t in sorted(thresholds):
            tails[t] = sum(1 for e in ex if e >= t) / len(ex)
        mean = sum(ex) / len(ex)
        stats = (mean, min(ex), max(ex), sum(r.chi for r in exact) / len(exact),
                 sum(r.zeta for r in exact) / len(exact))
    else:
        stats = (None,) * 5
    band = theoretical_band(n) if n >= 2 else None
    return ExperimentSummary(n, len(records), flagged, *stats, tails, band)


def records_csv(records: Sequence[TrialRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in records:
        w.writerow(["" if v is None else v for v in r.row()])
    return buf.getvalue()


def records_json(records: Sequence[TrialRecord], summary: ExperimentSummary | None = None,
                 timing: bool = False) -> str:
    """Machine-readable run output; wall times are left out unless ``timing`` so reruns are byte-identical."""
    rows = []
    for r in records:
        d = asdict(r)
        if not timing:
            d.pop("elapsed")
        rows.append(d)
    doc = {"schema": "cochromatic.experiment/1", "records": rows}
    if summary is not None:
        doc["summary"] = summary.to_dict()
    return json.dumps(doc, indent=2, sort_keys=True)
