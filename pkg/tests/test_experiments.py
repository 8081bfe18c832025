import math

import pytest
from hypothesis import given, strategies as st

from cochromatic.experiments import (
    CSV_COLUMNS, TrialRecord, records_csv, records_json, run_trial, run_trials, summarize, theoretical_band,
    trial_seed,
)
from cochromatic.graph import complement, sample_gnp
from cochromatic.solvers import cochromatic_number


def rec(excess, flagged=False, n=10):
    return TrialRecord(n, 0, 3 + excess, 3, 4, None if flagged else excess, flagged)


def test_single_vertex_trials():
    for r in run_trials(1, 5, master_seed=7):
        assert (r.chi, r.zeta, r.excess) == (1, 1, 0)


def test_records_satisfy_inequalities():
    for r in run_trials(15, 50, master_seed=3):
        assert not r.flagged
        assert r.zeta <= min(r.chi, r.chi_complement)
        assert r.excess == r.chi - r.zeta >= 0


def test_zeta_complement_symmetric_on_samples():
    for i in range(10):
        g = sample_gnp(14, "1/2", trial_seed(11, i))
        assert cochromatic_number(g).value == cochromatic_number(complement(g)).value


def test_trial_seed_individually_reproducible():
    records = run_trials(12, 4, master_seed=5)
    again = run_trial(12, trial_seed(5, 2))
    assert again.row() == records[2].row()
    assert len({trial_seed(5, i) for i in range(100)}) == 100


def test_theoretical_band():
    assert theoretical_band(2) == (1.0, 1.0)
    assert theoretical_band(1024) == (51.2, 51.2)
    with pytest.raises(ValueError):
        theoretical_band(1)


def test_summarize_examples():
    s = summarize([rec(0)])
    assert s.mean_excess == 0 and s.tails[1] == 0
    s = summarize([rec(e) for e in (0, 1, 1, 2)], thresholds=(1, 2))
    assert s.mean_excess == 1.0 and s.tails == {1: 0.75, 2: 0.25}
    s = summarize([rec(1), rec(0, flagged=True), rec(3)])
    assert s.flagged == 1 and s.mean_excess == 2.0 and s.trials == 3
    with pytest.raises(ValueError):
        summarize([])
    with pytest.raises(ValueError):
        summarize([rec(0, n=5), rec(0, n=6)])


@given(st.lists(st.integers(0, 6), min_size=1, max_size=30), st.lists(st.integers(0, 8), min_size=1, max_size=6))
def test_tails_weakly_decreasing(excesses, thresholds):
    s = summarize([rec(e) for e in excesses], thresholds)
    ts = sorted(s.tails)
    assert all(s.tails[a] >= s.tails[b] for a, b in zip(ts, ts[1:]))


def test_csv_and_json_are_reproducible():
    a = run_trials(14, 8, master_seed=99)
    b = run_trials(14, 8, master_seed=99)
    assert records_csv(a) == records_csv(b)
    assert records_json(a, summarize(a)) == records_json(b, summarize(b))
    assert records_csv(a).splitlines()[0] == ",".join(CSV_COLUMNS)


def test_budget_flags_trials():
    records = run_trials(30, 3, master_seed=1, budget_ms=0.001)
    assert all(r.flagged and r.excess is None for r in records)
    assert summarize(records).flagged == 3


def test_soft_cap():
    with pytest.raises(ValueError, match="soft cap"):
        run_trials(41, 1, master_seed=0)


def test_parallel_matches_serial():
    assert [r.row() for r in run_trials(13, 6, 4, workers=2)] == [r.row() for r in run_trials(13, 6, 4)]


def test_pinned_n20_summary():
    records = run_trials(20, 100, master_seed=20241014)
    s = summarize(records, (1, 2, 3))
    assert s.flagged == 0
    assert (s.mean_excess, s.min_excess, s.max_excess) == (0.68, 0, 2)
    assert s.tails == {1: 0.65, 2: 0.03, 3: 0.0}
    assert math.isclose(s.mean_chi, 5.66) and math.isclose(s.mean_zeta, 4.98)
