"""Acceptance gates for the whole package, one test per criterion.

Each criterion is a single test function, so a verbose run shows exactly one
pass/fail line per gate.  Stated runtime budgets are asserted where a
criterion carries one.
"""

import json
import time
from itertools import product

import numpy as np
import pytest

from successruns import checks_iid
from successruns.checks import vk_row
from successruns.cli import main
from successruns.fibk import fib_k, fib_k_dresden, fib_k_spickerman
from successruns.geometric import longest_run_pmf, vk_pmf, vk_pmf_closedform_k2
from successruns.inference import bootstrap_se, fit_iid, fit_markov
from successruns.models import IID, Markov, tv_distance
from successruns.oracle import (
    FirstRunWait,
    LongestRun,
    RthRunWait,
    RunCount,
    SeededStream,
    enumerate_exact,
    sample_waiting_times,
)
from successruns.rth_waiting import Scheme, trk_moments, trk_pgf, trk_pmf, trk_tail
from successruns.run_counts import counts_moments, counts_pmf

GRID_MODELS = [IID(p) for p in (0.2, 0.5, 0.8)] + [
    Markov.stationary_start(alpha, beta)
    for alpha, beta in product((0.3, 0.7), repeat=2)
]
GRID_HORIZONS = (6, 16)


def test_criterion_1_fibonacci_identity_under_one_second():
    start = time.perf_counter()
    worst = 0.0
    for k in range(2, 6):
        pm = vk_pmf(IID(0.5), k, vmax=40)
        for v in range(k, 41):
            lhs = 2.0**v * pm.p(v)
            rhs = float(fib_k(k, v - k + 1))
            worst = max(worst, abs(lhs - rhs))
    elapsed = time.perf_counter() - start
    assert worst < 1e-9, f"worst deviation {worst:.3e}"
    assert elapsed < 1.0, f"took {elapsed:.2f}s"


def test_criterion_2_enumeration_oracle_grid_under_two_minutes():
    start = time.perf_counter()
    worst = 0.0
    for model, n in product(GRID_MODELS, GRID_HORIZONS):
        for k in (1, 2, 3):
            worst = max(
                worst,
                tv_distance(
                    vk_pmf(model, k, vmax=n),
                    enumerate_exact(model, n, FirstRunWait(k)),
                ),
            )
            for scheme in Scheme:
                for r in (1, 2, 3):
                    worst = max(
                        worst,
                        tv_distance(
                            trk_pmf(model, k, r, scheme, n),
                            enumerate_exact(model, n, RthRunWait(k, r, scheme)),
                        ),
                    )
                worst = max(
                    worst,
                    tv_distance(
                        counts_pmf(model, n, k, scheme),
                        enumerate_exact(model, n, RunCount(k, scheme)),
                    ),
                )
        worst = max(
            worst,
            tv_distance(
                longest_run_pmf(model, n),
                enumerate_exact(model, n, LongestRun()),
            ),
        )
    elapsed = time.perf_counter() - start
    assert worst <= 1e-10, f"worst TV distance {worst:.3e}"
    assert elapsed < 120.0, f"took {elapsed:.1f}s"


def test_criterion_3_waiting_count_and_longest_run_dualities():
    worst = 0.0
    for model, n in product(GRID_MODELS, GRID_HORIZONS):
        for k in (1, 2, 3):
            for scheme in Scheme:
                counts = counts_pmf(model, n, k, scheme)
                for r in (1, 2, 3):
                    survival = trk_tail(model, k, r, scheme, n)[n]
                    below = float(np.sum(counts.probs[:r]))
                    worst = max(worst, abs(survival - below))
            vk = vk_pmf(model, k, vmax=n)
            arrived = float(np.sum(vk.probs))
            long_enough = float(np.sum(longest_run_pmf(model, n).probs[k:]))
            worst = max(worst, abs(arrived - long_enough))
    assert worst <= 1e-10, f"worst duality gap {worst:.3e}"


def test_criterion_4_closed_forms_match_recursions():
    worst_fib = 0.0
    for k in range(2, 9):
        for n in range(1, 61):
            exact = fib_k(k, n)
            for closed in (fib_k_dresden, fib_k_spickerman):
                rel = abs(closed(k, n) - exact) / max(1.0, float(exact))
                worst_fib = max(worst_fib, rel)
    assert worst_fib <= 1e-6, f"worst closed-form error {worst_fib:.3e}"

    worst_vk = 0.0
    for model in (IID(0.5), IID(0.3), Markov(0.45, 0.3, 0.6), Markov(0.62, 0.55, 0.35)):
        pm = vk_pmf(model, 2, vmax=200)
        for v in range(2, 201):
            worst_vk = max(worst_vk, abs(vk_pmf_closedform_k2(model, v) - pm.p(v)))
    assert worst_vk <= 1e-10, f"worst waiting-time error {worst_vk:.3e}"


def test_criterion_5_moment_formulas():
    fair = trk_moments(IID(0.5), 2, 1, Scheme.NON_OVERLAPPING)
    assert abs(fair.mean - 6.0) <= 1e-8
    worst = 0.0
    models = [IID(0.35), IID(0.5), Markov(0.45, 0.3, 0.6)]
    for model, k, r, scheme in product(models, (2, 3), (1, 2), Scheme):
        mom = trk_moments(model, k, r, scheme)
        coeffs = np.array(trk_pgf(model, k, r, scheme).series(3000))
        grid = np.arange(3001, dtype=float)
        worst = max(worst, abs(mom.mean - grid @ coeffs) / mom.mean)
        worst = max(
            worst, abs(mom.second_moment - (grid**2) @ coeffs) / mom.second_moment
        )
    for model, scheme in product(models, Scheme):
        mom = counts_moments(model, 14, 2, scheme)
        pm = counts_pmf(model, 14, 2, scheme)
        xs = np.arange(len(pm.probs), dtype=float)
        worst = max(worst, abs(mom.mean - xs @ pm.probs))
        worst = max(worst, abs(mom.second_moment - (xs**2) @ pm.probs))
    assert worst <= 1e-8, f"worst moment deviation {worst:.3e}"


def test_criterion_6_likelihood_recovery_under_five_minutes():
    start = time.perf_counter()
    sample = sample_waiting_times(IID(0.5), 2, 200, SeededStream(20260822))
    fit = fit_iid(sample, 2)
    assert fit.converged
    assert abs(fit.estimates["p"] - 0.5) <= 0.1
    se = bootstrap_se(sample, 2, "iid", 200, SeededStream(20260823))
    assert 0.01 <= se["p"] <= 0.06

    source = Markov.stationary_start(0.6, 0.5)
    chain_sample = sample_waiting_times(source, 2, 200, SeededStream(20260823))
    chain_fit = fit_markov(chain_sample, 2)
    assert chain_fit.converged
    assert abs(chain_fit.estimates["alpha"] - 0.6) <= 0.15
    assert abs(chain_fit.estimates["beta"] - 0.5) <= 0.15
    elapsed = time.perf_counter() - start
    assert elapsed < 300.0, f"took {elapsed:.1f}s"


def test_criterion_7_errata_ledger_discipline(capsys, tmp_path, monkeypatch):
    path = tmp_path / "ledger.ndjson"
    code = main(["check", "--ledger", str(path)])
    out = capsys.readouterr().out
    assert code == 0
    record = json.loads(out)
    assert record["payload"]["mismatches"] == []
    rows = [json.loads(line) for line in path.read_text().splitlines()]
    by_id = {row["formula_id"]: row for row in rows}
    assert by_id["iid-trk1-mean-gf"]["status"] == "ERRATUM"
    assert "iid-trk1-mean-gf=ERRATUM" in record["errata_flags"]

    def crooked(model, k, vmax):
        row = vk_row(model, k, vmax).copy()
        if vmax >= k:
            row[k] *= 1.02
        return row

    monkeypatch.setattr(checks_iid, "vk_row", crooked)
    code = main(["check", "--n", "3", "--k", "1"])
    err = capsys.readouterr().err
    assert code != 0
    assert "observed ERRATUM" in err


def test_criterion_8_seeded_invocations_are_byte_identical(capsys):
    argv = [
        "fit", "--k", "2", "--simulate-iid", "0.5", "--reps", "150",
        "--seed", "20260822", "--bootstrap", "100",
    ]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second and first

    assert main(["check", "--n", "4", "--k", "2"]) == 0
    check_first = capsys.readouterr().out
    assert main(["check", "--n", "4", "--k", "2"]) == 0
    check_second = capsys.readouterr().out
    assert check_first == check_second
