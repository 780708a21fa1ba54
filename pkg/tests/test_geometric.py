"""First k-run waiting time and longest-run distributions."""

import math

import numpy as np
import pytest

from successruns.geometric import (
    default_vmax,
    longest_run_gf,
    longest_run_pmf,
    longest_run_recursive,
    markov_vk_pgf,
    vk_pgf,
    vk_pmf,
    vk_pmf_closedform_k2,
)
from successruns.models import IID, Markov

MODELS = [IID(0.5), IID(0.3), Markov(0.45, 0.3, 0.6), Markov(0.62, 0.55, 0.35)]


def test_fair_coin_first_double_success_by_hand():
    # sequences of length v ending in the first SS: 1/4, 1/8, 1/8, 3/32, ...
    pm = vk_pmf(IID(0.5), 2, vmax=6)
    assert math.isclose(pm.p(2), 0.25, abs_tol=1e-15)
    assert math.isclose(pm.p(3), 0.125, abs_tol=1e-15)
    assert math.isclose(pm.p(4), 0.125, abs_tol=1e-15)
    assert math.isclose(pm.p(5), 0.09375, abs_tol=1e-15)
    assert pm.p(1) == 0.0


def test_k_equal_one_is_geometric():
    p = 0.3
    pm = vk_pmf(IID(p), 1, vmax=30)
    for v in range(1, 31):
        assert math.isclose(pm.p(v), (1 - p) ** (v - 1) * p, abs_tol=1e-14)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_mass_accounts_for_tail(model, k):
    pm = vk_pmf(model, k, vmax=25)
    assert pm.offset == k
    total = float(np.sum(pm.probs)) + pm.tail
    assert math.isclose(total, 1.0, abs_tol=1e-12)
    assert pm.tail > 0.0


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("k", [1, 2, 3])
def test_pgf_series_matches_pmf(model, k):
    vmax = 40
    coeffs = vk_pgf(model, k).series(vmax)
    pm = vk_pmf(model, k, vmax=vmax)
    dense = np.zeros(vmax + 1)
    dense[pm.offset : pm.offset + len(pm.probs)] = pm.probs
    assert np.allclose(coeffs, dense, atol=1e-12)


def test_markov_pgf_wrapper_consistency():
    m = Markov(0.45, 0.3, 0.6)
    a = markov_vk_pgf(3, m.alpha, m.beta, m.p1).series(30)
    b = vk_pgf(m, 3).series(30)
    assert np.allclose(a, b, atol=1e-14)


@pytest.mark.parametrize("model", MODELS)
def test_closed_form_k2_matches_recursion(model):
    pm = vk_pmf(model, 2, vmax=200)
    for v in range(2, 201):
        assert abs(vk_pmf_closedform_k2(model, v) - pm.p(v)) < 1e-10


def test_default_vmax_leaves_negligible_tail():
    for model in MODELS:
        for k in (1, 2, 3):
            pm = vk_pmf(model, k)
            assert pm.support_end == default_vmax(model, k)
            assert pm.tail < 1e-9


def test_vk_rejects_bad_run_length():
    with pytest.raises(ValueError):
        vk_pmf(IID(0.5), 0)


def test_vk_sub_support_horizon_is_all_tail():
    pm = vk_pmf(IID(0.5), 2, vmax=1)
    assert len(pm.probs) == 0
    assert pm.tail == 1.0


def test_longest_run_five_fair_trials_by_hand():
    # 32 equally likely strings; count by maximal success-run length
    pm = longest_run_pmf(IID(0.5), 5)
    want = {0: 1 / 32, 1: 12 / 32, 2: 11 / 32, 3: 5 / 32, 4: 2 / 32, 5: 1 / 32}
    for value, prob in want.items():
        assert math.isclose(pm.p(value), prob, abs_tol=1e-14)
    assert pm.tail == 0.0


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("n", [1, 2, 6, 12])
def test_longest_run_mass_is_exact(model, n):
    pm = longest_run_pmf(model, n)
    assert pm.offset == 0
    assert len(pm.probs) == n + 1
    assert math.isclose(float(np.sum(pm.probs)), 1.0, abs_tol=1e-12)


@pytest.mark.parametrize("model", MODELS)
def test_longest_run_routes_agree(model):
    for n in (3, 8, 14):
        pm = longest_run_pmf(model, n)
        for k in range(0, n + 1):
            assert abs(pm.p(k) - longest_run_recursive(model, n, k)) < 1e-12


@pytest.mark.parametrize("model", MODELS)
def test_longest_run_gf_expands_to_pmf(model):
    nmax = 20
    for k in (0, 1, 2, 4):
        series = longest_run_gf(model, k).series(nmax)
        for n in (2, 7, nmax):
            assert abs(series[n] - longest_run_pmf(model, n).p(k)) < 1e-10


def test_longest_run_duality_with_waiting_time():
    # the longest run reaches k within n trials iff the first k-run wait is <= n
    for model in MODELS:
        for k in (1, 2, 3):
            pm_v = vk_pmf(model, k, vmax=30)
            for n in (4, 9, 15):
                lhs = float(np.sum(longest_run_pmf(model, n).probs[k:]))
                rhs = sum(pm_v.p(v) for v in range(k, n + 1))
                assert abs(lhs - rhs) < 1e-12
