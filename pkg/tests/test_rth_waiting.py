"""Waiting time for the r-th run of length k under the three counting rules."""

import math

import numpy as np
import pytest

from successruns.geometric import vk_pmf
from successruns.models import IID, Markov, tv_distance
from successruns.rth_waiting import (
    Scheme,
    crosscheck_pmf_routes,
    min_support,
    trk_moments,
    trk_pgf,
    trk_pmf,
    trk_pmf_recursive,
    trk_tail,
)

MODELS = [IID(0.5), IID(0.35), Markov(0.45, 0.3, 0.6), Markov(0.62, 0.55, 0.35)]
SCHEMES = list(Scheme)


def test_scheme_labels_round_trip():
    assert Scheme.from_label("I") is Scheme.NON_OVERLAPPING
    assert Scheme.from_label("II") is Scheme.AT_LEAST
    assert Scheme.from_label("III") is Scheme.OVERLAPPING
    assert Scheme.from_label(Scheme.OVERLAPPING) is Scheme.OVERLAPPING
    with pytest.raises(ValueError):
        Scheme.from_label("IV")


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
def test_first_run_is_scheme_free(model, scheme):
    # r = 1 means the same event under every counting rule
    base = vk_pmf(model, 2, vmax=40)
    got = trk_pmf(model, 2, 1, scheme, 40)
    assert tv_distance(base, got) < 1e-12


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
@pytest.mark.parametrize("k,r", [(1, 2), (2, 2), (2, 3), (3, 2)])
def test_pmf_starts_at_min_support(model, scheme, k, r):
    pm = trk_pmf(model, k, r, scheme, 60)
    lo = min_support(model, k, r, scheme)
    assert pm.p(lo) > 0.0
    for v in range(max(0, lo - 3), lo):
        assert pm.p(v) == 0.0


def test_min_support_by_scheme():
    # r runs of length k need: rk trials packed solid; (r-1) separators for
    # the at-least rule; k + r - 1 trials when overlaps count
    m = IID(0.5)
    assert min_support(m, 3, 4, Scheme.NON_OVERLAPPING) == 12
    assert min_support(m, 3, 4, Scheme.AT_LEAST) == 15
    assert min_support(m, 3, 4, Scheme.OVERLAPPING) == 6


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
def test_series_and_recursive_routes_agree(model, scheme):
    for k, r in ((2, 2), (3, 2), (2, 3)):
        a = trk_pmf(model, k, r, scheme, 50)
        b = trk_pmf_recursive(model, k, r, scheme, 50)
        assert tv_distance(a, b) < 1e-11
        assert crosscheck_pmf_routes(model, k, r, scheme, 50) < 1e-11


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
def test_pgf_mass_is_one(model, scheme):
    gf = trk_pgf(model, 2, 3, scheme)
    assert math.isclose(gf(1.0), 1.0, abs_tol=1e-9)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
def test_tail_complements_pmf(model, scheme):
    n = 45
    pm = trk_pmf(model, 2, 2, scheme, n)
    dense = np.zeros(n + 1)
    dense[pm.offset : pm.offset + len(pm.probs)] = pm.probs
    tails = trk_tail(model, 2, 2, scheme, n)
    assert np.allclose(tails, 1.0 - np.cumsum(dense), atol=1e-12)
    assert math.isclose(tails[-1], pm.tail, abs_tol=1e-12)


def test_fair_coin_double_run_moments_by_hand():
    m = trk_moments(IID(0.5), 2, 1, Scheme.NON_OVERLAPPING)
    assert math.isclose(m.mean, 6.0, abs_tol=1e-10)
    assert math.isclose(m.second_moment, 58.0, abs_tol=1e-10)


@pytest.mark.parametrize("p", [0.3, 0.5, 0.7])
@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("r", [2, 3])
def test_independent_trial_mean_recursions(p, k, r):
    # renewal bookkeeping: fresh wait per run; at-least adds a geometric
    # run-ending stretch per renewal; overlapping extends by single successes
    model = IID(p)
    q = 1.0 - p
    ev = trk_moments(model, k, 1, Scheme.NON_OVERLAPPING).mean
    mi = trk_moments(model, k, r, Scheme.NON_OVERLAPPING).mean
    mii = trk_moments(model, k, r, Scheme.AT_LEAST).mean
    miii = trk_moments(model, k, r, Scheme.OVERLAPPING).mean
    assert math.isclose(mi, r * ev, rel_tol=1e-9)
    assert math.isclose(mii, r * ev + (r - 1) / q, rel_tol=1e-9)
    assert math.isclose(miii, ev + (r - 1) * (1 + q * ev), rel_tol=1e-9)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
def test_moments_match_series_accumulation(model, scheme):
    k, r = 2, 2
    n = 600
    coeffs = np.array(trk_pgf(model, k, r, scheme).series(n))
    values = np.arange(n + 1, dtype=float)
    mom = trk_moments(model, k, r, scheme)
    assert math.isclose(mom.mean, float(values @ coeffs), rel_tol=1e-10)
    assert math.isclose(
        mom.second_moment, float((values**2) @ coeffs), rel_tol=1e-9
    )


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        trk_pmf(IID(0.5), 0, 1, Scheme.NON_OVERLAPPING, 10)
    with pytest.raises(ValueError):
        trk_pmf(IID(0.5), 2, 0, Scheme.NON_OVERLAPPING, 10)
