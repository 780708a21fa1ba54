"""Likelihood fitting from waiting-time samples."""

import math

import numpy as np
import pytest

from successruns.inference import FitResult, bootstrap_se, fit_iid, fit_markov
from successruns.models import IID, Markov
from successruns.oracle import SeededStream, sample_waiting_times


@pytest.fixture(scope="module")
def fair_sample():
    return sample_waiting_times(IID(0.5), 2, 2000, SeededStream(20260822))


def test_fit_iid_recovers_generator(fair_sample):
    fit = fit_iid(fair_sample, 2)
    assert isinstance(fit, FitResult)
    assert set(fit.estimates) == {"p"}
    assert abs(fit.estimates["p"] - 0.5) < 0.05
    assert fit.converged
    assert fit.iterations > 0
    assert math.isfinite(fit.loglik)
    assert fit.standard_errors is None


def test_fit_is_deterministic(fair_sample):
    a = fit_iid(fair_sample, 2)
    b = fit_iid(fair_sample, 2)
    assert a.estimates == b.estimates
    assert a.loglik == b.loglik


def test_fit_iid_maximizes_the_likelihood(fair_sample):
    fit = fit_iid(fair_sample, 2)
    p_hat = fit.estimates["p"]

    def loglik(p):
        from successruns.geometric import vk_pmf

        pm = vk_pmf(IID(p), 2, vmax=int(fair_sample.max()) + 1)
        return float(np.sum(np.log([pm.p(int(v)) for v in fair_sample])))

    best = loglik(p_hat)
    assert math.isclose(best, fit.loglik, rel_tol=1e-6)
    for off in (-0.02, -0.005, 0.005, 0.02):
        assert loglik(p_hat + off) < best + 1e-9


def test_fit_markov_recovers_generator():
    source = Markov.stationary_start(0.6, 0.5)
    sample = sample_waiting_times(source, 2, 1500, SeededStream(20260823))
    fit = fit_markov(sample, 2)
    assert set(fit.estimates) == {"alpha", "beta", "p"}
    assert fit.converged
    assert abs(fit.estimates["alpha"] - 0.6) < 0.08
    assert abs(fit.estimates["beta"] - 0.5) < 0.08
    # the reported p is the stationary success rate of the fitted chain
    m = Markov.stationary_start(fit.estimates["alpha"], fit.estimates["beta"])
    assert math.isclose(fit.estimates["p"], m.stationary, abs_tol=1e-12)


def test_bootstrap_se_scale_and_determinism(fair_sample):
    short = fair_sample[:200]
    se = bootstrap_se(short, 2, "iid", 200, SeededStream(5))
    assert set(se) == {"p"}
    assert 0.01 <= se["p"] <= 0.06
    again = bootstrap_se(short, 2, "iid", 200, SeededStream(5))
    assert se == again


def test_bootstrap_se_shrinks_with_sample_size(fair_sample):
    small = bootstrap_se(fair_sample[:150], 2, "iid", 120, SeededStream(6))
    large = bootstrap_se(fair_sample, 2, "iid", 120, SeededStream(6))
    assert large["p"] < small["p"]


def test_bootstrap_markov_keys(fair_sample):
    se = bootstrap_se(fair_sample[:200], 2, "markov", 60, SeededStream(8))
    assert set(se) == {"alpha", "beta", "p"}
    assert all(v > 0 for v in se.values())


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        fit_iid(np.array([], dtype=np.int64), 2)
    with pytest.raises(ValueError):
        fit_iid(np.array([5, 1], dtype=np.int64), 2)  # a wait below k trials
    with pytest.raises(ValueError):
        bootstrap_se(np.array([3, 4, 5], dtype=np.int64), 2, "iid", 1, SeededStream(1))
    with pytest.raises(ValueError):
        bootstrap_se(np.array([3, 4, 5], dtype=np.int64), 2, "weibull", 8, SeededStream(1))
