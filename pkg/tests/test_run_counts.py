"""Run counts in a fixed number of trials, all three counting rules."""

import math
from itertools import product

import numpy as np
import pytest

from successruns.models import IID, Markov, tv_distance
from successruns.rth_waiting import Scheme
from successruns.run_counts import (
    count_polynomials,
    count_runs,
    counts_moments,
    counts_pmf,
    counts_pmf_recursive,
    first_occurrence_index,
    max_count,
    occurrence_indices,
)

MODELS = [IID(0.5), IID(0.35), Markov(0.45, 0.3, 0.6), Markov(0.62, 0.55, 0.35)]
SCHEMES = list(Scheme)


def test_counting_rules_on_a_worked_sequence():
    bits = [1, 1, 1, 1, 0, 1, 1]
    # four solid successes, break, two more
    assert count_runs(bits, 2, Scheme.NON_OVERLAPPING) == 3
    assert count_runs(bits, 2, Scheme.AT_LEAST) == 2
    assert count_runs(bits, 2, Scheme.OVERLAPPING) == 4
    assert list(occurrence_indices(bits, 2, Scheme.NON_OVERLAPPING)) == [2, 4, 7]
    assert list(occurrence_indices(bits, 2, Scheme.AT_LEAST)) == [2, 7]
    assert list(occurrence_indices(bits, 2, Scheme.OVERLAPPING)) == [2, 3, 4, 7]


def test_counting_rules_accept_strings():
    assert count_runs("11011", 2, Scheme.NON_OVERLAPPING) == 2
    assert count_runs("0000", 1, Scheme.OVERLAPPING) == 0


def test_first_occurrence_index():
    bits = [0, 1, 1, 1, 0, 1, 1]
    assert first_occurrence_index(bits, 2, 1, Scheme.NON_OVERLAPPING) == 3
    assert first_occurrence_index(bits, 2, 2, Scheme.NON_OVERLAPPING) == 7
    assert first_occurrence_index(bits, 2, 2, Scheme.OVERLAPPING) == 4
    assert first_occurrence_index(bits, 2, 3, Scheme.AT_LEAST) is None
    with pytest.raises(ValueError):
        first_occurrence_index(bits, 2, 0, Scheme.AT_LEAST)


def test_max_count_closed_patterns():
    assert max_count(7, 2, Scheme.NON_OVERLAPPING) == 3
    assert max_count(7, 2, Scheme.AT_LEAST) == 2  # 11 0 11 0 1: trailing 1 too short
    assert max_count(7, 2, Scheme.OVERLAPPING) == 6
    assert max_count(9, 3, Scheme.NON_OVERLAPPING) == 3
    assert max_count(9, 3, Scheme.AT_LEAST) == 2


def test_max_count_is_attained_not_exceeded():
    for n, k, scheme in product((5, 8), (1, 2, 3), SCHEMES):
        cap = max_count(n, k, scheme)
        best = max(
            count_runs(bits, k, scheme)
            for bits in product((0, 1), repeat=n)
        )
        assert cap == best


def test_fair_coin_three_trials_overlapping_by_hand():
    # of the 8 strings, only 111 gives two overlapping double-runs
    pm = counts_pmf(IID(0.5), 3, 2, Scheme.OVERLAPPING)
    assert math.isclose(pm.p(0), 0.625, abs_tol=1e-15)
    assert math.isclose(pm.p(1), 0.25, abs_tol=1e-15)
    assert math.isclose(pm.p(2), 0.125, abs_tol=1e-15)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
@pytest.mark.parametrize("n,k", [(1, 1), (5, 2), (9, 2), (12, 3)])
def test_counts_pmf_is_a_complete_distribution(model, scheme, n, k):
    pm = counts_pmf(model, n, k, scheme)
    assert pm.offset == 0
    assert pm.tail == 0.0
    assert len(pm.probs) == max_count(n, k, scheme) + 1
    assert math.isclose(float(np.sum(pm.probs)), 1.0, abs_tol=1e-12)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
@pytest.mark.parametrize("n,k", [(6, 2), (10, 2), (11, 3)])
def test_inversion_and_polynomial_routes_agree(model, scheme, n, k):
    a = counts_pmf(model, n, k, scheme)
    b = counts_pmf_recursive(model, n, k, scheme)
    assert tv_distance(a, b) < 1e-11


def test_count_polynomials_are_probability_generating():
    gs = count_polynomials(IID(0.4), 2, Scheme.NON_OVERLAPPING, 12)
    assert len(gs) == 13
    for g in gs:
        assert math.isclose(g(1.0), 1.0, abs_tol=1e-12)
        assert all(c >= -1e-12 for c in g.coeffs)


@pytest.mark.parametrize("model", MODELS)
@pytest.mark.parametrize("scheme", SCHEMES)
def test_moments_match_pmf(model, scheme):
    n, k = 14, 2
    pm = counts_pmf(model, n, k, scheme)
    mom = counts_moments(model, n, k, scheme)
    xs = np.arange(len(pm.probs), dtype=float)
    assert math.isclose(mom.mean, float(xs @ pm.probs), abs_tol=1e-13)
    assert math.isclose(
        mom.second_moment, float((xs**2) @ pm.probs), abs_tol=1e-12
    )


def test_more_trials_never_lose_runs():
    # expected count grows with the horizon under every rule
    for model, scheme in product(MODELS, SCHEMES):
        means = [counts_moments(model, n, 2, scheme).mean for n in (4, 8, 16)]
        assert means[0] < means[1] < means[2]


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        counts_pmf(IID(0.5), -1, 2, Scheme.NON_OVERLAPPING)
    with pytest.raises(ValueError):
        count_runs([1, 0], 0, Scheme.NON_OVERLAPPING)
