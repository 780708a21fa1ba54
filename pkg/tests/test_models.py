"""Trial models and the probability-table container."""

import math

import numpy as np
import pytest

from successruns.models import IID, Markov, Pmf, tv_distance


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.2, 1.7])
def test_iid_rejects_degenerate_probability(bad):
    with pytest.raises(ValueError):
        IID(bad)


def test_iid_complement():
    m = IID(0.3)
    assert math.isclose(m.q, 0.7, abs_tol=1e-15)


def test_markov_validation():
    with pytest.raises(ValueError):
        Markov(0.5, 0.0, 0.5)
    with pytest.raises(ValueError):
        Markov(0.5, 0.5, 1.0)
    with pytest.raises(ValueError):
        Markov(1.0, 0.5, 0.5)


def test_markov_stationary_is_fixed_point():
    m = Markov(0.4, 0.55, 0.7)
    pi = m.stationary
    # one step of the chain from the stationary success probability
    assert math.isclose(pi, pi * m.alpha + (1 - pi) * (1 - m.beta), abs_tol=1e-14)
    assert math.isclose(m.q1, 0.6, abs_tol=1e-15)


def test_stationary_start_ties_first_trial():
    m = Markov.stationary_start(0.3, 0.7)
    assert math.isclose(m.p1, m.stationary, abs_tol=1e-15)


def test_pmf_basics():
    pm = Pmf(2, [0.25, 0.125, 0.125], tail=0.5)
    assert pm.p(2) == 0.25
    assert pm.p(4) == 0.125
    assert pm.p(1) == 0.0
    assert pm.p(99) == 0.0
    assert pm.support_end == 4
    assert "Pmf" in repr(pm)


def test_pmf_moments_ignore_tail():
    pm = Pmf(1, [0.5, 0.25], tail=0.25)
    assert math.isclose(pm.mean(), 1 * 0.5 + 2 * 0.25, abs_tol=1e-15)
    assert math.isclose(pm.second_moment(), 1 * 0.5 + 4 * 0.25, abs_tol=1e-15)


def test_pmf_clamps_rounding_noise_only():
    pm = Pmf(0, [1.0 + 2e-13, -2e-13])
    assert pm.probs[1] == 0.0
    with pytest.raises(ValueError):
        Pmf(0, [1.001, -0.001])
    with pytest.raises(ValueError):
        Pmf(0, [0.5, 0.4])  # mass 0.9, no tail
    with pytest.raises(ValueError):
        Pmf(0, [[0.5], [0.5]])


def test_pmf_tail_completes_mass():
    pm = Pmf(0, [0.5, 0.3], tail=0.2)
    assert math.isclose(pm.tail, 0.2, abs_tol=1e-15)
    with pytest.raises(ValueError):
        Pmf(0, [0.5, 0.3], tail=-0.2)


def test_tv_distance_identical_and_disjoint():
    a = Pmf(0, [0.5, 0.5])
    assert tv_distance(a, a) == 0.0
    b = Pmf(2, [0.5, 0.5])
    assert math.isclose(tv_distance(a, b), 1.0, abs_tol=1e-15)


def test_tv_distance_by_hand():
    a = Pmf(0, [0.6, 0.4])
    b = Pmf(0, [0.4, 0.6])
    assert math.isclose(tv_distance(a, b), 0.2, abs_tol=1e-15)
    assert math.isclose(tv_distance(b, a), 0.2, abs_tol=1e-15)


def test_tv_distance_aligns_offsets_and_tails():
    a = Pmf(1, [0.25, 0.25, 0.25], tail=0.25)
    b = Pmf(2, [0.25, 0.25, 0.25], tail=0.25)
    # differ on {1, 4}: |0.25-0| + |0.25-0.25|*2 + |0-0.25| over support, tails equal
    assert math.isclose(tv_distance(a, b), 0.25, abs_tol=1e-15)


def test_tv_distance_counts_tail_gap():
    a = Pmf(0, [0.7, 0.3])
    b = Pmf(0, [0.7, 0.1], tail=0.2)
    assert math.isclose(tv_distance(a, b), 0.2, abs_tol=1e-15)


def test_pmf_probs_are_numpy():
    pm = Pmf(0, (0.5, 0.5))
    assert isinstance(pm.probs, np.ndarray)
