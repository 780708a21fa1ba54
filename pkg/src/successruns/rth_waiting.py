"""Waiting time until the r-th occurrence of a k-success run.

Three counting conventions are supported:

* ``Scheme.NON_OVERLAPPING`` ("I"): counting restarts from scratch after each
  completed run, so 5 straight successes contain two 2-runs.
* ``Scheme.AT_LEAST`` ("II"): each maximal success block of length >= k
  counts exactly once, at the trial where it first reaches length k; the next
  occurrence requires an intervening failure.
* ``Scheme.OVERLAPPING`` ("III"): every trial extending a streak to length
  >= k counts, so a block of m >= k successes contributes m - k + 1.

A fourth convention (blocks of *exactly* k) is not a renewal process in the
sense used here and deliberately has no member in the enum.

Everything is built compositionally: the pgf of the r-th occurrence time is
H(z) * A(z)^(r-1), where H is the first-occurrence pgf (the plain k-run wait
for every scheme) and A is the scheme's inter-occurrence pgf.  Two redundant
pmf routes are exposed — series extraction of the composed rational function
and an in-r convolution recursion seeded by the waiting-time recursion — and
the cross-check suites hold them to 1e-9 of each other.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .geometric import markov_vk_pgf, vk_pgf, vk_pmf
from .models import IID, ConsistencyError, Markov, Pmf, TrialModel
from .polyseries import Poly, RationalGF


class Scheme(enum.Enum):
    """Run-counting convention; labels follow the customary Roman numerals."""

    NON_OVERLAPPING = "I"
    AT_LEAST = "II"
    OVERLAPPING = "III"

    @classmethod
    def from_label(cls, label) -> "Scheme":
        if isinstance(label, cls):
            return label
        text = str(label).strip().upper().replace("-", "_")
        for member in cls:
            if text in (member.value, member.name):
                return member
        raise ValueError(
            f"unknown scheme {label!r}; expected one of I, II, III"
        )


def occurrence_factors(
    model: TrialModel, k: int, scheme: Scheme
) -> tuple[RationalGF, RationalGF]:
    """First-occurrence pgf H and inter-occurrence pgf A for a scheme.

    The r-th occurrence time has pgf H * A**(r-1).  For independent trials
    with first-run pgf G: scheme I has A = G (full restart); scheme II has
    A = (qz / (1 - pz)) * G (flush the current block, then a fresh wait);
    scheme III has A = pz + qz*G (either the streak extends immediately or a
    failure forces a fresh wait).  The Markov factors are the same renewal
    decompositions with the restarted chain's first-trial success probability
    substituted: alpha after a counted run, 1 - beta after a failure.
    """
    scheme = Scheme.from_label(scheme)
    if isinstance(model, IID):
        g = vk_pgf(model, k)
        p, q = model.p, model.q
        if scheme is Scheme.NON_OVERLAPPING:
            return g, g
        if scheme is Scheme.AT_LEAST:
            flush = RationalGF(Poly.term(q, 1), Poly((1.0, -p)))
            return g, flush * g
        step = RationalGF(Poly.term(p, 1))
        fail_restart = RationalGF(Poly.term(q, 1)) * g
        return g, step + fail_restart

    a, b = model.alpha, model.beta
    h = markov_vk_pgf(k, a, b, model.p1)
    from_failure = markov_vk_pgf(k, a, b, 1.0 - b)
    if scheme is Scheme.NON_OVERLAPPING:
        return h, markov_vk_pgf(k, a, b, a)
    if scheme is Scheme.AT_LEAST:
        flush = RationalGF(Poly.term(1.0 - a, 1), Poly((1.0, -a)))
        return h, flush * from_failure
    step = RationalGF(Poly.term(a, 1))
    fail_restart = RationalGF(Poly.term(1.0 - a, 1)) * from_failure
    return h, step + fail_restart


def _validate_query(k: int, r: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"run length k must be a positive integer, got {k}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"occurrence index r must be a positive integer, got {r}")


def trk_pgf(model: TrialModel, k: int, r: int, scheme: Scheme) -> RationalGF:
    """Rational pgf of the trial index of the r-th counted run.

    Raises ConsistencyError if either building block fails to carry unit
    mass at z = 1 within 1e-9.  The check runs on the low-degree H and A
    factors rather than on the composed power: a transcription fault in a
    factor shows up as an O(1) deviation there, while evaluating the
    expanded r-th power at z = 1 suffers den(1)**(r-1) cancellation and
    would drown the signal in float noise for large r.
    """
    _validate_query(k, r)
    h, a = occurrence_factors(model, k, scheme)
    for name, factor in (("first-occurrence", h), ("inter-occurrence", a)):
        mass = factor(1.0)
        if abs(mass - 1.0) > 1e-9:
            raise ConsistencyError(
                f"{name} factor mass at z=1 is {mass!r} (deviation "
                f"{mass - 1.0:.3e}) for k={k}, r={r}, "
                f"scheme={Scheme.from_label(scheme).value}"
            )
    return h * a ** (r - 1)


def _lowest_degree(p: Poly) -> int:
    for i, c in enumerate(p.coeffs):
        if c != 0.0:
            return i
    return 0


def min_support(model: TrialModel, k: int, r: int, scheme: Scheme) -> int:
    """Smallest trial index with positive probability, read off structurally.

    Computed from the lowest nonzero numerator degrees of the H and A
    factors (products cannot cancel at the lowest degree), not from any
    precomputed formula.
    """
    _validate_query(k, r)
    h, a = occurrence_factors(model, k, scheme)
    return _lowest_degree(h.num) + (r - 1) * _lowest_degree(a.num)


def _pmf_from_series(coeffs: list[float], offset: int) -> Pmf:
    probs = np.asarray(coeffs[offset:], dtype=np.float64)
    return Pmf(offset=offset, probs=probs, tail=1.0 - float(probs.sum()))


def trk_pmf(
    model: TrialModel, k: int, r: int, scheme: Scheme, nmax: int
) -> Pmf:
    """P(T = n) for n up to nmax, via series extraction of the composed pgf.

    This is the default route.  ``trk_pmf_recursive`` computes the same table
    by an independent recursion; disagreement beyond 1e-9 between the two is
    a defect (see :func:`crosscheck_pmf_routes`).
    """
    offset = min_support(model, k, r, scheme)
    if offset > nmax:
        return Pmf(offset=offset, probs=np.zeros(0), tail=1.0)
    g = trk_pgf(model, k, r, scheme)
    return _pmf_from_series(g.series(nmax), offset)


def trk_pmf_recursive(
    model: TrialModel, k: int, r: int, scheme: Scheme, nmax: int
) -> Pmf:
    """Same table as :func:`trk_pmf` by the in-r convolution recursion.

    The first-occurrence row is the waiting-time recursion's pmf (not a
    series extraction), and each subsequent occurrence count is advanced by
    convolving with the inter-occurrence factor's numerator while unwinding
    its denominator:

        h_r(n) = sum_j numA_j h_{r-1}(n-j) - sum_{j>=1} denA_j h_r(n-j).
    """
    _validate_query(k, r)
    scheme = Scheme.from_label(scheme)
    first = vk_pmf(model, k, vmax=nmax)
    h_prev = np.zeros(nmax + 1)
    upto = min(nmax, first.support_end)
    if upto >= first.offset:
        h_prev[first.offset : upto + 1] = first.probs[: upto - first.offset + 1]
    _, a = occurrence_factors(model, k, scheme)
    num_a, den_a = a.num.coeffs, a.den.coeffs
    for _ in range(r - 1):
        h_cur = np.zeros(nmax + 1)
        for n in range(nmax + 1):
            acc = 0.0
            for j, c in enumerate(num_a):
                if c != 0.0 and n - j >= 0:
                    acc += c * h_prev[n - j]
            for j in range(1, min(n, len(den_a) - 1) + 1):
                acc -= den_a[j] * h_cur[n - j]
            h_cur[n] = acc
        h_prev = h_cur
    offset = min_support(model, k, r, scheme)
    if offset > nmax:
        return Pmf(offset=offset, probs=np.zeros(0), tail=1.0)
    probs = h_prev[offset:]
    return Pmf(offset=offset, probs=probs, tail=1.0 - float(probs.sum()))


def crosscheck_pmf_routes(
    model: TrialModel, k: int, r: int, scheme: Scheme, nmax: int
) -> float:
    """Max absolute disagreement between the two pmf routes.

    Raises ConsistencyError beyond 1e-9; returns the deviation otherwise.
    """
    direct = trk_pmf(model, k, r, scheme, nmax)
    recursive = trk_pmf_recursive(model, k, r, scheme, nmax)
    dev = 0.0
    for n in range(nmax + 1):
        dev = max(dev, abs(direct.p(n) - recursive.p(n)))
    if dev > 1e-9:
        raise ConsistencyError(
            f"pmf routes disagree by {dev:.3e} for k={k}, r={r}, "
            f"scheme={Scheme.from_label(scheme).value}"
        )
    return dev


def trk_tail(
    model: TrialModel, k: int, r: int, scheme: Scheme, nmax: int
) -> np.ndarray:
    """Survival probabilities P(T > n) for n = 0..nmax."""
    coeffs = trk_pgf(model, k, r, scheme).series(nmax)
    return 1.0 - np.cumsum(coeffs)


class RunMoments(NamedTuple):
    mean: float
    second_moment: float


def trk_moments(model: TrialModel, k: int, r: int, scheme: Scheme) -> RunMoments:
    """Mean and second raw moment of the r-th occurrence time, from the pgf."""
    m = trk_pgf(model, k, r, scheme).moments_at_one()
    return RunMoments(mean=m.mean, second_moment=m.second_factorial + m.mean)
