"""Waiting time to the first run of k consecutive successes.

The distribution is driven by an auxiliary sequence h_v:

* independent trials: h_1 = 1 and
  h_v = q * (h_{v-1} + p h_{v-2} + ... + p^{k-1} h_{v-k}),
  with P(V = v) = h_{v-k+1} * p^k;
* Markov trials: h_1 = p1, h_2 = q1 (1 - beta) and
  h_v = beta h_{v-1} + (1-alpha)(1-beta) sum_{i=0}^{k-2} alpha^i h_{v-i-2},
  with P(V = v) = h_{v-k+1} * alpha^(k-1).

At p = 1/2 the independent-trials h sequence is exactly the order-k
generalized Fibonacci sequence scaled by powers of two, which is what the
cross-checks against :mod:`successruns.fibk` exploit.  The same machinery
yields the rational probability generating functions, a two-root closed form
for k = 2, and the distribution of the longest success run over a fixed
horizon via the equivalence P(V <= n) = P(longest run in n trials >= k).
"""

from __future__ import annotations

import math

import numpy as np

from .models import IID, Markov, Pmf, TrialModel
from .polyseries import Poly, RationalGF


def _h_sequence(model: TrialModel, k: int, count: int) -> np.ndarray:
    """First `count` values h_1..h_count of the auxiliary recursion."""
    h = np.zeros(count + 1)  # h[0] unused so indices match the math
    if count < 1:
        return h[1:]
    if isinstance(model, IID):
        p, q = model.p, model.q
        pw = p ** np.arange(k)  # 1, p, ..., p^(k-1)
        h[1] = 1.0
        for v in range(2, count + 1):
            depth = min(k, v - 1)
            acc = 0.0
            for i in range(1, depth + 1):
                acc += pw[i - 1] * h[v - i]
            h[v] = q * acc
    else:
        a, b = model.alpha, model.beta
        aw = a ** np.arange(max(k - 1, 1))
        c = (1.0 - a) * (1.0 - b)
        h[1] = model.p1
        if count >= 2:
            h[2] = model.q1 * (1.0 - b)
        for v in range(3, count + 1):
            acc = b * h[v - 1]
            for i in range(0, min(k - 2, v - 3) + 1):
                acc += c * aw[i] * h[v - i - 2]
            h[v] = acc
    return h[1:]


def _run_prefix_prob(model: TrialModel, k: int) -> float:
    """Probability factor contributed by the final k-success block."""
    if isinstance(model, IID):
        return model.p**k
    return model.alpha ** (k - 1)


def _validate_k(k: int) -> int:
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"run length k must be a positive integer, got {k}")
    return k


def default_vmax(model: TrialModel, k: int) -> int:
    """Truncation horizon leaving under ~1e-12 of mass in the tail.

    Probes the pmf recursion, estimates the geometric decay ratio rho from
    successive values, and returns max(10k, ceil(log(1e-12)/log(rho))).
    """
    k = _validate_k(k)
    probe = max(10 * k, 50)
    h = _h_sequence(model, k, probe)
    scale = _run_prefix_prob(model, k)
    tail_vals = [scale * x for x in h[-6:]]
    rho = None
    for a, b in zip(tail_vals, tail_vals[1:]):
        if a > 0.0 and b > 0.0 and b < a:
            rho = b / a if rho is None else max(rho, b / a)
    if rho is None or not 0.0 < rho < 1.0:
        # extremely slow or irregular decay at the probe length; extend hard
        return probe * 20
    return max(10 * k, math.ceil(math.log(1e-12) / math.log(rho)))


def vk_pmf(model: TrialModel, k: int, vmax: int | None = None) -> Pmf:
    """Distribution of the trial index at which the first k-run completes.

    Parameters
    ----------
    model : TrialModel
    k : int
        Required run length.
    vmax : int, optional
        Truncation horizon (inclusive); defaults to :func:`default_vmax`.

    Returns
    -------
    Pmf
        Offset k, entries for v = k..vmax, remaining mass in ``tail``.
    """
    k = _validate_k(k)
    if vmax is None:
        vmax = default_vmax(model, k)
    if vmax < k:
        return Pmf(offset=k, probs=np.zeros(0), tail=1.0)
    h = _h_sequence(model, k, vmax - k + 1)
    probs = _run_prefix_prob(model, k) * h
    return Pmf(offset=k, probs=probs, tail=1.0 - float(probs.sum()))


def markov_vk_pgf(k: int, alpha: float, beta: float, first_p: float) -> RationalGF:
    """Generating function of the k-run wait for a chain restarted with
    first-trial success probability ``first_p``.

    This is the workhorse behind both the unconditional Markov pgf
    (``first_p = p1``) and the inter-occurrence factors of the r-th-run
    module, which restart the chain from a success (``first_p = alpha``) or
    from a failure (``first_p = 1 - beta``).
    """
    k = _validate_k(k)
    q_first = 1.0 - first_p
    lead = alpha ** (k - 1)
    num = Poly.term(lead * first_p, k) + Poly.term(lead * (q_first - beta), k + 1)
    den_coeffs = [0.0] * (k + 1)
    den_coeffs[0] = 1.0
    den_coeffs[1] = -beta
    for i in range(2, k + 1):
        den_coeffs[i] = -(alpha ** (i - 2)) * (1.0 - alpha) * (1.0 - beta)
    return RationalGF(num, Poly(den_coeffs))


def vk_pgf(model: TrialModel, k: int) -> RationalGF:
    """Rational probability generating function of the first k-run wait."""
    k = _validate_k(k)
    if isinstance(model, IID):
        p, q = model.p, model.q
        num = Poly.term(p**k, k)
        den_coeffs = [0.0] * (k + 1)
        den_coeffs[0] = 1.0
        for i in range(1, k + 1):
            den_coeffs[i] = -q * p ** (i - 1)
        return RationalGF(num, Poly(den_coeffs))
    return markov_vk_pgf(k, model.alpha, model.beta, model.p1)


def vk_pmf_closedform_k2(model: TrialModel, v: int) -> float:
    """P(V = v) for k = 2 from the two-root solution of the h recursion.

    The auxiliary recursion for k = 2 is a three-term linear recurrence; its
    general solution is a weighted sum of powers of the two real roots of the
    characteristic quadratic, with weights pinned by h_1 and h_2.  Must agree
    with :func:`vk_pmf` to floating precision and exists purely as an
    independent route for the cross-check suites.
    """
    if v < 2:
        return 0.0
    if isinstance(model, IID):
        p, q = model.p, model.q
        disc = q * q + 4.0 * p * q
        h1, h2 = 1.0, q
        scale = p * p
        trace = q
    else:
        a, b = model.alpha, model.beta
        disc = b * b + 4.0 * (1.0 - a) * (1.0 - b)
        h1, h2 = model.p1, model.q1 * (1.0 - b)
        scale = a
        trace = b
    root = math.sqrt(disc)
    r1 = 0.5 * (trace + root)
    r2 = 0.5 * (trace - root)
    c1 = (h2 - r2 * h1) / (r1 * (r1 - r2))
    c2 = (r1 * h1 - h2) / (r2 * (r1 - r2))
    return scale * (c1 * r1 ** (v - 1) + c2 * r2 ** (v - 1))


def _vk_cdf_at(model: TrialModel, n: int, k: int) -> float:
    """P(V(k) <= n); zero when the run cannot fit."""
    if k > n:
        return 0.0
    pm = vk_pmf(model, k, vmax=n)
    return float(pm.probs.sum())


def longest_run_pmf(model: TrialModel, n: int) -> Pmf:
    """Distribution of the longest success run over n trials.

    Uses P(longest >= k) = P(V(k) <= n), differencing consecutive k.  The
    support 0..n is complete, so the tail is exactly zero.
    """
    if n < 0:
        raise ValueError(f"horizon n must be >= 0, got {n}")
    if n == 0:
        return Pmf(offset=0, probs=np.array([1.0]))
    cdf = [_vk_cdf_at(model, n, k) for k in range(1, n + 2)]  # k = 1..n+1
    probs = np.zeros(n + 1)
    probs[0] = 1.0 - cdf[0]
    for k in range(1, n + 1):
        probs[k] = cdf[k - 1] - cdf[k]
    return Pmf(offset=0, probs=probs)


def longest_run_gf(model: TrialModel, k: int) -> RationalGF:
    """Generating function over n of P(longest run in n trials = k).

    Built programmatically from the waiting-time pgfs:
    (G_k(z) - G_{k+1}(z)) / (1 - z), and (1 - G_1(z)) / (1 - z) for k = 0.
    The rational function is assembled by polynomial arithmetic; nothing here
    is transcribed from any expanded coefficient table.
    """
    if k < 0:
        raise ValueError(f"run length k must be >= 0, got {k}")
    inv_1mz = RationalGF(Poly((1.0,)), Poly((1.0, -1.0)))
    if k == 0:
        return (RationalGF.one() - vk_pgf(model, 1)) * inv_1mz
    return (vk_pgf(model, k) - vk_pgf(model, k + 1)) * inv_1mz


def longest_run_recursive(model: TrialModel, n: int, k: int) -> float:
    """P(longest run in n trials = k) via series extraction of the gf."""
    if n < 0:
        raise ValueError(f"horizon n must be >= 0, got {n}")
    if k > n:
        return 0.0
    return longest_run_gf(model, k).series(n)[n]
