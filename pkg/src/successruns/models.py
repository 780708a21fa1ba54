"""Trial models and the probability-mass container shared across the package.

Two sequence models are supported: independent Bernoulli trials with success
probability p, and a two-state Markov chain where the success probability of
a trial depends on the previous outcome (alpha after a success, 1 - beta
after a failure) with a free first-trial probability p1.  All probabilities
must lie strictly inside (0, 1); boundary values collapse the chains into
degenerate cases the recursions are not written for, so they are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class ConsistencyError(RuntimeError):
    """Two redundant computation paths disagreed beyond tolerance.

    Raised when internal cross-checks fail; indicates a defect (or a
    transcription problem in a formula under test), never a user error.
    """


def _check_open_unit(name: str, value: float) -> float:
    value = float(value)
    if not 0.0 < value < 1.0:
        raise ValueError(f"{name} must lie strictly in (0, 1), got {value}")
    return value


@dataclass(frozen=True)
class IID:
    """Independent Bernoulli trials with success probability p."""

    p: float

    def __post_init__(self):
        object.__setattr__(self, "p", _check_open_unit("p", self.p))

    @property
    def q(self) -> float:
        return 1.0 - self.p


@dataclass(frozen=True)
class Markov:
    """Two-state chain: P(success | success) = alpha, P(failure | failure) = beta.

    p1 is the unconditional success probability of the first trial.  The
    stationary success probability is (1 - beta) / (2 - alpha - beta);
    ``Markov.stationary_start`` builds a chain launched from it.
    """

    p1: float
    alpha: float
    beta: float

    def __post_init__(self):
        object.__setattr__(self, "p1", _check_open_unit("p1", self.p1))
        object.__setattr__(self, "alpha", _check_open_unit("alpha", self.alpha))
        object.__setattr__(self, "beta", _check_open_unit("beta", self.beta))

    @property
    def q1(self) -> float:
        return 1.0 - self.p1

    @property
    def stationary(self) -> float:
        return (1.0 - self.beta) / (2.0 - self.alpha - self.beta)

    @classmethod
    def stationary_start(cls, alpha: float, beta: float) -> "Markov":
        p_stat = (1.0 - beta) / (2.0 - alpha - beta)
        return cls(p1=p_stat, alpha=alpha, beta=beta)


TrialModel = IID | Markov


class Pmf:
    """Finite probability mass table plus explicit unaccounted tail mass.

    ``probs[i]`` is the probability of value ``offset + i``.  ``tail`` holds
    whatever mass lies beyond the last tabulated value (zero for statistics
    with bounded support).  Entries within -1e-12 of zero are clamped to 0;
    anything more negative is a genuine defect and fails construction, as
    does a total that strays from 1 by more than 1e-9.
    """

    __slots__ = ("offset", "probs", "tail")

    def __init__(self, offset: int, probs, tail: float = 0.0):
        self.offset = int(offset)
        arr = np.asarray(probs, dtype=np.float64).copy()
        if arr.ndim != 1:
            raise ValueError("probs must be one-dimensional")
        bad = arr < -1e-12
        if bad.any():
            worst = float(arr[bad].min())
            raise ValueError(f"pmf entry {worst} below -1e-12; refusing to clamp")
        np.clip(arr, 0.0, None, out=arr)
        self.probs = arr
        if tail < -1e-12:
            raise ValueError(f"tail mass {tail} below -1e-12")
        self.tail = max(0.0, float(tail))
        total = float(self.probs.sum()) + self.tail
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"pmf total {total!r} is not 1 within 1e-9")

    def p(self, value: int) -> float:
        """Probability of an exact value (0.0 outside the tabulated range)."""
        i = value - self.offset
        if 0 <= i < len(self.probs):
            return float(self.probs[i])
        return 0.0

    @property
    def support_end(self) -> int:
        """Largest tabulated value."""
        return self.offset + len(self.probs) - 1

    def mean(self) -> float:
        """Mean over the tabulated range (ignores tail mass)."""
        values = np.arange(self.offset, self.offset + len(self.probs))
        return float(values @ self.probs)

    def second_moment(self) -> float:
        """Second raw moment over the tabulated range (ignores tail mass)."""
        values = np.arange(self.offset, self.offset + len(self.probs))
        return float((values.astype(np.float64) ** 2) @ self.probs)

    def __repr__(self):
        return (
            f"Pmf(offset={self.offset}, len={len(self.probs)}, "
            f"tail={self.tail:.3e})"
        )


def tv_distance(a: Pmf, b: Pmf) -> float:
    """Total variation distance between two pmf tables.

    Aligns the supports, treating each table's tail as mass on a shared
    "beyond the horizon" point.  Meaningful when both were truncated at the
    same horizon, which is how the cross-validation suites use it.
    """
    lo = min(a.offset, b.offset)
    hi = max(a.support_end, b.support_end)
    width = hi - lo + 1
    pa = np.zeros(width)
    pb = np.zeros(width)
    pa[a.offset - lo : a.offset - lo + len(a.probs)] = a.probs
    pb[b.offset - lo : b.offset - lo + len(b.probs)] = b.probs
    return 0.5 * (float(np.abs(pa - pb).sum()) + abs(a.tail - b.tail))
