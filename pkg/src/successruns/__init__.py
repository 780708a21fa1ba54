"""Exact distribution theory for success runs in binary sequences.

Covers waiting times for the first and r-th run of length k, run counts
under the three standard counting conventions, the longest run, and the
order-k Fibonacci numbers they generate classically — for independent
trials and for a two-state Markov chain — plus an exhaustive-enumeration
oracle, a seeded simulator, and likelihood fitting from observed waits.
"""

from .checks import CheckResult, diff_expected, run_all, write_ledger
from .fibk import fib_k, fib_k_dresden, fib_k_spickerman
from .geometric import (
    default_vmax,
    longest_run_pmf,
    vk_pgf,
    vk_pmf,
    vk_pmf_closedform_k2,
)
from .inference import FitResult, bootstrap_se, fit_iid, fit_markov
from .models import IID, Markov, Pmf, tv_distance
from .oracle import (
    MAX_ENUM_TRIALS,
    FirstRunWait,
    LongestRun,
    RthRunWait,
    RunCount,
    SeededStream,
    enumerate_exact,
    sample_waiting_times,
    simulate,
)
from .polyseries import Poly, RationalGF
from .rth_waiting import RunMoments, Scheme, trk_moments, trk_pgf, trk_pmf
from .run_counts import count_runs, counts_moments, counts_pmf

__all__ = [
    "CheckResult",
    "FirstRunWait",
    "FitResult",
    "IID",
    "LongestRun",
    "MAX_ENUM_TRIALS",
    "Markov",
    "Pmf",
    "Poly",
    "RationalGF",
    "RthRunWait",
    "RunCount",
    "RunMoments",
    "Scheme",
    "SeededStream",
    "bootstrap_se",
    "count_runs",
    "counts_moments",
    "counts_pmf",
    "default_vmax",
    "diff_expected",
    "enumerate_exact",
    "fib_k",
    "fib_k_dresden",
    "fib_k_spickerman",
    "fit_iid",
    "fit_markov",
    "longest_run_pmf",
    "run_all",
    "sample_waiting_times",
    "simulate",
    "tv_distance",
    "trk_moments",
    "trk_pgf",
    "trk_pmf",
    "vk_pgf",
    "vk_pmf",
    "vk_pmf_closedform_k2",
    "write_ledger",
]

__version__ = "0.1.0"
