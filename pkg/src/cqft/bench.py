"""Timing of the direct transform against the fast one."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

import numpy as np

from .sampling import random_signal
from .transform import TransformSpec, cqdft, cqfft

# Correctness gate applied to every benchmarked size.
AGREEMENT_TOL = 1e-9


@dataclass
class BenchResult:
    n: int
    direct_s: float
    fast_s: float
    max_rel_err: float

    @property
    def ratio(self) -> float:
        return self.fast_s / self.direct_s


def median_time(fn, reps: int) -> float:
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def relative_error(a: np.ndarray, b: np.ndarray) -> float:
    scale = max(np.max(np.abs(b)), np.finfo(float).tiny)
    return float(np.max(np.abs(a - b)) / scale)


def run_bench(sizes, spec: TransformSpec, reps: int = 3, seed: int = 0) -> list[BenchResult]:
    """Median wall time of :func:`cqdft` and :func:`cqfft` for each size.

    Raises ``AssertionError`` if the two engines disagree beyond ``AGREEMENT_TOL``.
    """
    rng = np.random.default_rng(seed)
    results = []
    for n in sizes:
        f = random_signal(rng, n)
        direct = cqdft(f, spec)
        fast = cqfft(f, spec)
        err = relative_error(fast, direct)
        if err > AGREEMENT_TOL:
            raise AssertionError(f"N={n}: fast and direct engines differ by {err:.3e}")
        results.append(
            BenchResult(
                n=n,
                direct_s=median_time(lambda: cqdft(f, spec), reps),
                fast_s=median_time(lambda: cqfft(f, spec), max(reps, 5)),
                max_rel_err=err,
            )
        )
    return results
