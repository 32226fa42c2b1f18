"""Complex FFT engine.

All transforms act along the last axis, so a batch of signals can be passed as
a 2-D array.  The forward kernel is ``exp(-2 pi I n u / N)``; the inverse uses
the opposite sign and is scaled by ``1/N``.

Power-of-two lengths use an iterative radix-2 decimation-in-time FFT, other
lengths use Bluestein's chirp-z algorithm on top of it.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable

import numpy as np

FORWARD = "forward"
INVERSE = "inverse"

FFTProvider = Callable[[np.ndarray, str], np.ndarray]


def check_direction(direction: str) -> bool:
    """Return ``True`` for the inverse direction."""
    if direction == FORWARD:
        return False
    if direction == INVERSE:
        return True
    raise ValueError(f"direction must be {FORWARD!r} or {INVERSE!r}, got {direction!r}")


def opposite(direction: str) -> str:
    return FORWARD if direction == INVERSE else INVERSE


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


@lru_cache(maxsize=64)
def _bit_reversal(n: int) -> np.ndarray:
    bits = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return _readonly(rev)


@lru_cache(maxsize=64)
def twiddles(n: int, inverse: bool) -> np.ndarray:
    """``exp(-+2 pi I k / n)`` for ``k < n/2``, shared by every radix-2 stage."""
    sign = 1.0 if inverse else -1.0
    return _readonly(np.exp(sign * 2j * np.pi * np.arange(n // 2) / n))


def _radix2(x: np.ndarray, inverse: bool) -> np.ndarray:
    # Unscaled.
    n = x.shape[-1]
    batch = x.shape[:-1]
    x = x[..., _bit_reversal(n)]
    tw = twiddles(n, inverse)
    m = 2
    while m <= n:
        half = m // 2
        blocks = x.reshape(*batch, n // m, m)
        u = blocks[..., :half]
        t = blocks[..., half:] * tw[:: n // m]
        x = np.concatenate((u + t, u - t), axis=-1).reshape(*batch, n)
        m *= 2
    return x


@lru_cache(maxsize=64)
def _chirp(n: int, inverse: bool) -> tuple[np.ndarray, np.ndarray, int]:
    m = 1
    while m < 2 * n - 1:
        m *= 2
    sign = 1.0 if inverse else -1.0
    k = np.arange(n)
    # k^2 mod 2n keeps the phase argument small for large n.
    chirp = np.exp(sign * 1j * np.pi * ((k * k) % (2 * n)) / n)
    b = np.zeros(m, dtype=complex)
    b[:n] = chirp.conj()
    b[m - n + 1:] = chirp[1:].conj()[::-1]
    return _readonly(chirp), _readonly(_radix2(b, False)), m


def _bluestein(x: np.ndarray, inverse: bool) -> np.ndarray:
    # Unscaled.
    n = x.shape[-1]
    chirp, kernel, m = _chirp(n, inverse)
    a = np.zeros(x.shape[:-1] + (m,), dtype=complex)
    a[..., :n] = x * chirp
    conv = _radix2(_radix2(a, False) * kernel, True) / m
    return chirp * conv[..., :n]


def cfft(x, direction: str = FORWARD) -> np.ndarray:
    """Fast complex DFT along the last axis, with ``1/N`` on the inverse."""
    inverse = check_direction(direction)
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    if n < 1:
        raise ValueError("signal length must be at least 1")
    if n == 1:
        return x.copy()
    out = _radix2(x, inverse) if is_power_of_two(n) else _bluestein(x, inverse)
    return out / n if inverse else out


def cdft(x, direction: str = FORWARD) -> np.ndarray:
    """Direct O(N^2) complex DFT along the last axis; reference for :func:`cfft`."""
    inverse = check_direction(direction)
    x = np.asarray(x, dtype=complex)
    n = x.shape[-1]
    if n < 1:
        raise ValueError("signal length must be at least 1")
    idx = np.arange(n)
    sign = 1.0 if inverse else -1.0
    kernel = np.exp(sign * 2j * np.pi * (np.outer(idx, idx) % n) / n)
    out = x @ kernel.T
    return out / n if inverse else out


def numpy_fft(x, direction: str = FORWARD) -> np.ndarray:
    """Provider backed by :mod:`numpy.fft`, same contract as :func:`cfft`."""
    inverse = check_direction(direction)
    x = np.asarray(x, dtype=complex)
    return np.fft.ifft(x, axis=-1) if inverse else np.fft.fft(x, axis=-1)
