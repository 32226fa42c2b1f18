"""Discrete complexified quaternion Fourier transform.

Forward transform with a left kernel::

    F[u] = sum_n exp(-2 pi mu n u / N) f[n]

and the inverse uses ``+`` in the exponent and a ``1/N`` scale.  With a right
kernel the exponential multiplies ``f[n]`` from the right instead.

Signals are ``complex128`` arrays of shape ``(N, 4)`` (1-D) or ``(R, C, 4)``
(2-D); the last axis holds ``(w, x, y, z)``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

import numpy as np

from .algebra import DEFAULT_TOL, CQuat, is_null_array, is_root_minus_one, qmul
from .basis import complete_basis
from .cfft import FORWARD, INVERSE, FFTProvider, cfft, check_direction, opposite
from .errors import DegenerateAxisMisuse, InvalidAxis

LEFT = "left"
RIGHT = "right"

# Direct DFT works on blocks of output bins holding at most this many products.
_BLOCK_SIZE = 1 << 18


class _DegenerateI:
    """Marker for the degenerate axis ``I``, usable only on scalar signals."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "DEGENERATE_I"

    def __reduce__(self):
        return (_DegenerateI, ())


DEGENERATE_I = _DegenerateI()

Axis = Union[CQuat, _DegenerateI]


@dataclass(frozen=True)
class TransformSpec:
    axis: Axis
    side: str = LEFT
    direction: str = FORWARD
    tol: float = DEFAULT_TOL

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be {LEFT!r} or {RIGHT!r}, got {self.side!r}")
        check_direction(self.direction)
        if self.axis is DEGENERATE_I:
            return
        if not isinstance(self.axis, CQuat) or not is_root_minus_one(self.axis, self.tol):
            raise InvalidAxis(f"{self.axis!r} is not a root of -1")

    @property
    def degenerate(self) -> bool:
        return self.axis is DEGENERATE_I

    @property
    def inverse(self) -> bool:
        return self.direction == INVERSE

    def inverted(self) -> "TransformSpec":
        return replace(self, direction=opposite(self.direction))


def as_signal(samples) -> np.ndarray:
    """Validate and convert 1-D samples to an ``(N, 4)`` complex array.

    Accepts an array-like of shape ``(N, 4)`` or a sequence of :class:`CQuat`.
    """
    if len(samples) and isinstance(samples[0], CQuat):
        samples = [q.components() for q in samples]
    f = np.array(samples, dtype=complex)
    if f.ndim != 2 or f.shape[1] != 4:
        raise ValueError(f"expected shape (N, 4), got {f.shape}")
    if f.shape[0] < 1:
        raise ValueError("signal must have at least one sample")
    if not np.all(np.isfinite(f)):
        raise ValueError("signal contains NaN or Inf")
    return f


def as_signal2d(samples) -> np.ndarray:
    f = np.array(samples, dtype=complex)
    if f.ndim != 3 or f.shape[2] != 4:
        raise ValueError(f"expected shape (R, C, 4), got {f.shape}")
    if f.shape[0] < 1 or f.shape[1] < 1:
        raise ValueError("signal must have at least one row and one column")
    if not np.all(np.isfinite(f)):
        raise ValueError("signal contains NaN or Inf")
    return f


def _check_degenerate(f: np.ndarray, spec: TransformSpec) -> None:
    if spec.degenerate and np.any(f[..., 1:] != 0):
        raise DegenerateAxisMisuse("the degenerate axis I requires a signal with no vector part")


# Both engines below work on batches shaped (B, N, 4), transforming along axis 1.

def _direct(f: np.ndarray, spec: TransformSpec) -> np.ndarray:
    b, n, _ = f.shape
    sign = 1.0 if spec.inverse else -1.0
    idx = np.arange(n)
    out = np.empty_like(f)
    block = max(1, _BLOCK_SIZE // (b * n))
    if not spec.degenerate:
        mu = spec.axis.to_array()
    for start in range(0, n, block):
        u = idx[start:start + block]
        theta = 2 * np.pi * (np.outer(u, idx) % n) / n
        if spec.degenerate:
            kernel = np.exp(sign * 1j * theta)
            out[:, start:start + block] = np.sum(kernel[None, :, :, None] * f[:, None], axis=2)
            continue
        kernel = sign * np.sin(theta)[..., None] * mu
        kernel[..., 0] += np.cos(theta)
        if spec.side == LEFT:
            prod = qmul(kernel[None], f[:, None])
        else:
            prod = qmul(f[:, None], kernel[None])
        out[:, start:start + block] = prod.sum(axis=2)
    return out / n if spec.inverse else out


def _flipped_fft(fft: FFTProvider, x: np.ndarray, direction: str) -> np.ndarray:
    # Opposite exponent sign, same scale convention as `direction`.
    n = x.shape[-1]
    out = fft(x, opposite(direction))
    return out / n if direction == INVERSE else out * n


def _four_transforms(f: np.ndarray, spec: TransformSpec, fft: FFTProvider) -> np.ndarray:
    basis = complete_basis(spec.axis, spec.tol)
    coords = basis.to_coords(f)
    w, xp, yp, zp = (coords[..., k] for k in range(4))
    # In each pair I stands in for mu; the second pair is multiplied by nu on the right.
    first = np.stack((w.real + 1j * xp.real, w.imag + 1j * xp.imag))
    second = np.stack((yp.real + 1j * zp.real, yp.imag + 1j * zp.imag))
    c1, c2 = fft(first, spec.direction)
    if spec.side == LEFT:
        c3, c4 = fft(second, spec.direction)
    else:
        # nu anticommutes with mu, so moving it past the kernel flips the exponent.
        c3, c4 = _flipped_fft(fft, second, spec.direction)
    coords = np.stack(
        (
            c1.real + 1j * c2.real,
            c1.imag + 1j * c2.imag,
            c3.real + 1j * c4.real,
            c3.imag + 1j * c4.imag,
        ),
        axis=-1,
    )
    return basis.from_coords(coords)


def _two_transforms(a: np.ndarray, spec: TransformSpec, fft: FFTProvider) -> np.ndarray:
    """Transform a real-valued batch ``a`` of shape ``(B, N, 4)``.

    The componentwise complex transform ``C = A -+ I B`` of the four real
    sequences gives ``F = Re C + mu Im C`` (left) or ``Re C + (Im C) mu``
    (right).  Two real sequences are packed into each complex transform.
    """
    n = a.shape[1]
    packed = np.stack((a[..., 0] + 1j * a[..., 1], a[..., 2] + 1j * a[..., 3]))
    z = fft(packed, spec.direction)
    zr = z[..., (-np.arange(n)) % n].conj()
    even = (z + zr) / 2
    odd = (z - zr) / 2j
    c = np.stack((even[0], odd[0], even[1], odd[1]), axis=-1)
    mu = spec.axis.to_array()
    if spec.side == LEFT:
        vec = qmul(mu, c.imag.astype(complex))
    else:
        vec = qmul(c.imag.astype(complex), mu)
    return c.real + vec


def _fast(f: np.ndarray, spec: TransformSpec, fft: FFTProvider, fast_paths: bool) -> np.ndarray:
    if spec.degenerate:
        out = np.zeros_like(f)
        out[..., 0] = fft(f[..., 0], spec.direction)
        return out
    if fast_paths:
        if not np.any(f.imag):
            return _two_transforms(f.real, spec, fft)
        if not np.any(f.real):
            return 1j * _two_transforms(f.imag, spec, fft)
    return _four_transforms(f, spec, fft)


def cqdft(f, spec: TransformSpec) -> np.ndarray:
    """Direct O(N^2) transform evaluated in complexified quaternion arithmetic."""
    f = as_signal(f)
    _check_degenerate(f, spec)
    return _direct(f[None], spec)[0]


def cqfft(f, spec: TransformSpec, *, fft: FFTProvider = cfft, fast_paths: bool = True) -> np.ndarray:
    """Fast transform through four complex FFTs in the basis built around the axis.

    Real or imaginary signals need only two complex FFTs; a scalar signal with
    the degenerate axis ``I`` needs one.  ``fast_paths=False`` forces the
    general four-transform route.
    """
    f = as_signal(f)
    _check_degenerate(f, spec)
    return _fast(f[None], spec, fft, fast_paths)[0]


def _rows_then_columns(f: np.ndarray, transform) -> np.ndarray:
    f = transform(f)
    return transform(f.transpose(1, 0, 2)).transpose(1, 0, 2)


def cqfft2(f, spec: TransformSpec, *, fft: FFTProvider = cfft, fast_paths: bool = True) -> np.ndarray:
    """2-D transform: :func:`cqfft` along every row, then along every column."""
    f = as_signal2d(f)
    _check_degenerate(f, spec)
    return _rows_then_columns(f, lambda g: _fast(g, spec, fft, fast_paths))


def cqdft2(f, spec: TransformSpec) -> np.ndarray:
    """Direct counterpart of :func:`cqfft2`."""
    f = as_signal2d(f)
    _check_degenerate(f, spec)
    return _rows_then_columns(f, lambda g: _direct(g, spec))


def transform(f, spec: TransformSpec, engine: str = "fast") -> np.ndarray:
    """Dispatch on dimensionality (``(N, 4)`` or ``(R, C, 4)``) and engine name."""
    f = np.asarray(f, dtype=complex)
    if engine not in ("fast", "direct"):
        raise ValueError(f"engine must be 'fast' or 'direct', got {engine!r}")
    if f.ndim == 3:
        return cqfft2(f, spec) if engine == "fast" else cqdft2(f, spec)
    return cqfft(f, spec) if engine == "fast" else cqdft(f, spec)


def _nonzero(f: np.ndarray) -> np.ndarray:
    return np.any(f != 0, axis=-1)


def count_null_samples(f, tol: float = DEFAULT_TOL) -> int:
    """Number of non-zero samples whose semi-norm vanishes."""
    f = np.asarray(f, dtype=complex)
    return int(np.count_nonzero(is_null_array(f, tol) & _nonzero(f)))


def null_diagnostics(f, tol: float = DEFAULT_TOL) -> dict:
    f = np.asarray(f, dtype=complex)
    return {
        "samples": int(np.prod(f.shape[:-1])),
        "null": count_null_samples(f, tol),
        "zero": int(np.count_nonzero(~_nonzero(f))),
    }
