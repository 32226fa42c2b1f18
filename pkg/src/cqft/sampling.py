"""Seeded generators for axes, null quaternions and test signals."""

from __future__ import annotations

import numpy as np

from .algebra import CQuat


def _unit(v: np.ndarray) -> np.ndarray:
    return v / np.linalg.norm(v)


def _orthogonal_unit(rng: np.random.Generator, a: np.ndarray) -> np.ndarray:
    b = rng.standard_normal(a.shape)
    b -= (b @ a) / (a @ a) * a
    return _unit(b)


def random_axis(rng: np.random.Generator, max_imag: float = 2.0) -> CQuat:
    """A root of -1 ``a + b I`` with real pure ``a``, ``b``, ``a . b = 0`` and ``|a|^2 - |b|^2 = 1``.

    ``|b|^2`` is uniform in ``[0, max_imag^2]``.
    """
    a = _unit(rng.standard_normal(3))
    b = _orthogonal_unit(rng, a)
    t = rng.uniform(0.0, max_imag**2)
    v = np.sqrt(1.0 + t) * a + 1j * np.sqrt(t) * b
    return CQuat(0, *v)


def random_null(rng: np.random.Generator, scale: float = 1.0) -> CQuat:
    """A non-zero quaternion with orthogonal real and imaginary parts of equal norm."""
    a = rng.standard_normal(4)
    b = _orthogonal_unit(rng, a) * np.linalg.norm(a)
    return CQuat.from_array(scale * (a + 1j * b))


def random_cquat(rng: np.random.Generator) -> CQuat:
    return CQuat.from_array(rng.standard_normal(4) + 1j * rng.standard_normal(4))


def random_signal(rng: np.random.Generator, shape) -> np.ndarray:
    """Gaussian complexified quaternion samples; ``shape`` excludes the trailing 4."""
    shape = (shape,) if np.isscalar(shape) else tuple(shape)
    return rng.standard_normal(shape + (4,)) + 1j * rng.standard_normal(shape + (4,))


def random_real_signal(rng: np.random.Generator, shape) -> np.ndarray:
    shape = (shape,) if np.isscalar(shape) else tuple(shape)
    return rng.standard_normal(shape + (4,)).astype(complex)
