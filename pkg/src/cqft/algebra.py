"""Complexified quaternion arithmetic.

A complexified quaternion is ``w + x i + y j + z k`` with complex ``w, x, y, z``.
The complex unit (Python's ``1j``, written ``I`` here) commutes with ``i, j, k``.

Two representations are supported:

* :class:`CQuat`, an immutable scalar value with operator overloading;
* numpy arrays of dtype ``complex128`` whose last axis has length 4, holding
  ``(w, x, y, z)``.  Signals use this form.

Both go through the same Hamilton product formula.
"""

from __future__ import annotations

import cmath
import math
from typing import NamedTuple

import numpy as np

from .errors import InvalidAxis

I = 1j

DEFAULT_TOL = 1e-9


def _hamilton(a0, a1, a2, a3, b0, b1, b2, b3):
    # Works for Python complex scalars and numpy arrays alike.
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


class Quat(NamedTuple):
    """A real quaternion, as returned by :func:`re_part` and :func:`im_part`."""

    w: float
    x: float
    y: float
    z: float

    def dot(self, other: "Quat") -> float:
        return self.w * other.w + self.x * other.x + self.y * other.y + self.z * other.z

    def norm(self) -> float:
        """Sum of squares of the components (no square root)."""
        return self.dot(self)


class CQuat:
    """Immutable complexified quaternion ``w + x i + y j + z k``."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0j, x=0j, y=0j, z=0j):
        object.__setattr__(self, "w", complex(w))
        object.__setattr__(self, "x", complex(x))
        object.__setattr__(self, "y", complex(y))
        object.__setattr__(self, "z", complex(z))

    def __setattr__(self, name, value):
        raise AttributeError("CQuat is immutable")

    @classmethod
    def from_array(cls, a) -> "CQuat":
        a = np.asarray(a)
        if a.shape != (4,):
            raise ValueError(f"expected 4 components, got shape {a.shape}")
        return cls(*(complex(c) for c in a))

    @classmethod
    def from_parts(cls, re, im) -> "CQuat":
        """Build ``re + im I`` from two real 4-sequences."""
        return cls(*(complex(r, m) for r, m in zip(re, im)))

    @classmethod
    def pure(cls, x=0j, y=0j, z=0j) -> "CQuat":
        return cls(0j, x, y, z)

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=complex)

    def components(self) -> tuple[complex, complex, complex, complex]:
        return (self.w, self.x, self.y, self.z)

    def vector(self) -> "CQuat":
        return CQuat(0j, self.x, self.y, self.z)

    def is_finite(self) -> bool:
        return all(cmath.isfinite(c) for c in self.components())

    def __iter__(self):
        return iter(self.components())

    def __eq__(self, other):
        if isinstance(other, CQuat):
            return self.components() == other.components()
        if isinstance(other, (int, float, complex)):
            return self.components() == (complex(other), 0j, 0j, 0j)
        return NotImplemented

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        return "CQuat({!r}, {!r}, {!r}, {!r})".format(*self.components())

    def __str__(self):
        def fmt(c):
            return f"({c.real:.6g}{c.imag:+.6g}I)"

        return "{} + {}i + {}j + {}k".format(*(fmt(c) for c in self.components()))

    def __neg__(self):
        return CQuat(-self.w, -self.x, -self.y, -self.z)

    def __pos__(self):
        return self

    def __add__(self, other):
        if isinstance(other, CQuat):
            return CQuat(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float, complex)):
            return CQuat(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (CQuat, int, float, complex)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, CQuat):
            return cq_mul(self, other)
        if isinstance(other, (int, float, complex)):
            return CQuat(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # Complex scalars commute with everything.
        if isinstance(other, (int, float, complex)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float, complex)):
            return CQuat(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented


ONE = CQuat(1)
QI = CQuat(0, 1)
QJ = CQuat(0, 0, 1)
QK = CQuat(0, 0, 0, 1)
ZERO = CQuat()

# i + j + k + (j - k)I, the worked example of a complex root of -1.
PAPER_AXIS = CQuat(0, 1, 1 + 1j, 1 - 1j)


def cq_mul(q: CQuat, p: CQuat) -> CQuat:
    return CQuat(*_hamilton(q.w, q.x, q.y, q.z, p.w, p.x, p.y, p.z))


def quat_conj(q: CQuat) -> CQuat:
    return CQuat(q.w, -q.x, -q.y, -q.z)


def complex_conj(q: CQuat) -> CQuat:
    return CQuat(q.w.conjugate(), q.x.conjugate(), q.y.conjugate(), q.z.conjugate())


def re_part(q: CQuat) -> Quat:
    return Quat(q.w.real, q.x.real, q.y.real, q.z.real)


def im_part(q: CQuat) -> Quat:
    return Quat(q.w.imag, q.x.imag, q.y.imag, q.z.imag)


def inner(q: CQuat, p: CQuat) -> complex:
    """Bilinear inner product: no conjugation, complex-valued, symmetric."""
    return q.w * p.w + q.x * p.x + q.y * p.y + q.z * p.z


def seminorm(q: CQuat) -> complex:
    """``<q, q> = w^2 + x^2 + y^2 + z^2``; vanishes for null quaternions."""
    return inner(q, q)


def principal_sqrt(s: complex) -> complex:
    """Square root with non-negative real part, and non-negative imaginary part on the cut."""
    r = cmath.sqrt(complex(s))
    if r.real == 0.0 and r.imag < 0.0:
        r = -r
    return r


def modulus(q: CQuat) -> complex:
    return principal_sqrt(seminorm(q))


def _magnitude(q: CQuat) -> float:
    return re_part(q).norm() + im_part(q).norm()


def is_null(q: CQuat, tol: float = DEFAULT_TOL) -> bool:
    """True when the semi-norm vanishes, relative to ``max(1, |Re q|^2 + |Im q|^2)``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return abs(seminorm(q)) <= tol * max(1.0, _magnitude(q))


def is_root_minus_one(q: CQuat, tol: float = DEFAULT_TOL) -> bool:
    """Check the conditions for ``q * q == -1``.

    ``q`` must be pure, its real and imaginary vector parts orthogonal, and
    ``|Re q|^2 - |Im q|^2 == 1``.  The tolerance is scaled by
    ``max(1, |Re q|^2 + |Im q|^2)``.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if not q.is_finite():
        return False
    re, im = re_part(q.vector()), im_part(q.vector())
    scaled = tol * max(1.0, re.norm() + im.norm())
    return (
        abs(q.w) <= scaled
        and abs(re.dot(im)) <= scaled
        and abs(re.norm() - im.norm() - 1.0) <= scaled
    )


def exp_axis(mu: CQuat, theta: float, tol: float = DEFAULT_TOL) -> CQuat:
    """``cos(theta) + mu sin(theta)`` for a root of -1 ``mu``."""
    if not is_root_minus_one(mu, tol):
        raise InvalidAxis(f"{mu!r} is not a root of -1")
    return math.cos(theta) + mu * math.sin(theta)


# Array forms.  ``a`` and ``b`` have a trailing axis of length 4.

def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Broadcasting Hamilton product of complexified quaternion arrays."""
    a = np.asarray(a)
    b = np.asarray(b)
    return np.stack(
        _hamilton(a[..., 0], a[..., 1], a[..., 2], a[..., 3],
                  b[..., 0], b[..., 1], b[..., 2], b[..., 3]),
        axis=-1,
    )


def seminorm_array(a: np.ndarray) -> np.ndarray:
    a = np.asarray(a)
    return np.sum(a * a, axis=-1)


def is_null_array(a: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = np.asarray(a, dtype=complex)
    magnitude = np.sum(a.real**2 + a.imag**2, axis=-1)
    return np.abs(seminorm_array(a)) <= tol * np.maximum(1.0, magnitude)
