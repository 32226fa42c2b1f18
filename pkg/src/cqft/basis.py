"""Complex orthonormal basis (mu, nu, xi) built around a transform axis."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    QI,
    QJ,
    QK,
    CQuat,
    cq_mul,
    inner,
    is_root_minus_one,
    principal_sqrt,
    seminorm,
)
from .errors import DegenerateBasis, InvalidAxis

_CANDIDATES = (QI, QJ, QK)


class BasisCoords(NamedTuple):
    """Coordinates of a sample on ``(1, mu, nu, xi)``."""

    w: complex
    xp: complex
    yp: complex
    zp: complex


@dataclass(frozen=True, eq=False)
class OrthonormalBasis:
    """Unit pure complexified quaternions ``mu, nu, xi`` with ``mu nu = xi``.

    ``matrix`` holds the ``i, j, k`` components of ``mu``, ``nu`` and ``xi`` as
    its rows.  It is complex orthogonal: ``matrix @ matrix.T`` is the identity
    (plain transpose, no conjugation).
    """

    mu: CQuat
    nu: CQuat
    xi: CQuat
    matrix: np.ndarray

    def to_coords(self, samples: np.ndarray) -> np.ndarray:
        """Vectorised :func:`to_basis` over ``(..., 4)`` arrays."""
        samples = np.asarray(samples, dtype=complex)
        out = np.empty_like(samples)
        out[..., 0] = samples[..., 0]
        out[..., 1:] = samples[..., 1:] @ self.matrix.T
        return out

    def from_coords(self, coords: np.ndarray) -> np.ndarray:
        """Vectorised :func:`from_basis` over ``(..., 4)`` arrays."""
        coords = np.asarray(coords, dtype=complex)
        out = np.empty_like(coords)
        out[..., 0] = coords[..., 0]
        out[..., 1:] = coords[..., 1:] @ self.matrix
        return out


def complete_basis(mu: CQuat, tol: float = DEFAULT_TOL) -> OrthonormalBasis:
    """Extend the axis ``mu`` to an orthonormal basis.

    Each of ``i, j, k`` is projected orthogonally to ``mu``; the projection with
    the largest ``|seminorm|`` is kept (first wins on ties), normalised by the
    principal square root of its semi-norm, and ``xi = mu nu``.

    Raises
    ------
    InvalidAxis
        ``mu`` is not a root of -1.
    DegenerateBasis
        every projection is null.
    """
    if not is_root_minus_one(mu, tol):
        raise InvalidAxis(f"{mu!r} is not a root of -1")
    best, best_norm = None, None
    for c in _CANDIDATES:
        p = c - inner(c, mu) * mu
        s = seminorm(p)
        if best_norm is None or abs(s) > abs(best_norm):
            best, best_norm = p, s
    if abs(best_norm) <= tol:
        raise DegenerateBasis(f"no non-null projection orthogonal to {mu!r}")
    nu = best / principal_sqrt(best_norm)
    # mu nu = -<mu, nu> + mu x nu; the scalar part is rounding noise.
    xi = cq_mul(mu, nu).vector()
    matrix = np.array(
        [[mu.x, mu.y, mu.z], [nu.x, nu.y, nu.z], [xi.x, xi.y, xi.z]], dtype=complex
    )
    return OrthonormalBasis(mu, nu, xi, matrix)


def to_basis(q: CQuat, basis: OrthonormalBasis) -> BasisCoords:
    v = q.vector()
    return BasisCoords(q.w, inner(basis.mu, v), inner(basis.nu, v), inner(basis.xi, v))


def from_basis(c: BasisCoords, basis: OrthonormalBasis) -> CQuat:
    return CQuat.from_array(basis.from_coords(np.array(c, dtype=complex)))
