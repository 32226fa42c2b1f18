"""Complexified quaternion (biquaternion) Fourier transform."""

__version__ = "0.1.0"

from .algebra import (
    DEFAULT_TOL,
    I,
    ONE,
    PAPER_AXIS,
    QI,
    QJ,
    QK,
    ZERO,
    CQuat,
    Quat,
    complex_conj,
    cq_mul,
    exp_axis,
    im_part,
    inner,
    is_null,
    is_root_minus_one,
    modulus,
    qmul,
    quat_conj,
    re_part,
    seminorm,
)
from .basis import BasisCoords, OrthonormalBasis, complete_basis, from_basis, to_basis
from .cfft import FORWARD, INVERSE, cdft, cfft
from .errors import CQFTError, DegenerateAxisMisuse, DegenerateBasis, InvalidAxis
from .transform import (
    DEGENERATE_I,
    LEFT,
    RIGHT,
    TransformSpec,
    count_null_samples,
    cqdft,
    cqdft2,
    cqfft,
    cqfft2,
    null_diagnostics,
)
