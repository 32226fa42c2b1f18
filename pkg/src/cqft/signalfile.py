"""CSV signal files.

One sample per line as eight comma-separated decimals::

    w_re,w_im,x_re,x_im,y_re,y_im,z_re,z_im

Lines starting with ``#`` are comments.  A ``# dims: R C`` comment marks a 2-D
signal stored in row-major order; without it the file is 1-D.
"""

from __future__ import annotations

import re
from typing import Iterable, TextIO

import numpy as np

COLUMNS = ("w_re", "w_im", "x_re", "x_im", "y_re", "y_im", "z_re", "z_im")

_DIMS = re.compile(r"^#\s*dims:\s*(\d+)\s+(\d+)\s*$")


class SignalFormatError(ValueError):
    pass


def _format(v: float) -> str:
    return "%.17g" % v


def write_signal(stream: TextIO, f: np.ndarray, comments: Iterable[str] = ()) -> None:
    f = np.asarray(f, dtype=complex)
    if f.ndim not in (2, 3) or f.shape[-1] != 4:
        raise ValueError(f"expected shape (N, 4) or (R, C, 4), got {f.shape}")
    for line in comments:
        stream.write(f"# {line}\n")
    if f.ndim == 3:
        stream.write(f"# dims: {f.shape[0]} {f.shape[1]}\n")
    stream.write("# " + ",".join(COLUMNS) + "\n")
    flat = f.reshape(-1, 4)
    parts = np.empty((flat.shape[0], 8))
    parts[:, 0::2] = flat.real
    parts[:, 1::2] = flat.imag
    for row in parts:
        stream.write(",".join(_format(v) for v in row) + "\n")


def read_signal(stream: TextIO) -> np.ndarray:
    """Parse a signal file; returns ``(N, 4)`` or ``(R, C, 4)``."""
    dims = None
    rows = []
    for lineno, line in enumerate(stream, 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _DIMS.match(line)
            if m:
                dims = (int(m.group(1)), int(m.group(2)))
            continue
        fields = line.split(",")
        if len(fields) != 8:
            raise SignalFormatError(f"line {lineno}: expected 8 fields, got {len(fields)}")
        try:
            values = [float(v) for v in fields]
        except ValueError as exc:
            raise SignalFormatError(f"line {lineno}: {exc}") from None
        if not all(np.isfinite(values)):
            raise SignalFormatError(f"line {lineno}: non-finite value")
        rows.append(values)
    if not rows:
        raise SignalFormatError("no samples")
    data = np.array(rows)
    f = np.empty((len(data), 4), dtype=complex)
    f.real = data[:, 0::2]
    f.imag = data[:, 1::2]
    if dims is None:
        return f
    r, c = dims
    if r < 1 or c < 1 or r * c != len(f):
        raise SignalFormatError(f"dims {r}x{c} do not match {len(f)} samples")
    return f.reshape(r, c, 4)
