"""File formats: the QSHC coefficient container and field ingestion.

QSHC layout (little endian):

    magic   4 bytes  b"QSHC"
    version u32      currently 1
    N1, N2  u32      translation grid
    M, L    u32      scale / shear counts
    scales  M  f64
    shears  L  f64
    weights M*L f64  row-major over (scale, shear)
    coeffs  M*L*N1*N2*4 f64, (m, l, n1, n2) row-major, 4 per quaternion

Field inputs: plain CSV (one N1 x N2 block, mapped to the real part of the
first symplectic component), 4-plane CSV (four stacked N1 x N2 blocks for
a0..a3), and binary PGM (P5, maxval 255, scaled to [0, 1]).
"""

from __future__ import annotations

import struct

import numpy as np

from .qft import QField, SPATIAL
from .qst import CoefficientVolume
from .shearlet import SamplingGrid

__all__ = [
    "QSHC_MAGIC",
    "QSHC_VERSION",
    "write_qshc",
    "read_qshc",
    "load_field",
    "save_field_csv4",
]

QSHC_MAGIC = b"QSHC"
QSHC_VERSION = 1


class QSHCError(ValueError):
    """Malformed or incompatible coefficient file."""


def write_qshc(path, vol: CoefficientVolume) -> None:
    coeffs = np.ascontiguousarray(vol.coeffs, dtype="<f8")
    m, l, n1, n2 = coeffs.shape[:4]
    scales = np.asarray(vol.grid.scales, dtype="<f8")
    shears = np.asarray(vol.grid.shears, dtype="<f8")
    weights = np.asarray(vol.grid.weights, dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(QSHC_MAGIC)
        fh.write(struct.pack("<5I", QSHC_VERSION, n1, n2, m, l))
        fh.write(scales.tobytes())
        fh.write(shears.tobytes())
        fh.write(weights.tobytes())
        fh.write(coeffs.tobytes())


def read_qshc(path, grid: SamplingGrid | None = None,
              extent=(1.0, 1.0)) -> CoefficientVolume:
    """Load a QSHC file.

    If `grid` is given, the stored scale/shear/weight tables must match it
    bit for bit; otherwise a grid cannot be reconstructed parametrically
    and the caller must supply one that reproduces the stored tables.
    """
    with open(path, "rb") as fh:
        head = fh.read(4)
        if head != QSHC_MAGIC:
            raise QSHCError(f"bad magic {head!r}, not a QSHC file")
        raw = fh.read(20)
        if len(raw) < 20:
            raise QSHCError("truncated header")
        version, n1, n2, m, l = struct.unpack("<5I", raw)
        if version != QSHC_VERSION:
            raise QSHCError(f"unsupported QSHC version {version}")
        scales = np.frombuffer(fh.read(8 * m), dtype="<f8")
        shears = np.frombuffer(fh.read(8 * l), dtype="<f8")
        weights = np.frombuffer(fh.read(8 * m * l), dtype="<f8")
        if scales.size < m or shears.size < l or weights.size < m * l:
            raise QSHCError("truncated grid tables")
        n_vals = m * l * n1 * n2 * 4
        data = np.frombuffer(fh.read(8 * n_vals), dtype="<f8")
        if data.size < n_vals:
            raise QSHCError("unexpected end of coefficient stream")
        if fh.read(1):
            raise QSHCError("trailing bytes after coefficient stream")
    coeffs = data.reshape(m, l, n1, n2, 4).astype(float)
    if grid is None:
        raise QSHCError("a SamplingGrid matching the stored tables is required")
    if (grid.scales.size != m or grid.shears.size != l
            or not np.array_equal(grid.scales, scales)
            or not np.array_equal(grid.shears, shears)
            or not np.array_equal(grid.weights.ravel(), weights)):
        raise QSHCError("stored grid tables do not match the configured grid")
    return CoefficientVolume(coeffs, grid, tuple(extent))


def _read_csv_matrix(path):
    return np.loadtxt(path, delimiter=",", dtype=float, ndmin=2)


def load_field(path, fmt: str, extent=(1.0, 1.0)) -> QField:
    """Read an input field.  fmt is one of 'csv', 'csv4', 'pgm'."""
    if fmt == "csv":
        data = _read_csv_matrix(path)
        samples = np.zeros(data.shape + (4,))
        samples[..., 0] = data
    elif fmt == "csv4":
        data = _read_csv_matrix(path)
        if data.shape[0] % 4:
            raise ValueError("csv4 input must stack four equal blocks")
        n1 = data.shape[0] // 4
        samples = np.stack([data[k * n1:(k + 1) * n1] for k in range(4)],
                           axis=-1)
    elif fmt == "pgm":
        img = _read_pgm(path)
        samples = np.zeros(img.shape + (4,))
        samples[..., 0] = img / 255.0
    else:
        raise ValueError(f"unknown input format {fmt!r}")
    return QField(samples, SPATIAL, tuple(extent))


def _read_pgm(path) -> np.ndarray:
    with open(path, "rb") as fh:
        data = fh.read()
    # header: magic, width, height, maxval; '#' comments allowed
    tokens = []
    i = 0
    while len(tokens) < 4:
        if i >= len(data):
            raise ValueError("truncated PGM header")
        c = data[i:i + 1]
        if c == b"#":
            while i < len(data) and data[i:i + 1] != b"\n":
                i += 1
        elif c.isspace():
            i += 1
        else:
            j = i
            while j < len(data) and not data[j:j + 1].isspace():
                j += 1
            tokens.append(data[i:j])
            i = j
    if tokens[0] != b"P5":
        raise ValueError("only binary PGM (P5) is supported")
    width, height, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    if maxval != 255:
        raise ValueError("PGM maxval must be 255")
    i += 1  # single whitespace after maxval
    pixels = np.frombuffer(data, dtype=np.uint8, count=width * height, offset=i)
    if pixels.size < width * height:
        raise ValueError("truncated PGM pixel data")
    return pixels.reshape(height, width).astype(float)


def save_field_csv4(path, fld: QField) -> None:
    """Write a quaternion field as four stacked CSV blocks (a0..a3)."""
    blocks = [fld.samples[..., k] for k in range(4)]
    np.savetxt(path, np.vstack(blocks), delimiter=",", fmt="%.17g")
