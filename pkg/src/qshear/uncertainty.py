"""Uncertainty diagnostics for the quaternion shearlet transform.

Spatial coordinates are read on the centered lattice t in [-L/2, L/2)^2
(the quadratic and logarithmic weights are meaningless on [0, L) with
wrap-around), so inputs should be essentially supported in the central
half of the grid.  The logarithm's singular cell at the origin is assigned
the average of log||t|| over that cell, computed by 16 x 16 midpoint
sub-sampling, which keeps the log moments finite and convergent under
refinement.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

import numpy as np
from scipy.special import digamma

from .qft import (
    FREQUENCY,
    QField,
    SPATIAL,
    centered_coords,
    energy,
    freq_lattice,
    symplectic_fft,
)
from .quaternion import qnorm2
from .qst import CoefficientVolume, QGeneratorSpec, admissibility_q, qst_forward
from .shearlet import AdmissibilityTable, SamplingGrid

__all__ = [
    "UncertaintyReport",
    "moments",
    "heisenberg",
    "log_uncertainty",
    "log_inequality_constant",
]


@dataclass(frozen=True)
class UncertaintyReport:
    """Measured sides of the uncertainty inequalities.

    The Heisenberg block: spatial_spread is the coefficient-domain second
    moment, freq_spread the frequency second moment of the field, rhs the
    sqrt(C)/(2 pi) ||F||^2 bound, ratio = lhs / rhs (>= 1).  The log block
    mirrors it with logarithmic weights; gap = lhs - rhs (>= 0).
    """

    spatial_spread: float | None = None
    freq_spread: float | None = None
    rhs: float | None = None
    ratio: float | None = None
    log_spatial: float | None = None
    log_freq: float | None = None
    log_rhs: float | None = None
    gap: float | None = None

    def as_dict(self) -> dict:
        return asdict(self)

    def merged(self, other: "UncertaintyReport") -> "UncertaintyReport":
        vals = {k: (v if v is not None else getattr(other, k))
                for k, v in asdict(self).items()}
        return UncertaintyReport(**vals)


def _origin_cell_log(h1: float, h2: float, nsub: int = 16) -> float:
    """Average of log||t|| over the origin cell [-h1/2,h1/2) x [-h2/2,h2/2)."""
    s1 = ((np.arange(nsub) + 0.5) / nsub - 0.5) * h1
    s2 = ((np.arange(nsub) + 0.5) / nsub - 0.5) * h2
    x, y = np.meshgrid(s1, s2, indexing="ij")
    return float(np.mean(0.5 * np.log(x * x + y * y)))


def _log_weight(c1, c2, h1, h2):
    r2 = c1 * c1 + c2 * c2
    origin = r2 == 0.0
    out = np.empty_like(r2)
    out[~origin] = 0.5 * np.log(r2[~origin])
    if origin.any():
        out[origin] = _origin_cell_log(h1, h2)
    return out


def moments(fld: QField, kind: str = "norm2") -> float:
    """Weighted density moment of a field.

    kind = "norm2": sum ||t||^2 ||F[t]||^2 with the domain quadrature
    weight, on centered spatial coordinates or the signed frequency
    lattice.  kind = "log": same with log||t||; the origin sample uses the
    cell-averaged logarithm.
    """
    n1, n2 = fld.shape
    if fld.domain == SPATIAL:
        c1, c2 = centered_coords(n1, n2, fld.extent)
        w = fld.cell_area
        h1 = fld.extent[0] / n1
        h2 = fld.extent[1] / n2
    else:
        c1, c2 = freq_lattice(n1, n2, fld.extent)
        w = 1.0 / (fld.extent[0] * fld.extent[1])
        h1 = 1.0 / fld.extent[0]
        h2 = 1.0 / fld.extent[1]
    dens = qnorm2(fld.samples)
    if kind == "norm2":
        weight = c1 * c1 + c2 * c2
    elif kind == "log":
        weight = _log_weight(c1, c2, h1, h2)
    else:
        raise ValueError(f"unknown moment kind {kind!r}")
    return float((weight * dens).sum() * w)


def _volume_moment(vol: CoefficientVolume, kind: str) -> float:
    """Triple-sum moment of a coefficient volume over (a, s, t)."""
    n1, n2 = vol.field_shape
    l1, l2 = vol.extent
    c1, c2 = centered_coords(n1, n2, vol.extent)
    if kind == "norm2":
        weight = c1 * c1 + c2 * c2
    else:
        weight = _log_weight(c1, c2, l1 / n1, l2 / n2)
    cell = l1 * l2 / (n1 * n2)
    per_slice = (weight[None, None] * qnorm2(vol.coeffs)).sum(axis=(2, 3)) * cell
    return float((per_slice * vol.grid.weights).sum())


def heisenberg(fld: QField, gen: QGeneratorSpec, grid: SamplingGrid,
               table: AdmissibilityTable | None = None,
               vol: CoefficientVolume | None = None) -> UncertaintyReport:
    """Heisenberg-type inequality for the shearlet coefficients.

    lhs = sqrt(spatial_spread) * sqrt(C * freq_spread), using the exact
    frequency-side collapse of the coefficient spreads; rhs is
    sqrt(C)/(2 pi) ||F||^2.  For admissible nonzero inputs ratio >= 1.
    """
    if energy(fld) == 0.0:
        raise ValueError("heisenberg ratio is undefined for the zero field")
    if table is None:
        table = admissibility_q(gen, grid, fld.shape, fld.extent)
    if vol is None:
        vol = qst_forward(fld, gen, grid)
    spatial = _volume_moment(vol, "norm2")
    freq = moments(symplectic_fft(fld), "norm2")
    c = table.c_value
    lhs = np.sqrt(spatial) * np.sqrt(c * freq)
    rhs = np.sqrt(c) / (2.0 * np.pi) * energy(fld)
    return UncertaintyReport(spatial_spread=spatial, freq_spread=freq,
                             rhs=float(rhs), ratio=float(lhs / rhs))


def log_inequality_constant() -> float:
    """digamma(1/2) - log(pi) = -gamma - 2 log 2 - log pi = -3.108240..."""
    return float(digamma(0.5) - np.log(np.pi))


def log_uncertainty(fld: QField, gen: QGeneratorSpec, grid: SamplingGrid,
                    table: AdmissibilityTable | None = None,
                    vol: CoefficientVolume | None = None) -> UncertaintyReport:
    """Logarithmic uncertainty estimate.

    lhs = triple-sum of log||t|| over the coefficients plus C times the
    log||w||-weighted spectral energy; rhs = C (digamma(1/2) - log pi)
    ||F||^2.  gap = lhs - rhs is nonnegative for centered smooth inputs.
    """
    if energy(fld) == 0.0:
        raise ValueError("log uncertainty is undefined for the zero field")
    if table is None:
        table = admissibility_q(gen, grid, fld.shape, fld.extent)
    if vol is None:
        vol = qst_forward(fld, gen, grid)
    log_t = _volume_moment(vol, "log")
    log_w = moments(symplectic_fft(fld), "log")
    c = table.c_value
    lhs = log_t + c * log_w
    rhs = c * log_inequality_constant() * energy(fld)
    return UncertaintyReport(log_spatial=log_t, log_freq=log_w,
                             log_rhs=float(rhs), gap=float(lhs - rhs))
