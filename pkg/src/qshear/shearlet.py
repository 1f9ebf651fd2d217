"""Classical (complex-valued) band-limited shearlet system.

Atoms are built in the frequency domain: the generator is a closed-form
window psi^(w1, w2) = b(w1) v(w2/w1) with raised-cosine radial and angular
profiles, and the atom at (a, s, t) samples

    |A_a|^{1/2} psi^(w S_s A_a) e^{-2 pi i w.t}

on the signed integer frequency lattice (row-vector warp, so
w S_s A_a = (a w1, sqrt(a) (s w1 + w2))).  Samples on the Nyquist row and
column are zeroed so that every retained frequency has its exact negation
on the lattice; all discrete frame identities in this package rely on that
symmetrization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "ShearParams",
    "GeneratorSpec",
    "SamplingGrid",
    "make_matrices",
    "generator_lattice_values",
    "atom_spectrum",
    "atom_spatial",
    "classical_transform",
    "classical_transform_at",
    "classical_transform_direct_at",
    "admissibility_classical",
    "AdmissibilityTable",
    "plateau_reference",
    "nyquist_mask",
]


@dataclass(frozen=True)
class ShearParams:
    """One point of the scale-shear-translation parameter space."""

    a: float
    s: float
    t: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError("scale a must be positive")


def make_matrices(p: ShearParams):
    """Parabolic scaling matrix A_a = diag(a, sqrt(a)) and shear S_s."""
    a_mat = np.array([[p.a, 0.0], [0.0, np.sqrt(p.a)]])
    s_mat = np.array([[1.0, p.s], [0.0, 1.0]])
    return a_mat, s_mat


def _bump(x, lo, hi):
    """C^1 raised-cosine bump supported on lo < |x| < hi."""
    x = np.abs(np.asarray(x, dtype=float))
    t = (x - lo) / (hi - lo)
    out = np.zeros_like(t)
    m = (t > 0.0) & (t < 1.0)
    out[m] = np.sin(np.pi * t[m]) ** 2
    return out


@dataclass(frozen=True)
class GeneratorSpec:
    """Band-limited shearlet generator psi^(w) = b(w1) v(w2/w1 - slope_shift).

    b is a raised-cosine bump on radial_band[0] < |w1| < radial_band[1]
    (both signs, cycles per unit length), v a raised-cosine bump on slopes
    |m| < angular_halfwidth.  psi^ vanishes on the line w1 = 0, so the
    warped evaluations never divide by zero.
    """

    radial_band: tuple[float, float] = (1.0, 4.0)
    angular_halfwidth: float = 1.0
    slope_shift: float = 0.0
    amplitude: float = 1.0

    def __post_init__(self):
        r0, r1 = self.radial_band
        if not (0.0 < r0 < r1):
            raise ValueError("radial band must satisfy 0 < r0 < r1")
        if self.angular_halfwidth <= 0:
            raise ValueError("angular halfwidth must be positive")

    def __call__(self, w1, w2):
        """Evaluate psi^ at frequency coordinates (broadcasting)."""
        w1 = np.asarray(w1, dtype=float)
        w2 = np.asarray(w2, dtype=float)
        shape = np.broadcast(w1, w2).shape
        w1f = np.broadcast_to(w1, shape).reshape(-1)
        w2f = np.broadcast_to(w2, shape).reshape(-1)
        live = w1f != 0.0
        slope = np.zeros(w1f.shape)
        slope[live] = w2f[live] / w1f[live] - self.slope_shift
        hw = self.angular_halfwidth
        ang = np.zeros(w1f.shape)
        m = live & (np.abs(slope) < hw)
        ang[m] = np.cos(np.pi * slope[m] / (2.0 * hw)) ** 2
        out = self.amplitude * _bump(w1f, *self.radial_band) * ang
        out[~live] = 0.0
        return out.reshape(shape)

    def is_zero(self) -> bool:
        return self.amplitude == 0.0


@dataclass(frozen=True)
class SamplingGrid:
    """Discrete (a, s) lattice with quadrature weights for da ds / a^3.

    Scales are geometric, a_m = a_max * r^-m with r = 2^(octaves / n_scales),
    so the m-th scale cell is [a_m / sqrt(r), a_m * sqrt(r)] and
    da_m = a_m (sqrt(r) - 1/sqrt(r)).  Shears sample [-shear_max, shear_max]
    uniformly, s_l = -S + l * ds.  Weights are w_ml = da_m * ds / a_m^3.

    ``refined(k)`` subdivides every scale and shear cell k-fold over the
    same (a, s) domain; it is the quadrature oracle used by the
    admissibility refinement checks.
    """

    n_scales: int = 10
    n_shears: int = 21
    a_max: float = 1.0
    shear_max: float = 1.0
    octaves: float = 3.0
    _refine: int = 1

    def __post_init__(self):
        if self.n_scales < 1 or self.n_shears < 2:
            raise ValueError("grid needs at least 1 scale and 2 shears")
        if self.a_max <= 0 or self.shear_max <= 0 or self.octaves <= 0:
            raise ValueError("a_max, shear_max and octaves must be positive")

    @property
    def scales(self) -> np.ndarray:
        # geometric cell centers; the refined lattice subdivides the coarse
        # cells, and at _refine == 1 this is exactly a_max * r^-m
        r_coarse = 2.0 ** (self.octaves / self.n_scales)
        m = self.n_scales * self._refine
        r_fine = r_coarse ** (1.0 / self._refine)
        return (self.a_max * np.sqrt(r_coarse)
                * r_fine ** -(np.arange(m, dtype=float) + 0.5))

    @property
    def shears(self) -> np.ndarray:
        ds0 = 2.0 * self.shear_max / (self.n_shears - 1)
        ds = ds0 / self._refine
        n = self.n_shears * self._refine
        return -self.shear_max - ds0 / 2.0 + (np.arange(n) + 0.5) * ds

    @property
    def shear_step(self) -> float:
        return 2.0 * self.shear_max / (self.n_shears - 1) / self._refine

    @property
    def weights(self) -> np.ndarray:
        """(n_scales, n_shears) array of da_m * ds / a_m^3."""
        ratio = 2.0 ** (self.octaves / (self.n_scales * self._refine))
        a = self.scales
        da = a * (np.sqrt(ratio) - 1.0 / np.sqrt(ratio))
        return np.outer(da / a ** 3, np.full(self.shears.size, self.shear_step))

    @property
    def n_slices(self) -> int:
        return self.scales.size * self.shears.size

    def labels(self):
        """Iterate (slice_index, scale_index, shear_index, a, s, weight)."""
        w = self.weights
        idx = 0
        for i, a in enumerate(self.scales):
            for j, s in enumerate(self.shears):
                yield idx, i, j, float(a), float(s), float(w[i, j])
                idx += 1

    def refined(self, factor: int = 4) -> "SamplingGrid":
        return SamplingGrid(self.n_scales, self.n_shears, self.a_max,
                            self.shear_max, self.octaves,
                            self._refine * factor)

    def describe(self) -> dict:
        return {
            "n_scales": self.n_scales * self._refine,
            "n_shears": self.n_shears * self._refine,
            "a_max": self.a_max,
            "shear_max": self.shear_max,
            "octaves": self.octaves,
        }


def nyquist_mask(n1: int, n2: int) -> np.ndarray:
    k1 = np.fft.fftfreq(n1) * n1
    k2 = np.fft.fftfreq(n2) * n2
    m1, m2 = np.meshgrid(k1 == -(n1 // 2), k2 == -(n2 // 2), indexing="ij")
    return m1 | m2


def _lattice(n1, n2, extent):
    k1 = np.fft.fftfreq(n1) * n1 / extent[0]
    k2 = np.fft.fftfreq(n2) * n2 / extent[1]
    return np.meshgrid(k1, k2, indexing="ij")


def generator_lattice_values(gen: GeneratorSpec, a: float, s: float,
                             shape, extent=(1.0, 1.0)) -> np.ndarray:
    """Samples of psi^(w S_s A_a) on the signed lattice, Nyquist rows zeroed."""
    n1, n2 = shape
    k1, k2 = _lattice(n1, n2, extent)
    vals = gen(a * k1, np.sqrt(a) * (s * k1 + k2))
    vals[nyquist_mask(n1, n2)] = 0.0
    return vals


def atom_spectrum(gen: GeneratorSpec, p: ShearParams, shape,
                  extent=(1.0, 1.0)) -> np.ndarray:
    """Frequency samples of the atom: |A_a|^(1/2) psi^(w S_s A_a) e^(-2 pi i w.t)."""
    n1, n2 = shape
    k1, k2 = _lattice(n1, n2, extent)
    amp = p.a ** 0.75  # |A_a|^(1/2) = a^(3/4)
    vals = amp * generator_lattice_values(gen, p.a, p.s, shape, extent)
    phase = np.exp(-2j * np.pi * (k1 * p.t[0] + k2 * p.t[1]))
    return vals.astype(complex) * phase


def atom_spatial(gen: GeneratorSpec, p: ShearParams, shape,
                 extent=(1.0, 1.0)) -> np.ndarray:
    """Spatial samples of the atom (inverse FT of `atom_spectrum`)."""
    n1, n2 = shape
    spec = atom_spectrum(gen, p, shape, extent)
    return np.fft.ifft2(spec) * n1 * n2 / (extent[0] * extent[1])


def _chat(f, extent):
    return np.fft.fft2(f) * extent[0] * extent[1] / f.size


def _ichat(fh, extent):
    return np.fft.ifft2(fh) * fh.size / (extent[0] * extent[1])


def classical_transform_at(f: np.ndarray, gen: GeneratorSpec, a: float,
                           s: float, extent=(1.0, 1.0),
                           f_hat: np.ndarray | None = None) -> np.ndarray:
    """One coefficient slice of the continuous shearlet transform.

    Frequency-domain evaluation: the slice's spectrum is
    |A_a|^(1/2) f^(w) conj(psi^(w S_s A_a)), inverse-transformed back to
    the translation grid.  Agrees with the direct inner-product evaluation
    (`classical_transform_direct_at`) to FFT roundoff.
    """
    fh = _chat(f, extent) if f_hat is None else f_hat
    q = a ** 0.75 * generator_lattice_values(gen, a, s, f.shape, extent)
    return _ichat(fh * np.conj(q), extent)


def classical_transform(f: np.ndarray, gen: GeneratorSpec,
                        grid: SamplingGrid, extent=(1.0, 1.0)) -> np.ndarray:
    """All (scale, shear) coefficient slices; shape (n_scales, n_shears, N1, N2)."""
    f = np.asarray(f, dtype=complex)
    fh = _chat(f, extent)
    scales, shears = grid.scales, grid.shears
    out = np.empty((scales.size, shears.size) + f.shape, dtype=complex)
    for i, a in enumerate(scales):
        for j, s in enumerate(shears):
            out[i, j] = classical_transform_at(f, gen, a, s, extent, f_hat=fh)
    return out


def classical_transform_direct_at(f: np.ndarray, gen: GeneratorSpec,
                                  p: ShearParams, extent=(1.0, 1.0)) -> complex:
    """Direct inner-product <f, psi_{a,s,t}> (definition; test oracle)."""
    atom = atom_spatial(gen, p, f.shape, extent)
    w = extent[0] * extent[1] / f.size
    return complex((f * np.conj(atom)).sum() * w)


@dataclass(frozen=True)
class AdmissibilityTable:
    """Frequency-resolved admissibility sum and its reference value.

    delta        : Delta(w) = sum_ml w_ml a^(3/2) |psi^(w S A)|^2 per lattice w.
    c_value      : Delta at the reference lattice point (the admissibility
                   constant of the discretized system).
    ref_index    : lattice index of the reference point.
    flatness_dev : max |Delta/c - 1| over the covered region (Delta > 0).
    flat_fraction: fraction of covered points within 5% of c_value.
    """

    delta: np.ndarray
    c_value: float
    ref_index: tuple[int, int]
    flatness_dev: float
    flat_fraction: float

    def flat_mask(self, tol: float = 0.05) -> np.ndarray:
        if self.c_value == 0.0:
            return np.zeros_like(self.delta, dtype=bool)
        return (self.delta > 0) & (np.abs(self.delta / self.c_value - 1.0) <= tol)


def plateau_reference(delta: np.ndarray, tol: float = 0.05):
    """Pick the value around which `delta` concentrates: the covered lattice
    value with the most covered points within +-tol relative.  Deterministic;
    returns (value, flat index)."""
    flatvals = delta.ravel()
    covered = flatvals > 0.0
    if not covered.any():
        return 0.0, 0
    vals = flatvals[covered]
    order = np.argsort(vals)
    sv = vals[order]
    lo = np.searchsorted(sv, sv * (1.0 - tol), side="left")
    hi = np.searchsorted(sv, sv * (1.0 + tol), side="right")
    counts = hi - lo
    best = np.argmax(counts)  # first maximum: deterministic
    c = float(sv[best])
    # reference index: first covered lattice point attaining the value
    idx = int(np.flatnonzero(covered & (flatvals == c))[0])
    return c, idx


def admissibility_classical(gen: GeneratorSpec, grid: SamplingGrid, shape,
                            extent=(1.0, 1.0)) -> AdmissibilityTable:
    """Quadrature of the admissibility integral, resolved per frequency.

    Delta(w) = sum_{m,l} w_ml a_m^(3/2) |psi^(w S_sl A_am)|^2 approximates
    the (a, s)-form admissibility integral with weight da ds / a^(3/2);
    its plateau value is returned as the admissibility constant.
    """
    if grid.n_slices == 0:
        raise ValueError("empty sampling grid")
    n1, n2 = shape
    delta = np.zeros((n1, n2))
    w = grid.weights
    for i, a in enumerate(grid.scales):
        vals_a = a ** 1.5
        for j, s in enumerate(grid.shears):
            q = generator_lattice_values(gen, a, s, shape, extent)
            delta += w[i, j] * vals_a * q * q
    c, flat_idx = plateau_reference(delta)
    ref = np.unravel_index(flat_idx, delta.shape)
    covered = delta > 0
    if c > 0 and covered.any():
        dev = float(np.abs(delta[covered] / c - 1.0).max())
        frac = float(np.mean(np.abs(delta[covered] / c - 1.0) <= 0.05))
    else:
        dev, frac = 0.0, 0.0
    return AdmissibilityTable(delta, c, (int(ref[0]), int(ref[1])), dev, frac)


def admissibility_at(gen: GeneratorSpec, grid: SamplingGrid, omega) -> float:
    """Delta evaluated at a single (off-lattice allowed) frequency point."""
    w1, w2 = omega
    tot = 0.0
    w = grid.weights
    for i, a in enumerate(grid.scales):
        z1 = a * w1
        for j, s in enumerate(grid.shears):
            z2 = np.sqrt(a) * (s * w1 + w2)
            tot += w[i, j] * a ** 1.5 * float(gen(z1, z2)) ** 2
    return tot
