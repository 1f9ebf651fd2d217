"""Classical shearlet machinery: matrices, atoms, transform paths,
admissibility."""

import numpy as np
import pytest

from qshear.shearlet import (
    GeneratorSpec,
    SamplingGrid,
    ShearParams,
    admissibility_at,
    admissibility_classical,
    atom_spatial,
    atom_spectrum,
    classical_transform,
    classical_transform_at,
    classical_transform_direct_at,
    generator_lattice_values,
    make_matrices,
    nyquist_mask,
)

RNG = np.random.default_rng(31)


class TestMatrices:
    def test_identity_params(self):
        a_mat, s_mat = make_matrices(ShearParams(1.0, 0.0))
        assert np.array_equal(a_mat, np.eye(2))
        assert np.array_equal(s_mat, np.eye(2))

    def test_parabolic_scaling(self):
        a_mat, _ = make_matrices(ShearParams(4.0, 0.0))
        assert np.array_equal(a_mat, np.diag([4.0, 2.0]))
        assert np.linalg.det(a_mat) == pytest.approx(8.0)
        assert np.linalg.det(a_mat) == pytest.approx(4.0 ** 1.5)

    def test_shear_inverse(self):
        _, s_mat = make_matrices(ShearParams(1.0, 0.7))
        _, s_inv = make_matrices(ShearParams(1.0, -0.7))
        assert np.allclose(s_mat @ s_inv, np.eye(2), atol=1e-15)

    def test_nonpositive_scale_rejected(self):
        with pytest.raises(ValueError):
            ShearParams(0.0, 0.0)
        with pytest.raises(ValueError):
            ShearParams(-1.0, 0.0)


class TestAtoms:
    def test_identity_warp_is_generator(self):
        gen = GeneratorSpec()
        shape = (16, 16)
        spec = atom_spectrum(gen, ShearParams(1.0, 0.0), shape)
        k = np.fft.fftfreq(16) * 16
        k1, k2 = np.meshgrid(k, k, indexing="ij")
        want = gen(k1, k2)
        want[nyquist_mask(*shape)] = 0.0
        assert np.abs(spec - want).max() < 1e-15

    def test_translation_phase(self):
        gen = GeneratorSpec()
        shape = (16, 16)
        base = atom_spectrum(gen, ShearParams(1.0, 0.0), shape)
        spec = atom_spectrum(gen, ShearParams(1.0, 0.0, (0.5, 0.0)), shape)
        k = np.fft.fftfreq(16) * 16
        phase = np.exp(-1j * np.pi * k)[:, None]
        assert np.abs(spec - base * phase).max() < 1e-14

    def test_quarter_scale_closed_form(self):
        # independent evaluation of the displayed closed form at a = 1/4:
        # values psi^(w1/4, w2/2) * (1/8)^(1/2) on the lattice
        gen = GeneratorSpec()
        shape = (32, 32)
        spec = atom_spectrum(gen, ShearParams(0.25, 0.0), shape)
        k = np.fft.fftfreq(32) * 32
        k1, k2 = np.meshgrid(k, k, indexing="ij")
        want = np.sqrt(1.0 / 8.0) * gen(k1 / 4.0, k2 / 2.0)
        want[nyquist_mask(*shape)] = 0.0
        assert np.abs(spec - want).max() < 1e-14

    def test_generator_vanishes_on_zero_line(self):
        gen = GeneratorSpec()
        assert gen(0.0, 3.0) == 0.0
        assert np.all(gen(np.zeros(5), np.linspace(-4, 4, 5)) == 0.0)


class TestTransformPaths:
    def test_zero_in_zero_out(self):
        gen = GeneratorSpec()
        grid = SamplingGrid(n_scales=2, n_shears=3, octaves=1.0)
        out = classical_transform(np.zeros((16, 16), complex), gen, grid)
        assert np.abs(out).max() == 0.0

    def test_atom_autocorrelation_peak(self):
        gen = GeneratorSpec()
        a, s = 0.5, -0.5
        atom = atom_spatial(gen, ShearParams(a, s), (16, 16))
        norm2 = float((np.abs(atom) ** 2).sum() / atom.size)
        got = classical_transform_at(atom, gen, a, s)[0, 0]
        assert got == pytest.approx(norm2, rel=1e-10)
        # zero lag is the maximum in magnitude
        full = np.abs(classical_transform_at(atom, gen, a, s))
        assert np.argmax(full) == 0

    def test_frequency_path_matches_direct_pairing(self):
        gen = GeneratorSpec()
        f = RNG.standard_normal((16, 16)) + 1j * RNG.standard_normal((16, 16))
        for _ in range(5):
            a = float(RNG.uniform(0.15, 1.0))
            s = float(RNG.uniform(-1.0, 1.0))
            i1, i2 = (int(x) for x in RNG.integers(0, 16, 2))
            direct = classical_transform_direct_at(
                f, gen, ShearParams(a, s, (i1 / 16, i2 / 16)))
            fast = classical_transform_at(f, gen, a, s)[i1, i2]
            assert abs(fast - direct) < 1e-9


class TestSamplingGrid:
    def test_default_lattice(self):
        grid = SamplingGrid()
        assert grid.scales[0] == 1.0
        assert grid.shears[0] == pytest.approx(-1.0)
        assert grid.shears[-1] == pytest.approx(1.0)
        assert grid.shear_step == pytest.approx(0.1)
        assert np.all(grid.weights > 0)

    def test_weight_formula(self):
        grid = SamplingGrid(n_scales=4, n_shears=5, octaves=3.0)
        ratio = 2.0 ** (3.0 / 4)
        a0 = grid.scales[0]
        da = a0 * (np.sqrt(ratio) - 1 / np.sqrt(ratio))
        assert grid.weights[0, 0] == pytest.approx(da * grid.shear_step / a0 ** 3)

    def test_refined_covers_same_domain(self):
        grid = SamplingGrid(n_scales=4, n_shears=5)
        ref = grid.refined(4)
        assert ref.n_slices == 16 * grid.n_slices
        # same outer cell edges in scale and shear
        r0 = 2.0 ** (grid.octaves / grid.n_scales)
        r4 = 2.0 ** (grid.octaves / (4 * grid.n_scales))
        assert grid.scales[0] * np.sqrt(r0) == pytest.approx(
            ref.scales[0] * np.sqrt(r4))
        assert grid.scales[-1] / np.sqrt(r0) == pytest.approx(
            ref.scales[-1] / np.sqrt(r4))
        assert grid.shears[0] - grid.shear_step / 2 == pytest.approx(
            ref.shears[0] - ref.shear_step / 2)


class TestAdmissibility:
    def test_zero_generator(self):
        table = admissibility_classical(GeneratorSpec(amplitude=0.0),
                                        SamplingGrid(), (16, 16))
        assert table.c_value == 0.0
        assert np.abs(table.delta).max() == 0.0

    def test_flatness_reported(self):
        table = admissibility_classical(GeneratorSpec(), SamplingGrid(),
                                        (32, 32))
        assert table.c_value > 0
        assert 0.0 <= table.flat_fraction <= 1.0
        assert table.flatness_dev >= 0.0
        # the frame function concentrates around its plateau value
        assert table.flat_fraction > 0.2

    def test_shear_step_halving(self):
        gen = GeneratorSpec()
        grid = SamplingGrid()
        half = SamplingGrid(grid.n_scales, 2 * grid.n_shears - 1)
        assert half.weights[0, 0] == pytest.approx(grid.weights[0, 0] / 2)
        om = (6.0, 0.0)
        c0 = admissibility_at(gen, grid, om)
        c1 = admissibility_at(gen, half, om)
        assert abs(c1 / c0 - 1.0) < 0.02

    def test_refinement_oracle(self):
        gen = GeneratorSpec()
        grid = SamplingGrid()
        table = admissibility_classical(gen, grid, (64, 64))
        k = np.fft.fftfreq(64) * 64
        om = (float(k[table.ref_index[0]]), float(k[table.ref_index[1]]))
        c0 = admissibility_at(gen, grid, om)
        c4 = admissibility_at(gen, grid.refined(4), om)
        assert abs(c0 / c4 - 1.0) < 0.02

    def test_empty_grid_rejected(self):
        with pytest.raises(ValueError):
            SamplingGrid(n_scales=0)
