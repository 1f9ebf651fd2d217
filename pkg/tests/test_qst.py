"""Quaternion shearlet transform: paths, frame identities, inversion,
covariances, serialization."""

import numpy as np
import pytest

from qshear.qft import QField, SPATIAL, symplectic_fft
from qshear.quaternion import qmul, qnorm2
from qshear.qst import (
    CoefficientVolume,
    QGeneratorSpec,
    admissibility_q,
    admissibility_q_at,
    covariance_suite,
    decompose_checked,
    energy,
    eq35_convolution_path,
    moyal,
    qst_decompose,
    qst_forward,
    qst_forward_direct_at,
    qst_inverse,
    spectral_energy,
)
from qshear.shearlet import GeneratorSpec, SamplingGrid, ShearParams
from qshear.verify import random_bandlimited_field, random_field

RNG = np.random.default_rng(93)

GEN = QGeneratorSpec.default()
SMALL = SamplingGrid(n_scales=2, n_shears=5, octaves=2.0)
GRID = SamplingGrid()  # default desk-scale grid
TABLE16 = admissibility_q(GEN, GRID, (16, 16))


def maxdiff(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def rel_l2(f, g):
    return float(np.sqrt(qnorm2(f.samples - g.samples).sum()
                         / qnorm2(g.samples).sum()))


class TestForward:
    def test_zero_field(self):
        v = qst_forward(QField.zeros(16, 16), GEN, SMALL)
        assert np.abs(v.coeffs).max() == 0.0

    def test_direct_pairing_oracle(self):
        f = random_field(RNG, (16, 16))
        vol = qst_forward(f, GEN, SMALL)
        for _ in range(8):
            i = int(RNG.integers(0, SMALL.scales.size))
            j = int(RNG.integers(0, SMALL.shears.size))
            i1, i2 = (int(x) for x in RNG.integers(0, 16, 2))
            p = ShearParams(float(SMALL.scales[i]), float(SMALL.shears[j]),
                            (i1 / 16, i2 / 16))
            assert maxdiff(vol.coeffs[i, j, i1, i2],
                           qst_forward_direct_at(f, GEN, p)) < 1e-9

    def test_real_signal_classical_embedding(self):
        gen = QGeneratorSpec(GeneratorSpec(), GeneratorSpec(amplitude=0.0))
        f = QField.zeros(16, 16)
        f.samples[..., 0] = RNG.standard_normal((16, 16))
        vol = qst_forward(f, gen, SMALL)
        from qshear.shearlet import classical_transform
        cl = classical_transform(f.samples[..., 0].astype(complex),
                                 gen.psi1, SMALL)
        assert maxdiff(vol.coeffs[..., 0], cl.real) < 1e-12
        assert maxdiff(vol.coeffs[..., 1], cl.imag) < 1e-12
        assert np.abs(vol.coeffs[..., 2:]).max() < 1e-12


class TestDecomposition:
    def test_matches_forward(self):
        f = random_field(RNG, (16, 16))
        v1 = qst_forward(f, GEN, SMALL)
        v2 = qst_decompose(f, GEN, SMALL)
        assert maxdiff(v1.coeffs, v2.coeffs) < 1e-9

    def test_single_component_reductions(self):
        gen = QGeneratorSpec(GeneratorSpec(), GeneratorSpec(amplitude=0.0))
        # f2 = 0, psi2 = 0: classical transform only
        fu = RNG.standard_normal((16, 16)) + 1j * RNG.standard_normal((16, 16))
        f = QField.from_components(fu, np.zeros_like(fu))
        v = qst_decompose(f, gen, SMALL)
        from qshear.shearlet import classical_transform
        cl = classical_transform(fu, gen.psi1, SMALL)
        assert maxdiff(v.coeffs[..., 0] + 1j * v.coeffs[..., 1], cl) < 1e-12
        assert np.abs(v.coeffs[..., 2:]).max() < 1e-12
        # f1 = 0, psi2 = 0: only the j S_psi1 f2 term survives
        f = QField.from_components(np.zeros_like(fu), fu)
        v = qst_decompose(f, gen, SMALL)
        cl = classical_transform(fu, gen.psi1, SMALL)
        assert maxdiff(v.coeffs[..., 2] - 1j * v.coeffs[..., 3], cl) < 1e-12
        assert np.abs(v.coeffs[..., :2]).max() < 1e-12

    def test_checked_decomposition_equals_convolution_form(self):
        f = random_field(RNG, (16, 16))
        v1 = eq35_convolution_path(f, GEN, SMALL)
        v2 = decompose_checked(f, GEN, SMALL)
        assert maxdiff(v1.coeffs, v2.coeffs) < 1e-9

    @pytest.mark.xfail(strict=True, reason=(
        "the convolution rewrite reflects the translation argument of the "
        "psi2 cross terms; it does not equal the pairing-defined transform"))
    def test_convolution_form_equals_forward(self):
        f = random_field(RNG, (16, 16))
        v1 = eq35_convolution_path(f, GEN, SMALL)
        v2 = qst_forward(f, GEN, SMALL)
        assert maxdiff(v1.coeffs, v2.coeffs) < 1e-9


class TestAdmissibility:
    def test_psi2_zero_reduces_to_classical(self):
        from qshear.shearlet import admissibility_classical
        gen = QGeneratorSpec(GeneratorSpec(), GeneratorSpec(amplitude=0.0))
        tq = admissibility_q(gen, GRID, (32, 32))
        tc = admissibility_classical(GeneratorSpec(), GRID, (32, 32))
        assert maxdiff(tq.delta, tc.delta) < 1e-14
        assert tq.c_value == pytest.approx(tc.c_value, rel=1e-12)

    def test_equal_components_double(self):
        gen = QGeneratorSpec(GeneratorSpec(), GeneratorSpec())
        tq = admissibility_q(gen, GRID, (32, 32))
        tc = admissibility_q(
            QGeneratorSpec(GeneratorSpec(), GeneratorSpec(amplitude=0.0)),
            GRID, (32, 32))
        assert maxdiff(tq.delta, 2.0 * tc.delta) < 1e-13

    def test_refinement_within_two_percent(self):
        table = admissibility_q(GEN, GRID, (64, 64))
        k = np.fft.fftfreq(64) * 64
        om = (float(k[table.ref_index[0]]), float(k[table.ref_index[1]]))
        c0 = admissibility_q_at(GEN, GRID, om)
        c4 = admissibility_q_at(GEN, GRID.refined(4), om)
        assert abs(c0 / c4 - 1.0) < 0.02

    def test_empty_grid(self):
        with pytest.raises(ValueError):
            SamplingGrid(n_scales=0, n_shears=5)


class TestMoyal:
    def test_zero_second_argument(self):
        f = random_field(RNG, (16, 16))
        rep = moyal(f, QField.zeros(16, 16), GEN, GRID, TABLE16)
        assert np.abs(rep.lhs).max() == 0.0
        assert np.abs(rep.rhs_exact).max() == 0.0
        assert np.abs(rep.rhs_paper).max() == 0.0

    def test_self_pairing_scalar_is_energy(self):
        f = random_field(RNG, (16, 16))
        rep = moyal(f, f, GEN, GRID, TABLE16)
        vol = qst_forward(f, GEN, GRID)
        assert rep.lhs[0] == pytest.approx(energy(vol), rel=1e-12)
        assert np.abs(rep.lhs[1:]).max() < 1e-12 * abs(rep.lhs[0])

    def test_exact_identity_all_components(self):
        f = random_field(RNG, (16, 16))
        g = random_field(RNG, (16, 16))
        rep = moyal(f, g, GEN, GRID, TABLE16)
        assert rep.exact_rel_err() < 1e-9

    @pytest.mark.xfail(strict=True, reason=(
        "the two-sided QFT does not preserve the quaternion pairing; the "
        "exact spectral identity uses the symplectic spectrum"))
    def test_exact_identity_qft_literal(self):
        f = random_field(RNG, (16, 16))
        g = random_field(RNG, (16, 16))
        rep = moyal(f, g, GEN, GRID, TABLE16)
        scale = float(np.abs(rep.rhs_qft_literal).max())
        assert maxdiff(rep.lhs, rep.rhs_qft_literal) / scale < 1e-9

    def test_paper_gap_on_flat_band(self):
        f = random_bandlimited_field(RNG, (16, 16), TABLE16)
        g = QField(f.samples + 0.5 * random_bandlimited_field(
            RNG, (16, 16), TABLE16).samples)
        rep = moyal(f, g, GEN, GRID, TABLE16)
        flat = TABLE16.flat_mask(0.05)
        dev = float(np.abs(TABLE16.delta[flat] / TABLE16.c_value - 1).max())
        assert rep.paper_rel_gap() <= max(dev, 0.05)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            moyal(random_field(RNG, (16, 16)), random_field(RNG, (16, 32)),
                  GEN, GRID)


class TestEnergy:
    def test_zero_volume(self):
        assert energy(qst_forward(QField.zeros(16, 16), GEN, SMALL)) == 0.0

    def test_spectral_identity(self):
        f = random_field(RNG, (16, 16))
        vol = qst_forward(f, GEN, GRID)
        assert energy(vol) == pytest.approx(spectral_energy(f, TABLE16),
                                            rel=1e-9)

    def test_quadratic_homogeneity(self):
        f = random_field(RNG, (16, 16))
        v1 = energy(qst_forward(f, GEN, SMALL))
        f3 = QField(3.0 * f.samples)
        v3 = energy(qst_forward(f3, GEN, SMALL))
        assert v3 == pytest.approx(9.0 * v1, rel=1e-12)


class TestInversion:
    def test_zero_volume_gives_zero_field(self):
        v = qst_forward(QField.zeros(16, 16), GEN, GRID)
        rec = qst_inverse(v, GEN, GRID, table=TABLE16)
        assert np.abs(rec.samples).max() == 0.0

    def test_frame_corrected_roundtrip(self):
        f = random_bandlimited_field(RNG, (16, 16), TABLE16)
        vol = qst_forward(f, GEN, GRID)
        rec = qst_inverse(vol, GEN, GRID, "frame_corrected", TABLE16)
        assert rel_l2(rec, f) <= 1e-8

    def test_paper_constant_error_within_bound(self):
        f = random_bandlimited_field(RNG, (16, 16), TABLE16)
        vol = qst_forward(f, GEN, GRID)
        rec = qst_inverse(vol, GEN, GRID, "paper_constant", TABLE16)
        err = rel_l2(rec, f)
        sf = symplectic_fft(f)
        live = qnorm2(sf.samples) > 1e-20 * qnorm2(sf.samples).max()
        bound = float(np.abs(TABLE16.delta[live] / TABLE16.c_value - 1).max())
        assert err <= bound
        assert err <= 2.0 * bound

    def test_grid_mismatch_rejected(self):
        vol = qst_forward(random_field(RNG, (16, 16)), GEN, SMALL)
        with pytest.raises(ValueError):
            qst_inverse(vol, GEN, GRID)

    def test_empty_division_region(self):
        gen0 = QGeneratorSpec(GeneratorSpec(amplitude=0.0),
                              GeneratorSpec(amplitude=0.0))
        vol = qst_forward(random_field(RNG, (16, 16)), gen0, SMALL)
        with pytest.raises(ValueError):
            qst_inverse(vol, gen0, SMALL)

    def test_unknown_mode(self):
        vol = qst_forward(random_field(RNG, (16, 16)), GEN, SMALL)
        with pytest.raises(ValueError):
            qst_inverse(vol, GEN, SMALL, mode="nearest")


@pytest.fixture(scope="module")
def report():
    grid = SamplingGrid(n_scales=3, n_shears=5, octaves=2.0)
    f = random_field(np.random.default_rng(11), (16, 16))
    return covariance_suite(f, GEN, grid, np.random.default_rng(12))


class TestCovariances:

    def test_left_linearity_full_quaternion(self, report):
        assert report.linearity <= 1e-10

    def test_generator_antilinearity_right(self, report):
        assert report.antilinearity_right <= 1e-10

    @pytest.mark.xfail(strict=True, reason=(
        "conjugated generator constants cannot move left through the "
        "signal factor; they multiply the coefficients from the right"))
    def test_generator_antilinearity_left_as_stated(self, report):
        assert report.antilinearity_left_paper <= 1e-10

    def test_translation(self, report):
        assert report.translation <= 1e-9
        assert report.translation_paper_split <= 1e-9

    def test_translation_identity_at_zero_shift(self):
        f = random_field(RNG, (16, 16))
        v0 = qst_forward(f, GEN, SMALL)
        shifted = QField(np.roll(f.samples, (0, 0), axis=(0, 1)))
        v1 = qst_forward(shifted, GEN, SMALL)
        assert maxdiff(v0.coeffs, v1.coeffs) == 0.0

    def test_scaling_anisotropic(self, report):
        assert report.scaling_anisotropic <= 1e-6

    @pytest.mark.xfail(strict=True, reason=(
        "isotropic dilation is incompatible with parabolic scaling: "
        "diag(l, l) S_s A_a is not S_s' A_a' for any (a', s')"))
    def test_scaling_isotropic_as_stated(self, report):
        assert report.scaling_paper <= 1e-6

    def test_off_lattice_translation_rejected(self):
        f = random_field(RNG, (16, 16))
        with pytest.raises(ValueError):
            covariance_suite(f, GEN, SMALL, RNG, translation=(0.5, 1))

    def test_non_square_scaling_factor_rejected(self):
        f = random_field(RNG, (16, 16))
        with pytest.raises(ValueError):
            covariance_suite(f, GEN, SMALL, RNG, lam=2)


class TestSerialization:
    def test_roundtrip_bit_exact(self, tmp_path):
        from qshear.io import read_qshc, write_qshc
        f = random_field(RNG, (16, 16))
        vol = qst_forward(f, GEN, SMALL)
        path = tmp_path / "vol.qshc"
        write_qshc(path, vol)
        back = read_qshc(path, SMALL)
        assert np.array_equal(back.coeffs, vol.coeffs)
        assert np.array_equal(back.grid.scales, vol.grid.scales)

    def test_truncated_stream(self, tmp_path):
        from qshear.io import QSHCError, read_qshc, write_qshc
        f = random_field(RNG, (16, 16))
        vol = qst_forward(f, GEN, SMALL)
        path = tmp_path / "vol.qshc"
        write_qshc(path, vol)
        data = path.read_bytes()
        (tmp_path / "cut.qshc").write_bytes(data[:-64])
        with pytest.raises(QSHCError, match="unexpected end"):
            read_qshc(tmp_path / "cut.qshc", SMALL)

    def test_bad_magic(self, tmp_path):
        from qshear.io import QSHCError, read_qshc
        p = tmp_path / "junk.qshc"
        p.write_bytes(b"NOPE" + b"\x00" * 64)
        with pytest.raises(QSHCError, match="magic"):
            read_qshc(p, SMALL)

    def test_grid_mismatch(self, tmp_path):
        from qshear.io import QSHCError, read_qshc, write_qshc
        vol = qst_forward(random_field(RNG, (16, 16)), GEN, SMALL)
        path = tmp_path / "vol.qshc"
        write_qshc(path, vol)
        with pytest.raises(QSHCError, match="grid tables"):
            read_qshc(path, GRID)
