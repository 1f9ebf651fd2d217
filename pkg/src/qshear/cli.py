"""Command-line front end: analyze / synthesize / verify.

The CLI is a thin shell: every number it writes comes from a library
operation.  Reports are JSON with fixed float formatting (byte-identical
given the same config and seed), accompanied by delimited CSV tables and
matplotlib figures rendered to files.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

import numpy as np

from . import report as rpt
from .io import QSHCError, load_field, read_qshc, save_field_csv4, write_qshc
from .qft import QField, symplectic_fft
from .quaternion import qnorm2
from .qst import (
    FRAME_CORRECTED,
    PAPER_CONSTANT,
    QGeneratorSpec,
    admissibility_q,
    energy as volume_energy,
    qst_forward,
    qst_inverse,
    spectral_energy,
)
from .shearlet import GeneratorSpec, SamplingGrid
from .verify import run_verification

__all__ = ["RunConfig", "main"]


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated run configuration; round-trips to canonical JSON."""

    input_path: str = ""
    input_format: str = "csv"
    coefficients: str = ""
    original: str = ""
    extent: tuple[float, float] = (1.0, 1.0)
    radial_band: tuple[float, float] = (1.0, 4.0)
    angular_halfwidth: float = 1.0
    psi2_slope_shift: float = 0.5
    n_scales: int = 10
    n_shears: int = 21
    a_max: float = 1.0
    shear_max: float = 1.0
    octaves: float = 3.0
    mode: str = FRAME_CORRECTED
    seed: int = 0
    out: str = "qshear_out"
    figures: bool = True
    uncertainty_trials: int = 50
    tolerances: dict = dc_field(default_factory=dict)

    @classmethod
    def from_dict(cls, raw: dict) -> "RunConfig":
        inp = raw.get("input", {})
        gen = raw.get("generator", {})
        grd = raw.get("grid", {})
        cfg = cls(
            input_path=str(inp.get("path", "")),
            input_format=str(inp.get("format", "csv")),
            coefficients=str(raw.get("coefficients", "")),
            original=str(raw.get("original", "")),
            extent=tuple(float(x) for x in raw.get("extent", (1.0, 1.0))),
            radial_band=tuple(float(x) for x in gen.get("radial_band", (1.0, 4.0))),
            angular_halfwidth=float(gen.get("angular_halfwidth", 1.0)),
            psi2_slope_shift=float(gen.get("psi2_slope_shift", 0.5)),
            n_scales=int(grd.get("n_scales", 10)),
            n_shears=int(grd.get("n_shears", 21)),
            a_max=float(grd.get("a_max", 1.0)),
            shear_max=float(grd.get("shear_max", 1.0)),
            octaves=float(grd.get("octaves", 3.0)),
            mode=str(raw.get("mode", FRAME_CORRECTED)),
            seed=int(raw.get("seed", 0)),
            out=str(raw.get("out", "qshear_out")),
            figures=bool(raw.get("figures", True)),
            uncertainty_trials=int(raw.get("uncertainty_trials", 50)),
            tolerances={str(k): float(v)
                        for k, v in raw.get("tolerances", {}).items()},
        )
        cfg.validate()
        return cfg

    def validate(self) -> None:
        r0, r1 = self.radial_band
        if not (0.0 < r0 < r1):
            raise ConfigError(f"invalid radial band [{r0}, {r1}]")
        if self.angular_halfwidth <= 0:
            raise ConfigError("angular halfwidth must be positive")
        if self.n_scales < 1 or self.n_shears < 2:
            raise ConfigError("grid must have >= 1 scale and >= 2 shears")
        if self.a_max <= 0 or self.shear_max <= 0 or self.octaves <= 0:
            raise ConfigError("a_max, shear_max and octaves must be positive")
        if self.mode not in (FRAME_CORRECTED, PAPER_CONSTANT):
            raise ConfigError(f"unknown inversion mode {self.mode!r}")
        if self.input_format not in ("csv", "csv4", "pgm"):
            raise ConfigError(f"unknown input format {self.input_format!r}")
        if not (0 <= self.seed < 2 ** 64):
            raise ConfigError("seed must fit in u64")
        if self.uncertainty_trials < 1:
            raise ConfigError("uncertainty_trials must be >= 1")
        if len(self.extent) != 2 or min(self.extent) <= 0:
            raise ConfigError("extent must be two positive lengths")

    def canonical(self) -> dict:
        return {
            "input": {"path": self.input_path, "format": self.input_format},
            "coefficients": self.coefficients,
            "original": self.original,
            "extent": list(self.extent),
            "generator": {
                "radial_band": list(self.radial_band),
                "angular_halfwidth": self.angular_halfwidth,
                "psi2_slope_shift": self.psi2_slope_shift,
            },
            "grid": {
                "n_scales": self.n_scales,
                "n_shears": self.n_shears,
                "a_max": self.a_max,
                "shear_max": self.shear_max,
                "octaves": self.octaves,
            },
            "mode": self.mode,
            "seed": self.seed,
            "out": self.out,
            "figures": self.figures,
            "uncertainty_trials": self.uncertainty_trials,
            "tolerances": dict(sorted(self.tolerances.items())),
        }

    def generator(self) -> QGeneratorSpec:
        return QGeneratorSpec(
            GeneratorSpec(self.radial_band, self.angular_halfwidth, 0.0),
            GeneratorSpec(self.radial_band, self.angular_halfwidth,
                          self.psi2_slope_shift),
        )

    def grid(self) -> SamplingGrid:
        return SamplingGrid(self.n_scales, self.n_shears, self.a_max,
                            self.shear_max, self.octaves)


def _load_config(path: str) -> RunConfig:
    try:
        raw = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return RunConfig.from_dict(raw)


def _apply_overrides(cfg: RunConfig, args) -> RunConfig:
    updates = {}
    if args.seed is not None:
        updates["seed"] = args.seed
    if args.out is not None:
        updates["out"] = args.out
    if getattr(args, "mode", None) is not None:
        updates["mode"] = args.mode
    if updates:
        merged = cfg.canonical()
        merged.update({k: v for k, v in updates.items() if k != "mode"})
        if "mode" in updates:
            merged["mode"] = updates["mode"]
        cfg = RunConfig.from_dict(merged)
    return cfg


def _check_nyquist(cfg: RunConfig, shape) -> None:
    nyq = min(shape[0] / (2.0 * cfg.extent[0]), shape[1] / (2.0 * cfg.extent[1]))
    if cfg.radial_band[1] > nyq:
        raise ConfigError(
            f"generator exceeds Nyquist: r1 = {cfg.radial_band[1]:g} cycles "
            f"but the lattice resolves only {nyq:g}")


def _validate_field(fld: QField) -> None:
    n1, n2 = fld.shape
    if n1 < 8 or n2 < 8 or n1 % 2 or n2 % 2:
        raise ConfigError(f"input dimensions must be even and >= 8, got "
                          f"{n1} x {n2}")


def _outdir(cfg: RunConfig) -> Path:
    out = Path(cfg.out)
    out.mkdir(parents=True, exist_ok=True)
    if cfg.figures:
        (out / "figures").mkdir(exist_ok=True)
    return out


def cmd_analyze(cfg: RunConfig) -> int:
    fld = load_field(cfg.input_path, cfg.input_format, cfg.extent)
    _validate_field(fld)
    _check_nyquist(cfg, fld.shape)
    gen = cfg.generator()
    grid = cfg.grid()
    table = admissibility_q(gen, grid, fld.shape, fld.extent)
    vol = qst_forward(fld, gen, grid)

    cell = fld.cell_area
    slice_energy = qnorm2(vol.coeffs).sum(axis=(2, 3)) * cell
    total = volume_energy(vol)
    oracle = spectral_energy(fld, table)

    out = _outdir(cfg)
    write_qshc(out / "coefficients.qshc", vol)
    sidecar = {
        "generator": gen.describe(),
        "grid": grid.describe(),
        "extent": list(cfg.extent),
        "source_shape": list(fld.shape),
        "input": {"path": cfg.input_path, "format": cfg.input_format},
    }
    rpt.write_json(out / "coefficients.qshc.json", sidecar)
    summary = {
        "config": cfg.canonical(),
        "field_shape": list(fld.shape),
        "field_energy": float((qnorm2(fld.samples)).sum() * cell),
        "coefficient_energy": float(total),
        "spectral_energy_oracle": float(oracle),
        "energy_identity_rel_err": float(abs(total - oracle) / total)
        if total else 0.0,
        "admissibility_constant": float(table.c_value),
        "flatness_deviation": float(table.flatness_dev),
        "flat_fraction": float(table.flat_fraction),
        "slice_energy": [[float(x) for x in row] for row in
                         (slice_energy * grid.weights)],
    }
    rpt.write_json(out / "analyze_summary.json", summary)
    rpt.write_slice_energy_csv(out / "slice_energy.csv", grid,
                               slice_energy * grid.weights)
    if cfg.figures:
        rpt.fig_delta_heatmap(out / "figures" / "frame_function.png",
                              table.delta, table.c_value)
        rpt.fig_slice_energy(out / "figures" / "slice_energy.png",
                             grid, slice_energy * grid.weights)
    return 0


def cmd_synthesize(cfg: RunConfig) -> int:
    gen = cfg.generator()
    grid = cfg.grid()
    src = cfg.coefficients or str(Path(cfg.out) / "coefficients.qshc")
    vol = read_qshc(src, grid, cfg.extent)
    table = admissibility_q(gen, grid, vol.field_shape, cfg.extent)
    rec = qst_inverse(vol, gen, grid, cfg.mode, table)

    out = _outdir(cfg)
    save_field_csv4(out / "reconstruction.csv", rec)
    result = {
        "config": cfg.canonical(),
        "coefficients": src,
        "mode": cfg.mode,
        "field_shape": list(rec.shape),
    }
    original = None
    if cfg.original:
        original = load_field(cfg.original, cfg.input_format, cfg.extent)
        denom = float(qnorm2(original.samples).sum())
        for mode in (FRAME_CORRECTED, PAPER_CONSTANT):
            r = qst_inverse(vol, gen, grid, mode, table)
            err = float(np.sqrt(qnorm2(r.samples - original.samples).sum()
                                / denom)) if denom else 0.0
            result[f"rel_l2_error_{mode}"] = err
    rpt.write_json(out / "synthesize_report.json", result)
    if cfg.figures:
        target = original if original is not None else rec
        rpt.fig_reconstruction(out / "figures" / "reconstruction.png",
                               target.samples, rec.samples)
    return 0


def cmd_verify(cfg: RunConfig) -> int:
    rep = run_verification(cfg.seed, cfg.tolerances or None,
                           cfg.uncertainty_trials)
    out = _outdir(cfg)
    payload = {"config": cfg.canonical(), **rep.as_dict()}
    rpt.write_json(out / "verify_report.json", payload)
    rpt.write_checks_csv(out / "verify_checks.csv", rep.checks)
    rpt.write_json(out / "uncertainty_report.json",
                   _uncertainty_snapshot(cfg))
    if cfg.figures:
        rpt.fig_checks(out / "figures" / "checks.png", rep.checks)
    for c in rep.checks:
        status = "PASS" if c.passed else ("INFO" if c.kind == "info" else "FAIL")
        print(f"[{status}] {c.name}: measured {c.measured:.3e}"
              + ("" if c.kind == "info" else f" vs {c.tolerance:.3e}"))
    if rep.n_failed:
        print(f"{rep.n_failed} check(s) failed")
        return 1
    return 0


def _uncertainty_snapshot(cfg: RunConfig) -> dict:
    """Both uncertainty reports for one seeded representative input."""
    from .qst import qst_forward as _fwd
    from .uncertainty import heisenberg, log_uncertainty
    from .verify import random_centered_field

    from .uncertainty import UncertaintyReport

    rng = np.random.default_rng(cfg.seed)
    gen = cfg.generator()
    grid = cfg.grid()
    shape = (32, 32)
    table = admissibility_q(gen, grid, shape)
    try:
        fld = random_centered_field(rng, shape, table)
    except ValueError:  # grid too coarse for a flat band at this size
        return UncertaintyReport().as_dict()
    vol = _fwd(fld, gen, grid)
    rep = heisenberg(fld, gen, grid, table, vol).merged(
        log_uncertainty(fld, gen, grid, table, vol))
    return rep.as_dict()


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="qshear",
        description="Quaternion shearlet analysis, synthesis and verification")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("analyze", "synthesize", "verify"):
        p = sub.add_parser(name)
        p.add_argument("--config", required=(name != "verify"),
                       help="JSON run configuration")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--out", default=None)
        if name == "synthesize":
            p.add_argument("--mode", choices=[FRAME_CORRECTED, PAPER_CONSTANT],
                           default=None)
    args = parser.parse_args(argv)
    try:
        if args.config:
            cfg = _load_config(args.config)
        else:
            cfg = RunConfig()
        cfg = _apply_overrides(cfg, args)
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "synthesize":
            return cmd_synthesize(cfg)
        return cmd_verify(cfg)
    except (ConfigError, QSHCError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
