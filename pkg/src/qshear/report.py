"""Report rendering: deterministic JSON/CSV emitters and matplotlib figures.

JSON floats are written with fixed 17-significant-digit formatting so that
repeated runs with the same seed produce byte-identical reports.  Figures
are rendered with the Agg backend straight to files; they accompany the
delimited outputs but are not part of the determinism contract.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

__all__ = [
    "dumps_json17",
    "write_json",
    "write_checks_csv",
    "write_slice_energy_csv",
    "fig_delta_heatmap",
    "fig_slice_energy",
    "fig_checks",
    "fig_reconstruction",
]


def _fmt_float(x: float) -> str:
    if isinstance(x, float):
        if math.isnan(x):
            return "NaN"
        if math.isinf(x):
            return "Infinity" if x > 0 else "-Infinity"
        return format(x, ".17g")
    return repr(x)


def dumps_json17(obj, indent: int = 0) -> str:
    """Serialize to JSON with '%.17g' floats and sorted keys."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = []
        for key in sorted(obj):
            items.append(f'{inner}"{key}": '
                         + dumps_json17(obj[key], indent + 2).lstrip())
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [inner + dumps_json17(v, indent + 2).lstrip() for v in obj]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (np.floating, float)):
        return _fmt_float(float(obj))
    if isinstance(obj, (np.integer, int)):
        return str(int(obj))
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{out}"'
    raise TypeError(f"cannot serialize {type(obj)!r}")


def write_json(path, obj) -> None:
    Path(path).write_text(dumps_json17(obj) + "\n")


def write_checks_csv(path, checks) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["name", "measured", "tolerance", "kind", "passed", "note"])
        for c in checks:
            w.writerow([c.name, _fmt_float(c.measured), _fmt_float(c.tolerance),
                        c.kind, int(c.passed), c.note])


def write_slice_energy_csv(path, grid, energies) -> None:
    """Per-(scale, shear) slice energies as delimited output."""
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["scale_index", "shear_index", "scale", "shear",
                    "weight", "energy"])
        for i, a in enumerate(grid.scales):
            for j, s in enumerate(grid.shears):
                w.writerow([i, j, _fmt_float(float(a)), _fmt_float(float(s)),
                            _fmt_float(float(grid.weights[i, j])),
                            _fmt_float(float(energies[i, j]))])


def fig_delta_heatmap(path, delta, c_value) -> None:
    """Frame function over the frequency lattice, centered for display."""
    fig, ax = plt.subplots(figsize=(5.0, 4.2))
    shifted = np.fft.fftshift(delta)
    n1, n2 = delta.shape
    im = ax.imshow(shifted.T, origin="lower", aspect="auto",
                   extent=(-n1 // 2, n1 // 2, -n2 // 2, n2 // 2),
                   cmap="viridis")
    fig.colorbar(im, ax=ax, label="frame function")
    ax.set_xlabel("frequency cycles, axis 1")
    ax.set_ylabel("frequency cycles, axis 2")
    ax.set_title(f"admissibility table (C = {c_value:.4g})")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def fig_slice_energy(path, grid, energies) -> None:
    fig, ax = plt.subplots(figsize=(5.6, 4.0))
    im = ax.imshow(np.asarray(energies), origin="upper", aspect="auto",
                   cmap="magma")
    fig.colorbar(im, ax=ax, label="slice energy")
    ax.set_yticks(range(grid.scales.size))
    ax.set_yticklabels([f"{a:.3g}" for a in grid.scales])
    step = max(1, grid.shears.size // 8)
    ax.set_xticks(range(0, grid.shears.size, step))
    ax.set_xticklabels([f"{s:.2g}" for s in grid.shears[::step]])
    ax.set_xlabel("shear")
    ax.set_ylabel("scale")
    ax.set_title("coefficient energy per (scale, shear)")
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def fig_checks(path, checks) -> None:
    gated = [c for c in checks if c.kind != "info"]
    fig, ax = plt.subplots(figsize=(7.0, 0.32 * max(8, len(gated))))
    names = [c.name for c in gated]
    vals = []
    for c in gated:
        if c.kind == "upper" and c.tolerance > 0:
            vals.append(max(c.measured / c.tolerance, 1e-18))
        else:
            vals.append(max(abs(c.measured), 1e-18))
    colors = ["#2a7f3f" if c.passed else "#b03030" for c in gated]
    y = np.arange(len(gated))
    ax.barh(y, vals, color=colors)
    ax.set_yticks(y)
    ax.set_yticklabels(names, fontsize=7)
    ax.set_xscale("log")
    ax.axvline(1.0, color="k", lw=0.8, ls="--")
    ax.set_xlabel("measured / tolerance (upper-bound checks)")
    ax.set_title("verification checks")
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)


def fig_reconstruction(path, original, reconstruction) -> None:
    """Side-by-side scalar components and the error map."""
    fig, axes = plt.subplots(1, 3, figsize=(10.5, 3.4))
    o = original[..., 0]
    r = reconstruction[..., 0]
    err = np.sqrt(((original - reconstruction) ** 2).sum(axis=-1))
    for ax, img, title in zip(axes, [o, r, err],
                              ["original (a0)", "reconstruction (a0)",
                               "pointwise error"]):
        im = ax.imshow(img, cmap="gray" if title != "pointwise error"
                       else "inferno")
        ax.set_title(title, fontsize=9)
        ax.set_xticks([]); ax.set_yticks([])
        fig.colorbar(im, ax=ax, fraction=0.046)
    fig.tight_layout()
    fig.savefig(path, dpi=110)
    plt.close(fig)
