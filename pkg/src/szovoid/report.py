"""Report rendering: a delimited check table plus matplotlib figures.

The report directory gets one TSV with every verification line and, per
design, an incidence-matrix picture and a coverage histogram, plus a bar
chart of the stabilizer orbit sizes.  Figures are rendered with the Agg
backend so reports work on headless machines.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib
import numpy as np

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from . import designs as designs_mod  # noqa: E402
from .checks import Check  # noqa: E402
from .designs import Design  # noqa: E402
from .verify import VerificationRun  # noqa: E402

MAX_RENDER_COLS = 4096


def write_checks_tsv(checks: list[Check], path) -> None:
    lines = ["check\tstatus\tdetail"]
    lines.extend(f"{c.name}\t{c.status}\t{c.detail}" for c in checks)
    Path(path).write_text("\n".join(lines) + "\n")


def _downsampled_incidence(design: Design) -> tuple[np.ndarray, int]:
    """Incidence matrix, column-binned when there are too many blocks."""
    inc = designs_mod.incidence_matrix(design, dtype=np.uint8)
    b = inc.shape[1]
    if b <= MAX_RENDER_COLS:
        return inc.astype(np.float64), 1
    stride = -(-b // MAX_RENDER_COLS)
    pad = (-b) % stride
    padded = np.pad(inc, ((0, 0), (0, pad)))
    binned = padded.reshape(inc.shape[0], -1, stride).mean(axis=2)
    return binned, stride


def incidence_figure(design: Design, path) -> None:
    data, stride = _downsampled_incidence(design)
    p = design.params
    fig, ax = plt.subplots(figsize=(10, 4))
    ax.imshow(data, aspect="auto", interpolation="nearest", cmap="Greys")
    title = (f"q={design.q} family {design.family}: incidence, "
             f"v={p.v}, b={p.b}, k={p.k}")
    if stride > 1:
        title += f" (columns binned {stride}x)"
    ax.set_title(title)
    ax.set_xlabel("block")
    ax.set_ylabel("point")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def coverage_figure(design: Design, path) -> None:
    """Histograms of pair coverage and point replication.

    For a valid 2-design both collapse to a single spike, at lambda and at
    r; anything else is immediately visible.
    """
    gram = designs_mod.pair_coverage(design)
    p = design.params
    v = p.v
    off = gram[~np.eye(v, dtype=bool)]
    diag = np.diagonal(gram)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4))
    ax1.hist(off, bins=30, color="tab:blue")
    ax1.axvline(p.lambda_, color="tab:red", linestyle="--",
                label=f"lambda = {p.lambda_}")
    ax1.set_title(f"pairs per block count ({v * (v - 1) // 2} pairs)")
    ax1.set_xlabel("blocks through a point pair")
    ax1.legend()
    ax2.hist(diag, bins=30, color="tab:green")
    ax2.axvline(p.r, color="tab:red", linestyle="--", label=f"r = {p.r}")
    ax2.set_title(f"blocks through a point ({v} points)")
    ax2.set_xlabel("blocks through a point")
    ax2.legend()
    fig.suptitle(f"q={design.q} family {design.family} coverage")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def orbit_figure(q: int, path) -> None:
    sizes = [1, q, q * (q - 1)]
    labels = ["{infinity}", "p(0, beta)", "p(alpha, beta), alpha != 0"]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(labels, sizes, color=["tab:gray", "tab:blue", "tab:orange"])
    ax.set_yscale("log")
    ax.set_ylabel("orbit size")
    ax.set_title(f"q={q}: orbits of the block stabilizer on the ovoid")
    for i, s in enumerate(sizes):
        ax.text(i, s, str(s), ha="center", va="bottom")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_report(run: VerificationRun, outdir) -> list[Path]:
    """Write the TSV and all figures for a verification run."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    q = run.field.q
    written = []

    tsv = outdir / f"report_q{q}.tsv"
    write_checks_tsv(run.checks, tsv)
    written.append(tsv)

    orb = outdir / f"orbits_q{q}.png"
    orbit_figure(q, orb)
    written.append(orb)

    for family, design in sorted(run.designs.items()):
        inc = outdir / f"incidence_q{q}_f{family}.png"
        incidence_figure(design, inc)
        written.append(inc)
        cov = outdir / f"coverage_q{q}_f{family}.png"
        coverage_figure(design, cov)
        written.append(cov)
    return written
