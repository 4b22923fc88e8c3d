"""Matplotlib renderings for the CLI report commands.

Each function writes one PNG next to the delimited text output and
returns the path.  Purely cosmetic: nothing here feeds back into the
computations.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .mux import (  # noqa: E402
    LinkMetrics,
    shannon_max_compactness,
    shannon_min_snr,
)
from .trig import CarrierMatrix  # noqa: E402


def save_carrier_heatmap(matrix: CarrierMatrix, path) -> Path:
    """Real/imaginary encodings of the cas table as two heat maps."""
    path = Path(path)
    q = matrix.ctx.spec.order
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, data, label in ((axes[0], matrix._re, 'real part'),
                            (axes[1], matrix._im, 'imaginary part')):
        img = ax.imshow(data, cmap='viridis', vmin=0, vmax=q - 1,
                        interpolation='nearest')
        ax.set_title(label)
        ax.set_xlabel('slot k')
        ax.set_ylabel('user i')
        fig.colorbar(img, ax=ax, shrink=0.8)
    fig.suptitle(f"carrier matrix cas(i*k) over {matrix.ctx.spec!r}, "
                 f"N={matrix.n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_coset_chart(partitions: dict, path) -> Path:
    """Coset sizes by leader for each partition (Fourier / Hartley)."""
    path = Path(path)
    fig, axes = plt.subplots(len(partitions), 1,
                             figsize=(8, 2.6 * len(partitions)),
                             squeeze=False)
    for ax, (label, part) in zip(axes[:, 0], partitions.items()):
        sizes = [len(c) for c in part.cosets]
        xs = np.arange(part.count)
        ax.bar(xs, sizes, color='steelblue')
        ax.set_xticks(xs)
        ax.set_xticklabels([str(l) for l in part.leaders], fontsize=7)
        ax.set_xlabel('coset leader')
        ax.set_ylabel('size')
        ax.set_title(f"{label}: v={part.count} cosets cover N={part.n}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_efficiency_chart(metrics: LinkMetrics, path) -> Path:
    """Bandwidth and spectral efficiency, TDM vs GDM, side by side."""
    path = Path(path)
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(8, 3.6))
    ax1.bar(['TDM', 'GDM'],
            [metrics.bandwidth_tdm_hz, metrics.bandwidth_gdm_hz],
            color=['gray', 'seagreen'])
    ax1.set_ylabel('bandwidth (Hz)')
    ax1.set_title(f"line bandwidth, N={metrics.n} users")
    ax2.bar(['TDM', 'GDM'], [metrics.eta_tdm, metrics.eta_gdm],
            color=['gray', 'seagreen'])
    ax2.set_ylabel('bits/s/Hz')
    ax2.set_title(f"spectral efficiency (x{float(metrics.compactness):.3g})")
    fig.suptitle(f"p={metrics.p}, N={metrics.n}, v={metrics.v}")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def save_shannon_chart(p: int, compactness, path,
                       snr_linear: float | None = None) -> Path:
    """Capacity bound on the compactness factor over an SNR sweep, with
    the scheme's operating point marked."""
    path = Path(path)
    snr_db = np.linspace(0.0, 40.0, 400)
    snr_lin = 10.0 ** (snr_db / 10.0)
    bound = [shannon_max_compactness(p, s) for s in snr_lin]
    gamma = float(compactness)
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.plot(snr_db, bound, label=f"max compactness, p={p}")
    ax.axhline(gamma, color='seagreen', linestyle='--',
               label=f"scheme compactness {gamma:.3g}")
    min_snr = shannon_min_snr(p, compactness)
    if min_snr > 0:
        ax.axvline(10.0 * np.log10(min_snr), color='firebrick',
                   linestyle=':',
                   label=f"min SNR {10.0 * np.log10(min_snr):.1f} dB")
    if snr_linear is not None and snr_linear > 0:
        ax.plot([10.0 * np.log10(snr_linear)],
                [shannon_max_compactness(p, snr_linear)], 'ko',
                label='requested SNR')
    ax.set_xlabel('SNR (dB)')
    ax.set_ylabel('compactness factor')
    ax.legend(fontsize=8)
    ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
