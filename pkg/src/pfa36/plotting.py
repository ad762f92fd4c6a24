"""Figures for analysed frames.

Draws the double-sided spectrum the way the bench display does: coarse
FFT bins as stems, the 512-point interpolation as a line, and the
detected peak marked.  Uses :class:`matplotlib.figure.Figure` directly so
no pyplot state or interactive backend is involved.
"""
from __future__ import annotations

import math
from typing import Sequence

from matplotlib.figure import Figure

from .spectrum import FineSpectrum, SpectrumReport, coarse_double_sided, double_sided


def figure_size(width: float = 7.0, height: float | None = None) -> tuple[float, float]:
    if height is None:
        height = width * (math.sqrt(5) - 1.0) / 2.0
    return width, height


def spectrum_figure(spectrum: Sequence, fine: FineSpectrum, report: SpectrumReport,
                    title: str = "") -> Figure:
    fig = Figure(figsize=figure_size())
    ax = fig.add_subplot(1, 1, 1)
    fs = fine.sample_rate_hz
    scale = 1e-3 if fs >= 2000 else 1.0
    unit = "kHz" if scale != 1.0 else "Hz"

    fx, fy = zip(*double_sided(fine))
    ax.plot([f * scale for f in fx], fy, lw=1.0, color="tab:blue", label="interpolated (512)")
    cx, cy = zip(*coarse_double_sided(spectrum, fs))
    ax.vlines([f * scale for f in cx], 0.0, cy, colors="tab:gray", lw=0.8)
    ax.plot([f * scale for f in cx], cy, "o", ms=3, color="tab:gray", label="FFT bins (36)")

    if not report.no_signal:
        peak = fine.mags[report.peak_fine_bin]
        ax.plot([report.peak_frequency_hz * scale], [peak], "v", color="tab:red",
                label=f"{report.peak_amplitude_volts:.3f} V @ {report.peak_frequency_hz * scale:.3f} {unit}")
    ax.set_xlim(-fs / 2 * scale, fs / 2 * scale)
    ax.set_xlabel(f"frequency ({unit})")
    ax.set_ylabel("|X|")
    if title:
        ax.set_title(title)
    ax.legend(loc="upper right", fontsize=8, frameon=False)
    fig.tight_layout()
    return fig


def save_spectrum_figure(path, spectrum: Sequence, fine: FineSpectrum,
                         report: SpectrumReport, title: str = "") -> None:
    fig = spectrum_figure(spectrum, fine, report, title)
    fig.savefig(path, dpi=100)
