"""Receiver-side analysis of 36-point spectra.

The coarse spectrum is interpolated onto a 512-point frequency grid by
zero padding in time: inverse 36-point DFT, append 476 zeros, forward
512-point DFT.  This evaluates the periodic (Dirichlet) interpolation of
the complex spectrum, so a tone keeps its true amplitude instead of the
distorted value a fit through the 36 magnitudes would give.

The largest fine bin in the positive half, excluding DC and Nyquist,
gives the tone estimate.  The DC line's main lobe spills across the first
fourteen fine bins, so the search runs on the fine spectrum with the DC
line's interpolated contribution subtracted; otherwise a plain offset
reads as a tone just above 0 Hz.  Amplitude scaling is 2/36 for a tone
(its energy is split between +f and -f) and 1/36 for DC.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from .complex_core import to_complex_array

FRAME_SIZE = 36
FINE_SIZE = 512
# peaks weaker than this are treated as absent
NO_SIGNAL_VOLTS = 1e-4


class AnalysisError(ValueError):
    """Raised for spectra that cannot be analysed, e.g. containing NaN."""


# interpolated image of a unit DC line: fine spectrum of 36 samples of 1/36
_DC_LINE = np.fft.fft(np.full(FRAME_SIZE, 1.0 / FRAME_SIZE), n=FINE_SIZE)


@dataclass(frozen=True)
class FineSpectrum:
    """512 interpolated magnitudes.

    ``values`` keeps the complex interpolation when it is known; the peak
    search needs it to take the DC line out.
    """

    mags: np.ndarray
    sample_rate_hz: float
    values: Optional[np.ndarray] = None

    def __post_init__(self):
        if len(self.mags) != FINE_SIZE:
            raise ValueError(f"fine spectrum has {FINE_SIZE} bins, got {len(self.mags)}")
        if self.values is not None and len(self.values) != FINE_SIZE:
            raise ValueError(f"fine spectrum has {FINE_SIZE} bins, got {len(self.values)}")
        if not self.sample_rate_hz > 0:
            raise ValueError("sample_rate_hz must be positive")

    def frequency(self, m: int) -> float:
        return m * self.sample_rate_hz / FINE_SIZE


@dataclass(frozen=True)
class SpectrumReport:
    peak_frequency_hz: float
    peak_amplitude_volts: float
    dc_volts: float
    peak_fine_bin: int

    @property
    def no_signal(self) -> bool:
        return self.peak_amplitude_volts == 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self, frame_index: int) -> str:
        status = "no-signal" if self.no_signal else "ok"
        return (f"frame={frame_index} peak_frequency_hz={self.peak_frequency_hz!r} "
                f"peak_amplitude_volts={self.peak_amplitude_volts!r} "
                f"dc_volts={self.dc_volts!r} peak_fine_bin={self.peak_fine_bin} status={status}")


def _as_array(spectrum: Sequence) -> np.ndarray:
    if len(spectrum) != FRAME_SIZE:
        raise ValueError(f"expected {FRAME_SIZE} spectral values, got {len(spectrum)}")
    if isinstance(spectrum, np.ndarray):
        arr = spectrum.astype(np.complex128)
    else:
        arr = to_complex_array(spectrum).astype(np.complex128)
    if not np.all(np.isfinite(arr)):
        raise AnalysisError("spectrum contains NaN or infinite values")
    return arr


def magnitude(spectrum: Sequence) -> np.ndarray:
    arr = _as_array(spectrum)
    return np.sqrt(arr.real ** 2 + arr.imag ** 2)


def interpolate512(spectrum: Sequence, sample_rate_hz: float = 1.0) -> FineSpectrum:
    arr = _as_array(spectrum)
    time_domain = np.fft.ifft(arr)
    fine = np.fft.fft(time_domain, n=FINE_SIZE)
    return FineSpectrum(np.abs(fine), float(sample_rate_hz), fine)


def estimate_peak(fine: FineSpectrum, noise_floor_volts: float = NO_SIGNAL_VOLTS) -> SpectrumReport:
    """Pick the strongest positive-frequency fine bin.

    The search excludes DC: bins 1..255 only, on magnitudes with the DC
    line removed when complex values are available.  Ties go to the lower
    bin.  If that peak reads below
    ``noise_floor_volts`` the report carries zero frequency, zero
    amplitude and bin 0, which marks it as no signal.
    """
    mags = np.asarray(fine.mags, dtype=np.float64)
    if not np.all(np.isfinite(mags)):
        raise AnalysisError("fine spectrum contains NaN or infinite values")
    dc_volts = float(mags[0]) / FRAME_SIZE
    if fine.values is not None:
        search = np.abs(fine.values - fine.values[0] * _DC_LINE)
    else:
        search = mags
    m = 1 + int(np.argmax(search[1:FINE_SIZE // 2]))
    amplitude = 2.0 * float(search[m]) / FRAME_SIZE
    if amplitude <= noise_floor_volts:
        return SpectrumReport(0.0, 0.0, dc_volts, 0)
    return SpectrumReport(fine.frequency(m), amplitude, dc_volts, m)


def double_sided(fine: FineSpectrum) -> list[tuple[float, float]]:
    """Fine spectrum on a signed frequency axis, -fs/2 first."""
    half = FINE_SIZE // 2
    order = list(range(half, FINE_SIZE)) + list(range(half))
    out = []
    for m in order:
        signed = m - FINE_SIZE if m >= half else m
        out.append((fine.frequency(signed), float(fine.mags[m])))
    return out


def analyze_frame(spectrum: Sequence, sample_rate_hz: float,
                  noise_floor_volts: float = NO_SIGNAL_VOLTS) -> tuple[FineSpectrum, SpectrumReport]:
    fine = interpolate512(spectrum, sample_rate_hz)
    return fine, estimate_peak(fine, noise_floor_volts)


def coarse_double_sided(spectrum: Sequence, sample_rate_hz: float) -> list[tuple[float, float]]:
    """The 36 coarse bins on the same signed axis as :func:`double_sided`."""
    mags = magnitude(spectrum)
    half = FRAME_SIZE // 2
    out = []
    for k in list(range(half, FRAME_SIZE)) + list(range(half)):
        signed = k - FRAME_SIZE if k >= half else k
        out.append((signed * sample_rate_hz / FRAME_SIZE, float(mags[k])))
    return out


def write_plot_data(path, fine: FineSpectrum) -> None:
    """Two whitespace-separated columns: frequency_hz, magnitude."""
    with open(path, "w") as fh:
        fh.write("# frequency_hz magnitude\n")
        for f, mag in double_sided(fine):
            fh.write(f"{f!r} {mag!r}\n")

