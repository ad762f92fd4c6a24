"""Simulated tone source and 12-bit differential two's-complement ADC.

The converter digitizes V+ - V-.  In two's-complement mode one bit goes
to the sign, so the 12-bit code spans [-2048, 2047] over a 6.6 V
full-scale range (twice the 3.3 V single-ended span).  The model is a
mid-tread quantizer with one LSB = full_scale / 4096, rounding half up,
saturating at the end codes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .complex_core import ComplexSample

FRAME_SIZE = 36
ADC_BITS = 12
CODE_MIN = -(1 << (ADC_BITS - 1))
CODE_MAX = (1 << (ADC_BITS - 1)) - 1


@dataclass(frozen=True)
class AcquisitionConfig:
    amplitude_volts: float = 1.0
    frequency_hz: float = 5000.0
    offset_volts: float = 0.0
    sample_rate_hz: float = 36000.0
    full_scale_volts: float = 6.6
    bits: int = ADC_BITS

    def __post_init__(self):
        if self.amplitude_volts < 0:
            raise ValueError("amplitude_volts must be non-negative")
        if self.frequency_hz < 0:
            raise ValueError("frequency_hz must be non-negative")
        if not self.sample_rate_hz > 0:
            raise ValueError("sample_rate_hz must be positive")
        if not self.full_scale_volts > 0:
            raise ValueError("full_scale_volts must be positive")
        if self.bits != ADC_BITS:
            raise ValueError(f"only a {ADC_BITS}-bit converter is modelled")

    @property
    def lsb_volts(self) -> float:
        return self.full_scale_volts / (1 << self.bits)


def synth_sample(cfg: AcquisitionConfig, t: float) -> float:
    """Differential input voltage at time ``t`` seconds."""
    return cfg.offset_volts + cfg.amplitude_volts * math.sin(2.0 * math.pi * cfg.frequency_hz * t)


def adc_quantize(cfg: AcquisitionConfig, v: float) -> int:
    code = math.floor(v / cfg.lsb_volts + 0.5)
    return max(CODE_MIN, min(CODE_MAX, code))


def code_to_volts(cfg: AcquisitionConfig, code: int) -> float:
    return code * cfg.lsb_volts


def capture_frame(cfg: AcquisitionConfig, t0: float = 0.0) -> list[ComplexSample]:
    """Read 36 consecutive conversions starting at ``t0`` as real samples."""
    frame = []
    for n in range(FRAME_SIZE):
        v = synth_sample(cfg, t0 + n / cfg.sample_rate_hz)
        frame.append(ComplexSample.of(code_to_volts(cfg, adc_quantize(cfg, v)), 0.0))
    return frame


def frame_start_time(cfg: AcquisitionConfig, index: int) -> float:
    """Start time of the ``index``-th frame when frames are captured back to back."""
    return index * FRAME_SIZE / cfg.sample_rate_hz
