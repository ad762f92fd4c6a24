import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pfa36.acquisition import (
    CODE_MAX, CODE_MIN, AcquisitionConfig, adc_quantize, capture_frame, code_to_volts,
    frame_start_time, synth_sample,
)
from pfa36.complex_core import to_complex_array
from pfa36.oracle import naive_dft
from pfa36.pfa import pfa36

CFG = AcquisitionConfig()
LSB = 6.6 / 4096


def test_defaults():
    assert CFG.full_scale_volts == 6.6
    assert CFG.bits == 12
    assert CFG.lsb_volts == LSB
    assert (CODE_MIN, CODE_MAX) == (-2048, 2047)


@pytest.mark.parametrize("kwargs", [
    dict(amplitude_volts=-1), dict(frequency_hz=-1), dict(sample_rate_hz=0),
    dict(full_scale_volts=0), dict(bits=16),
])
def test_invalid_config(kwargs):
    with pytest.raises(ValueError):
        AcquisitionConfig(**kwargs)


def test_synth_sample():
    cfg = AcquisitionConfig(amplitude_volts=1, frequency_hz=1000, offset_volts=0)
    assert synth_sample(cfg, 0.0) == 0.0
    assert synth_sample(cfg, 0.00025) == pytest.approx(1.0, abs=1e-12)
    dc = AcquisitionConfig(amplitude_volts=0, offset_volts=0.1)
    assert synth_sample(dc, 0.123) == 0.1


@pytest.mark.parametrize("v, code", [(0.0, 0), (1.65, 1024), (10.0, 2047), (-10.0, -2048),
                                     (-3.3, -2048), (LSB * 0.49, 0), (LSB * 0.5, 1)])
def test_quantize(v, code):
    assert adc_quantize(CFG, v) == code


@pytest.mark.parametrize("code, v", [(0, 0.0), (-2048, -3.3), (1024, 1.65)])
def test_code_to_volts(code, v):
    assert code_to_volts(CFG, code) == pytest.approx(v, abs=1e-12)


@given(st.floats(min_value=-3.3, max_value=3.3 - LSB))
def test_round_trip_within_half_lsb(v):
    assert abs(code_to_volts(CFG, adc_quantize(CFG, v)) - v) <= LSB / 2 + 1e-12


@given(st.floats(min_value=-20, max_value=20), st.floats(min_value=-20, max_value=20))
def test_quantize_monotone(a, b):
    lo, hi = sorted((a, b))
    assert adc_quantize(CFG, lo) <= adc_quantize(CFG, hi)


def test_capture_zero_input():
    frame = capture_frame(AcquisitionConfig(amplitude_volts=0, offset_volts=0))
    assert len(frame) == 36
    assert all(s.re == 0 and s.im == 0 for s in frame)


def test_capture_dc():
    frame = capture_frame(AcquisitionConfig(amplitude_volts=0, frequency_hz=0, offset_volts=1.65))
    assert all(s.re == np.float32(1.65) and s.im == 0 for s in frame)
    assert float(frame[0].re) == pytest.approx(1.6499999, abs=1e-6)


def test_capture_one_period():
    cfg = AcquisitionConfig(amplitude_volts=1, frequency_hz=1000, sample_rate_hz=36000)
    frame = capture_frame(cfg, 0.0)
    x = to_complex_array(frame)
    expected = [code_to_volts(cfg, adc_quantize(cfg, math.sin(2 * math.pi * n / 36)))
                for n in range(36)]
    np.testing.assert_array_equal(x.real, np.float32(expected))
    assert np.all(x.imag == 0)
    X = to_complex_array(pfa36(frame)).astype(complex)
    mags = np.abs(X)
    assert set(np.argsort(mags)[-2:]) == {1, 35}
    np.testing.assert_allclose(X, naive_dft(x), atol=1e-4)


@given(st.floats(min_value=0, max_value=5), st.floats(min_value=0, max_value=17000),
       st.floats(min_value=-1, max_value=1), st.floats(min_value=0, max_value=1))
def test_capture_imaginary_parts_zero(a, f, off, t0):
    cfg = AcquisitionConfig(amplitude_volts=a, frequency_hz=f, offset_volts=off)
    frame = capture_frame(cfg, t0)
    assert all(s.im == 0 for s in frame)
    assert all(CODE_MIN * LSB <= float(s.re) <= CODE_MAX * LSB + 1e-6 for s in frame)


def test_frames_are_contiguous():
    cfg = AcquisitionConfig(frequency_hz=1234.5)
    assert frame_start_time(cfg, 3) == pytest.approx(3 * 36 / 36000)
