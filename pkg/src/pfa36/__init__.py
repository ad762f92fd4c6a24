"""36-point prime factor algorithm FFT with exact operation counting,
plus a simulated tone -> ADC -> FFT -> wire -> spectrum-estimate chain."""

from .complex_core import ComplexSample, OpCounter, cadd, cmul, csub, mul_neg_j
from .oracle import naive_dft, naive_idft, naive_opcount
from .pfa import IndexMap, PfaReport, crt_output_map, good_input_map, opcount_report, pfa36
from .small_ffts import TWIDDLES, fft2, fft4, fft9, wfta3

__all__ = [
    "ComplexSample", "OpCounter", "cadd", "csub", "cmul", "mul_neg_j",
    "fft2", "fft4", "wfta3", "fft9", "TWIDDLES",
    "IndexMap", "PfaReport", "good_input_map", "crt_output_map", "pfa36", "opcount_report",
    "naive_dft", "naive_idft", "naive_opcount",
]
__version__ = "0.1.0"
