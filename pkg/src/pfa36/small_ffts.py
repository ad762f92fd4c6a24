"""Small fixed-size DFT kernels: FFT-2, FFT-4, WFTA-3 and FFT-9.

Kernels work in place on a mutable list of :class:`ComplexSample`.  Given
a ``stride``, the block a kernel touches is ``buf[start + i * stride]`` for
``i < N``; without one the buffer must hold exactly N samples.  Views let
the prime factor engine run them over rows and columns of a frame
without gathering into temporaries.  Each kernel returns ``buf``.

Per-call costs charged to the counter, as (real adds, real mults)::

    fft2    (4, 0)
    fft4    (16, 0)     four fft2 calls, the -j rotation is free
    wfta3   (16, 8)     six complex adds, two general complex multiplies
    fft9    (104, 64)   six wfta3 calls plus four twiddle multiplies
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import MutableSequence, Optional

import numpy as np

from .complex_core import ComplexSample, OpCounter, cadd, cmul, csub, mul_neg_j

f32 = np.float32


@dataclass(frozen=True)
class TwiddleConstants:
    c3m1: np.float32
    s3: np.float32
    w9_1: ComplexSample
    w9_2: ComplexSample
    w9_4: ComplexSample


def _w9(k: int) -> ComplexSample:
    theta = 2.0 * math.pi * k / 9.0
    return ComplexSample.of(math.cos(theta), -math.sin(theta))


def make_twiddles() -> TwiddleConstants:
    # 3-point rotation angle is 2*pi/3: cos - 1 = -1.5, sin = 0.8660254
    u = 2.0 * math.pi / 3.0
    return TwiddleConstants(
        c3m1=f32(math.cos(u) - 1.0),
        s3=f32(math.sin(u)),
        w9_1=_w9(1),
        w9_2=_w9(2),
        w9_4=_w9(4),
    )


TWIDDLES = make_twiddles()

# WFTA-3 coefficients as complex operands for the general multiply
_C3M1 = ComplexSample(TWIDDLES.c3m1, f32(0.0))
_J_S3 = ComplexSample(f32(0.0), TWIDDLES.s3)


def _positions(buf: MutableSequence, n: int, start: int, stride: Optional[int],
               name: str) -> list[int]:
    if stride is None:
        # no view given: the whole buffer is the block
        if start != 0 or len(buf) != n:
            raise ValueError(f"{name} needs a block of {n} samples, got {len(buf)}")
        stride = 1
    if start < 0 or stride < 1 or start + (n - 1) * stride >= len(buf):
        raise ValueError(
            f"{name} view start={start} stride={stride} does not fit a buffer of {len(buf)}"
        )
    return [start + i * stride for i in range(n)]


def fft2(buf: MutableSequence[ComplexSample], ctx: Optional[OpCounter] = None,
         start: int = 0, stride: Optional[int] = None) -> MutableSequence[ComplexSample]:
    i0, i1 = _positions(buf, 2, start, stride, "fft2")
    a, b = buf[i0], buf[i1]
    buf[i0] = cadd(a, b, ctx)
    buf[i1] = csub(a, b, ctx)
    return buf


def fft4(buf: MutableSequence[ComplexSample], ctx: Optional[OpCounter] = None,
         start: int = 0, stride: Optional[int] = None) -> MutableSequence[ComplexSample]:
    """Radix-2 decimation in time, four butterflies."""
    i0, i1, i2, i3 = _positions(buf, 4, start, stride, "fft4")
    step = i1 - i0
    # even/odd pairs: (x0, x2) and (x1, x3)
    fft2(buf, ctx, i0, 2 * step)
    fft2(buf, ctx, i1, 2 * step)
    buf[i3] = mul_neg_j(buf[i3])
    fft2(buf, ctx, i0, step)
    fft2(buf, ctx, i2, step)
    # slots now hold X0, X2, X1, X3
    buf[i1], buf[i2] = buf[i2], buf[i1]
    return buf


def wfta3(buf: MutableSequence[ComplexSample], ctx: Optional[OpCounter] = None,
          start: int = 0, stride: Optional[int] = None) -> MutableSequence[ComplexSample]:
    """Winograd 3-point DFT.

    t1 = x1 + x2, t2 = x1 - x2, m0 = x0 + t1, m1 = (cos u - 1) t1,
    m2 = j sin(u) t2, s1 = m0 + m1, X = (m0, s1 - m2, s1 + m2).
    """
    i0, i1, i2 = _positions(buf, 3, start, stride, "wfta3")
    x0, x1, x2 = buf[i0], buf[i1], buf[i2]
    t1 = cadd(x1, x2, ctx)
    t2 = csub(x1, x2, ctx)
    m0 = cadd(x0, t1, ctx)
    m1 = cmul(t1, _C3M1, ctx)
    m2 = cmul(t2, _J_S3, ctx)
    s1 = cadd(m0, m1, ctx)
    buf[i0] = m0
    buf[i1] = csub(s1, m2, ctx)
    buf[i2] = cadd(s1, m2, ctx)
    return buf


# (local position, twiddle) pairs applied between the two WFTA-3 stages;
# local position n2 + 3*k1 gets W9^(n2*k1)
_FFT9_TWIDDLES = (
    (4, TWIDDLES.w9_1),
    (5, TWIDDLES.w9_2),
    (7, TWIDDLES.w9_2),
    (8, TWIDDLES.w9_4),
)


def fft9(buf: MutableSequence[ComplexSample], ctx: Optional[OpCounter] = None,
         start: int = 0, stride: Optional[int] = None) -> MutableSequence[ComplexSample]:
    """3x3 Cooley-Tukey with WFTA-3 butterflies.

    Input index n = n2 + 3*n1, output index k = k1 + 3*k2.
    """
    pos = _positions(buf, 9, start, stride, "fft9")
    step = pos[1] - pos[0]
    for n2 in range(3):
        wfta3(buf, ctx, pos[n2], 3 * step)
    for local, w in _FFT9_TWIDDLES:
        buf[pos[local]] = cmul(buf[pos[local]], w, ctx)
    for k1 in range(3):
        wfta3(buf, ctx, pos[3 * k1], step)
    # X[k1 + 3*k2] sits at local slot 3*k1 + k2: transpose the 3x3 block
    tmp = [buf[p] for p in pos]
    for k1 in range(3):
        for k2 in range(3):
            buf[pos[k1 + 3 * k2]] = tmp[3 * k1 + k2]
    return buf


KERNELS = {2: fft2, 3: wfta3, 4: fft4, 9: fft9}


def kernel_cost(n: int) -> tuple[int, int]:
    """Measure (real adds, real mults) of one call of the size-n kernel."""
    ctx = OpCounter()
    KERNELS[n]([ComplexSample.of(0.0, 0.0) for _ in range(n)], ctx)
    return ctx.as_tuple()
