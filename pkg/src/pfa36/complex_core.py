"""Single-precision complex arithmetic with optional operation counting.

Every value is held as a pair of ``numpy.float32`` scalars so that each
intermediate result is rounded to binary32, as it would be on a
microcontroller FPU.  Arithmetic helpers accept an optional
:class:`OpCounter`; when given, they charge the real additions and real
multiplications the operation costs.  Utility math that should not show
up in transform tallies simply omits the counter.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

f32 = np.float32


@dataclass(frozen=True, slots=True)
class ComplexSample:
    re: np.float32
    im: np.float32

    @classmethod
    def of(cls, re=0.0, im=0.0) -> "ComplexSample":
        """Build a sample from anything float-like, rounding to binary32."""
        return cls(f32(re), f32(im))

    @classmethod
    def from_complex(cls, z: complex) -> "ComplexSample":
        return cls(f32(z.real), f32(z.imag))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.re) and np.isfinite(self.im))


ZERO = ComplexSample.of(0.0, 0.0)
ONE = ComplexSample.of(1.0, 0.0)


@dataclass
class OpCounter:
    """Tally of real additions and real multiplications."""

    real_adds: int = 0
    real_mults: int = 0

    def charge(self, adds: int = 0, mults: int = 0) -> None:
        if adds < 0 or mults < 0:
            raise ValueError("operation counts only grow")
        self.real_adds += adds
        self.real_mults += mults

    def as_tuple(self) -> tuple[int, int]:
        return (self.real_adds, self.real_mults)


def cadd(a: ComplexSample, b: ComplexSample, ctx: Optional[OpCounter] = None) -> ComplexSample:
    if ctx is not None:
        ctx.real_adds += 2
    return ComplexSample(a.re + b.re, a.im + b.im)


def csub(a: ComplexSample, b: ComplexSample, ctx: Optional[OpCounter] = None) -> ComplexSample:
    if ctx is not None:
        ctx.real_adds += 2
    return ComplexSample(a.re - b.re, a.im - b.im)


def cmul(a: ComplexSample, b: ComplexSample, ctx: Optional[OpCounter] = None) -> ComplexSample:
    """General complex product: four real multiplies, two real adds."""
    if ctx is not None:
        ctx.real_mults += 4
        ctx.real_adds += 2
    return ComplexSample(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)


def mul_neg_j(a: ComplexSample) -> ComplexSample:
    """Multiply by -j by swapping parts and negating the new imaginary part.

    Free of arithmetic cost, so it takes no counter.
    """
    return ComplexSample(a.im, -a.re)


def as_samples(values: Iterable) -> list[ComplexSample]:
    """Coerce complex numbers, (re, im) pairs or samples to a list of samples."""
    out = []
    for v in values:
        if isinstance(v, ComplexSample):
            out.append(v)
        elif isinstance(v, tuple):
            out.append(ComplexSample.of(*v))
        else:
            z = complex(v)
            out.append(ComplexSample(f32(z.real), f32(z.imag)))
    return out


def to_complex_array(samples: Iterable[ComplexSample]) -> np.ndarray:
    """Pack samples into a complex64 array without changing any bits."""
    samples = list(samples)
    out = np.empty(len(samples), dtype=np.complex64)
    out.real = [s.re for s in samples]
    out.imag = [s.im for s in samples]
    return out
