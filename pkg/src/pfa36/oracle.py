"""Direct O(N^2) DFT in double precision, used as ground truth in tests.

Also carries the naive cost model: N^2 complex multiplies at four real
multiplies and two real adds each.  The model does not charge the
N(N-1) summation adds, which matches how the PFA savings are quoted.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Optional

import numpy as np


@lru_cache(maxsize=None)
def _roots(n: int) -> tuple[complex, ...]:
    # W_N^m for m in [0, N); exponents are reduced mod N before use
    return tuple(complex(math.cos(2 * math.pi * m / n), -math.sin(2 * math.pi * m / n))
                 for m in range(n))


def naive_dft(x: Iterable, n: Optional[int] = None) -> np.ndarray:
    """X[k] = sum_n x[n] W_N^(nk), evaluated by a plain double loop."""
    xs = [complex(v) for v in x]
    if n is None:
        n = len(xs)
    if n < 1 or len(xs) == 0:
        raise ValueError("the DFT needs at least one sample")
    if len(xs) != n:
        raise ValueError(f"expected {n} samples, got {len(xs)}")
    w = _roots(n)
    out = np.empty(n, dtype=np.complex128)
    for k in range(n):
        acc = 0j
        for i, xi in enumerate(xs):
            acc += xi * w[(i * k) % n]
        out[k] = acc
    return out


def naive_idft(spectrum: Iterable) -> np.ndarray:
    """Inverse via conjugate, forward transform, conjugate, divide by N."""
    xs = [complex(v).conjugate() for v in spectrum]
    return np.conj(naive_dft(xs)) / len(xs)


def naive_opcount(n: int) -> tuple[int, int]:
    if n < 1:
        raise ValueError("n must be positive")
    return 2 * n * n, 4 * n * n
