"""Good-Thomas index maps and the 36-point prime factor FFT.

With coprime n1, n2 and N = n1*n2, the input index is mapped as
``n = (n2*a + n1*b) mod N`` and the output index is reconstructed from
its residues ``(k mod n1, k mod n2)`` by the Chinese remainder theorem.
Under that pair of maps the DFT becomes a true 2-D DFT over an
``n1 x n2`` grid: no twiddle factors are needed between the stages.

For N = 36 the grid is 4 x 9.  Each of the four rows gets an FFT-9,
then each of the nine columns gets an FFT-4.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .complex_core import ComplexSample, OpCounter, as_samples
from .oracle import naive_opcount
from .small_ffts import fft4, fft9

N1, N2 = 4, 9
N = N1 * N2


@dataclass(frozen=True)
class IndexMap:
    """Row-major ``n1 x n2`` grid of frame indices."""

    n1: int
    n2: int
    table: tuple[int, ...]

    def at(self, a: int, b: int) -> int:
        return self.table[a * self.n2 + b]


def _check_moduli(n1: int, n2: int) -> None:
    if n1 < 2 or n2 < 2:
        raise ValueError(f"factors must be at least 2, got ({n1}, {n2})")
    if math.gcd(n1, n2) != 1:
        raise ValueError(f"factors {n1} and {n2} are not coprime")


def good_input_map(n1: int, n2: int) -> IndexMap:
    _check_moduli(n1, n2)
    n = n1 * n2
    table = tuple((n2 * a + n1 * b) % n for a in range(n1) for b in range(n2))
    return IndexMap(n1, n2, table)


def crt_output_map(n1: int, n2: int) -> IndexMap:
    _check_moduli(n1, n2)
    n = n1 * n2
    # e1 = 1 mod n1 and 0 mod n2; e2 the other way round
    e1 = n2 * pow(n2, -1, n1)
    e2 = n1 * pow(n1, -1, n2)
    table = tuple((k1 * e1 + k2 * e2) % n for k1 in range(n1) for k2 in range(n2))
    return IndexMap(n1, n2, table)


INPUT_MAP = good_input_map(N1, N2)
OUTPUT_MAP = crt_output_map(N1, N2)
_GATHER = INPUT_MAP.table
_SCATTER = OUTPUT_MAP.table


def pfa36(frame: Sequence, ctx: Optional[OpCounter] = None) -> list[ComplexSample]:
    """36-point DFT of ``frame`` by the prime factor algorithm."""
    if len(frame) != N:
        raise ValueError(f"pfa36 needs {N} samples, got {len(frame)}")
    if not all(isinstance(v, ComplexSample) for v in frame):
        frame = as_samples(frame)
    grid = [frame[i] for i in _GATHER]
    for a in range(N1):
        fft9(grid, ctx, a * N2, 1)
    for b in range(N2):
        fft4(grid, ctx, b, N2)
    out: list = [None] * N
    for slot, k in enumerate(_SCATTER):
        out[k] = grid[slot]
    return out


@dataclass(frozen=True)
class PfaReport:
    real_adds: int
    real_mults: int
    naive_real_adds: int
    naive_real_mults: int
    add_reduction_pct: float
    mult_reduction_pct: float


def opcount_report() -> PfaReport:
    ctx = OpCounter()
    pfa36([ComplexSample.of(0.0, 0.0) for _ in range(N)], ctx)
    naive_adds, naive_mults = naive_opcount(N)
    return PfaReport(
        real_adds=ctx.real_adds,
        real_mults=ctx.real_mults,
        naive_real_adds=naive_adds,
        naive_real_mults=naive_mults,
        add_reduction_pct=100.0 * (1.0 - ctx.real_adds / naive_adds),
        mult_reduction_pct=100.0 * (1.0 - ctx.real_mults / naive_mults),
    )
