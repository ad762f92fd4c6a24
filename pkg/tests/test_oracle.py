import cmath

import numpy as np
import pytest

from pfa36.oracle import naive_dft, naive_idft, naive_opcount


def test_dft_of_one_sample_is_identity():
    assert naive_dft([5]).tolist() == [5]


def test_impulse():
    np.testing.assert_allclose(naive_dft([1, 0, 0, 0]), [1, 1, 1, 1])


def test_three_point_delayed_impulse():
    w = cmath.exp(-2j * cmath.pi / 3)
    np.testing.assert_allclose(naive_dft([0, 1, 0]), [1, w, w * w], atol=1e-15)


def test_length_argument():
    with pytest.raises(ValueError):
        naive_dft([])
    with pytest.raises(ValueError):
        naive_dft([1, 2, 3], 4)
    assert naive_dft([1, 2], 2).shape == (2,)


@pytest.mark.parametrize("n, expected", [(36, (2592, 5184)), (1, (2, 4)), (4, (32, 64))])
def test_opcount(n, expected):
    assert naive_opcount(n) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 36, 64])
def test_inverse_round_trip(n):
    rng = np.random.default_rng(n)
    x = rng.normal(size=n) + 1j * rng.normal(size=n)
    np.testing.assert_allclose(naive_idft(naive_dft(x)), x, atol=1e-10)


@pytest.mark.parametrize("n", [5, 36])
def test_linear(n):
    rng = np.random.default_rng(50 + n)
    x, y = rng.normal(size=(2, n)) + 1j * rng.normal(size=(2, n))
    a, b = 0.3 - 1.2j, -2.0 + 0.5j
    np.testing.assert_allclose(naive_dft(a * x + b * y), a * naive_dft(x) + b * naive_dft(y),
                               atol=1e-10)


def test_agrees_with_numpy_fft():
    # sanity cross-check against an unrelated implementation
    rng = np.random.default_rng(9)
    x = rng.normal(size=36) + 1j * rng.normal(size=36)
    np.testing.assert_allclose(naive_dft(x), np.fft.fft(x), atol=1e-11)
