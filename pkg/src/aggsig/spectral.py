"""Dense 2-D spectral and spatial kernels.

All operations take and return 2-D float64 arrays ("matrices"). Transforms
are orthonormal so that energy arguments hold exactly; the Gaussian blur is
a separable truncated kernel with symmetric (edge-repeated) reflection at
the borders, which conserves the total mass of the input.
"""
from __future__ import annotations

import numpy as np
import scipy.fft
from scipy.ndimage import convolve1d


def as_matrix(a) -> np.ndarray:
    """Validate and convert input to a finite, non-empty 2-D float64 array."""
    m = np.asarray(a, dtype=np.float64)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if m.size == 0:
        raise ValueError("matrix must be non-empty")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def dct2(m: np.ndarray) -> np.ndarray:
    """Orthonormal 2-D DCT-II (separable, energy preserving)."""
    m = as_matrix(m)
    return scipy.fft.dctn(m, type=2, norm="ortho")


def idct2(m: np.ndarray) -> np.ndarray:
    """Inverse of :func:`dct2` (orthonormal 2-D DCT-III)."""
    m = as_matrix(m)
    return scipy.fft.idctn(m, type=2, norm="ortho")


def sign_elementwise(m: np.ndarray) -> np.ndarray:
    """Entrywise sign: each entry mapped to -1, 0, or +1."""
    return np.sign(as_matrix(m))


def gaussian_blur(m: np.ndarray, sigma: float) -> np.ndarray:
    """Separable Gaussian blur with kernel radius ceil(3*sigma).

    The truncated kernel is renormalized to sum 1 and the borders use
    symmetric reflection (edge sample repeated), so constants pass through
    unchanged and the output sum equals the input sum.
    """
    m = as_matrix(m)
    if sigma <= 0:
        raise ValueError(f"sigma must be > 0, got {sigma}")
    radius = int(np.ceil(3.0 * sigma))
    taps = np.arange(-radius, radius + 1, dtype=np.float64)
    kernel = np.exp(-0.5 * (taps / sigma) ** 2)
    kernel /= kernel.sum()
    out = convolve1d(m, kernel, axis=0, mode="reflect")
    out = convolve1d(out, kernel, axis=1, mode="reflect")
    return out


def fft2(m: np.ndarray) -> np.ndarray:
    """2-D discrete Fourier transform; returns the complex spectrum."""
    m = as_matrix(m)
    return np.fft.fft2(m)


def ifft2(spectrum: np.ndarray) -> np.ndarray:
    """Inverse 2-D DFT with 1/(rows*cols) normalization.

    Returns the real part; spectra of real matrices invert to real matrices
    up to rounding.
    """
    spectrum = np.asarray(spectrum)
    if spectrum.ndim != 2 or spectrum.size == 0:
        raise ValueError("expected a non-empty 2-D spectrum")
    return np.real(np.fft.ifft2(spectrum))
