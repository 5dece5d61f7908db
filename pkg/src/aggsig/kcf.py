"""Kernelized correlation-filter base tracker on windowed grayscale features.

Single fixed-scale Gaussian-kernel KCF: ridge regression in the Fourier
domain against a centered Gaussian label, cosine-windowed zero-mean grayscale
patch as the feature, dense Gaussian kernel correlation for both training and
detection. The cross-correlation term is rolled so that zero displacement
lands on the window center; the detect argmax minus the center is then the
pixel displacement directly.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .geometry import Box, shift_box_into
from .spectral import as_matrix, fft2, ifft2


@dataclass(frozen=True)
class KCFConfig:
    padding: float = 2.5
    reg_lambda: float = 1e-4
    learn_rate: float = 0.02
    kernel_sigma: float = 0.5
    label_sigma_factor: float = 0.1

    def __post_init__(self):
        if self.padding < 1.0:
            raise ValueError("padding must be >= 1 (window at least target-sized)")
        if not 0.0 <= self.learn_rate <= 1.0:
            raise ValueError("learn_rate must lie in [0, 1]")
        if self.reg_lambda <= 0:
            raise ValueError("reg_lambda must be positive")


@dataclass
class TrackerState:
    model_alpha: np.ndarray
    model_template: np.ndarray
    box: Box
    label_spectrum: np.ndarray
    cfg: KCFConfig


def frame_to_gray(frame: np.ndarray) -> np.ndarray:
    """Mean of the color planes; grayscale input passes through."""
    frame = np.asarray(frame, dtype=np.float64)
    if frame.ndim == 3:
        return frame.mean(axis=2)
    return as_matrix(frame)


def get_subwindow(gray: np.ndarray, center: tuple[float, float], size: tuple[int, int]) -> np.ndarray:
    """Extract a size=(rows, cols) patch centered on (cy, cx), replicating borders."""
    gray = as_matrix(gray)
    cy, cx = center
    rows, cols = size
    ys = np.floor(cy).astype(np.int64) + np.arange(rows) - rows // 2
    xs = np.floor(cx).astype(np.int64) + np.arange(cols) - cols // 2
    ys = np.clip(ys, 0, gray.shape[0] - 1)
    xs = np.clip(xs, 0, gray.shape[1] - 1)
    return gray[np.ix_(ys, xs)]


def _window_size(box: Box, padding: float) -> tuple[int, int]:
    return max(int(round(padding * box.h)), 4), max(int(round(padding * box.w)), 4)


def _cosine_window(size: tuple[int, int]) -> np.ndarray:
    return np.outer(np.hanning(size[0]), np.hanning(size[1]))


def _features(gray: np.ndarray, center: tuple[float, float], size: tuple[int, int]) -> np.ndarray:
    patch = get_subwindow(gray, center, size)
    patch = patch - patch.mean()
    return patch * _cosine_window(size)


def gaussian_labels(size: tuple[int, int], sigma: float) -> np.ndarray:
    """Gaussian regression target, peak exactly 1 at (rows//2, cols//2)."""
    rows, cols = size
    ys = (np.arange(rows) - rows // 2)[:, None]
    xs = (np.arange(cols) - cols // 2)[None, :]
    return np.exp(-0.5 * (ys**2 + xs**2) / (sigma * sigma))


def dense_gauss_kernel(sigma: float, x: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Gaussian kernel correlation between x and every cyclic shift of z.

    The map is rolled so the zero-shift entry sits at (rows//2, cols//2); if x
    equals z translated by (dy, dx), the peak sits at (rows//2+dy, cols//2+dx).
    """
    x = as_matrix(x)
    z = as_matrix(z)
    if x.shape != z.shape:
        raise ValueError(f"shape mismatch: {x.shape} vs {z.shape}")
    cross = ifft2(fft2(x) * np.conj(fft2(z)))
    cross = np.roll(np.roll(cross, x.shape[0] // 2, axis=0), x.shape[1] // 2, axis=1)
    d = (x * x).sum() + (z * z).sum() - 2.0 * cross
    return np.exp(-np.maximum(d, 0.0) / (sigma * sigma * x.size))


def _train_alpha(features: np.ndarray, label_spectrum: np.ndarray, cfg: KCFConfig) -> np.ndarray:
    k = dense_gauss_kernel(cfg.kernel_sigma, features, features)
    return label_spectrum / (fft2(k) + cfg.reg_lambda)


def tracker_init(frame: np.ndarray, box: Box, cfg: KCFConfig = KCFConfig()) -> TrackerState:
    """Train a fresh model on the padded window around box."""
    gray = frame_to_gray(frame)
    rows, cols = gray.shape
    box = shift_box_into(box, rows, cols)
    size = _window_size(box, cfg.padding)
    cx, cy = box.center
    x = _features(gray, (cy, cx), size)
    label_sigma = cfg.label_sigma_factor * np.sqrt(box.w * box.h)
    label_spectrum = fft2(gaussian_labels(size, label_sigma))
    alpha = _train_alpha(x, label_spectrum, cfg)
    return TrackerState(model_alpha=alpha, model_template=x, box=box, label_spectrum=label_spectrum, cfg=cfg)


def tracker_detect(state: TrackerState, frame: np.ndarray) -> tuple[Box, float]:
    """Correlate the window at the current box against the model.

    Returns the box recentered on the response argmax (ties row-major) and the
    maximum response. State is not modified.
    """
    gray = frame_to_gray(frame)
    size = state.model_template.shape
    cx, cy = state.box.center
    z = _features(gray, (cy, cx), size)
    k = dense_gauss_kernel(state.cfg.kernel_sigma, z, state.model_template)
    response = ifft2(state.model_alpha * fft2(k))
    r, c = divmod(int(np.argmax(response)), size[1])
    dy, dx = r - size[0] // 2, c - size[1] // 2
    box = Box(state.box.x + dx, state.box.y + dy, state.box.w, state.box.h)
    box = shift_box_into(box, gray.shape[0], gray.shape[1])
    return box, float(response[r, c])


def tracker_update(state: TrackerState, frame: np.ndarray, box: Box) -> TrackerState:
    """Interpolate the model toward a fresh fit at box with factor learn_rate."""
    gray = frame_to_gray(frame)
    rows, cols = gray.shape
    box = shift_box_into(box, rows, cols)
    size = state.model_template.shape
    cx, cy = box.center
    x = _features(gray, (cy, cx), size)
    alpha = _train_alpha(x, state.label_spectrum, state.cfg)
    lr = state.cfg.learn_rate
    return replace(
        state,
        model_alpha=(1.0 - lr) * state.model_alpha + lr * alpha,
        model_template=(1.0 - lr) * state.model_template + lr * x,
        box=box,
    )
