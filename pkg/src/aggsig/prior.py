"""Target-prior construction for re-detection.

Candidate regions are pulled from a saliency map by greedy non-maximum
suppression, scored against the tracked target's grayscale histogram, and the
scores are painted into a weight map that multiplies the saliency seed of the
next aggregation pass. Pixels outside every candidate keep weight 1.
"""
from __future__ import annotations

import numpy as np

from .geometry import Box, box_slices, clip_box_to_frame
from .spectral import as_matrix

HIST_BINS = 256


def top_m_regions(s: np.ndarray, target_size: tuple[int, int], m: int) -> list:
    """Select up to m target-sized boxes around the strongest local maxima.

    Greedy: repeatedly take the global argmax (row-major tie-break), place a
    box of `target_size` centered there, then suppress a target-sized
    neighborhood so that selected centers stay at least max(w, h)/2 apart.
    Candidate centers are restricted to positions where the box fits fully
    inside the map.
    """
    s = as_matrix(s)
    w, h = target_size
    rows, cols = s.shape
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if w <= 0 or h <= 0 or w > cols or h > rows:
        raise ValueError(f"target size {target_size} invalid for {cols}x{rows} map")

    work = np.full(s.shape, -np.inf)
    r0, r1 = h // 2, rows - h + h // 2
    c0, c1 = w // 2, cols - w + w // 2
    work[r0 : r1 + 1, c0 : c1 + 1] = s[r0 : r1 + 1, c0 : c1 + 1]

    # suppression halfwidth keeps surviving centers > this Chebyshev distance
    # away, which guarantees the max(w, h)/2 Euclidean separation contract
    sup = (max(w, h) - 1) // 2
    boxes = []
    for _ in range(m):
        flat = int(np.argmax(work))
        r, c = divmod(flat, cols)
        if not np.isfinite(work[r, c]):
            break
        boxes.append(Box(c - w // 2, r - h // 2, w, h))
        work[max(r - sup, 0) : r + sup + 1, max(c - sup, 0) : c + sup + 1] = -np.inf
    return boxes


def grayscale_histogram(gray: np.ndarray, box: Box) -> np.ndarray:
    """256-bin histogram of the box's grayscale pixels, normalized to sum 1.

    Bins are uniform over [0, 1]; values are clipped into that range first.
    """
    gray = as_matrix(gray)
    rows, cols = gray.shape
    patch = gray[box_slices(clip_box_to_frame(box, rows, cols))]
    idx = np.clip((patch * HIST_BINS).astype(np.int64), 0, HIST_BINS - 1)
    counts = np.bincount(idx.ravel(), minlength=HIST_BINS).astype(np.float64)
    return counts / patch.size


def hist_distance(h: np.ndarray, y: np.ndarray) -> float:
    """L1 distance over bins 1..255 (bin 0 excluded); range [0, 2]."""
    h = np.asarray(h, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if h.shape != (HIST_BINS,) or y.shape != (HIST_BINS,):
        raise ValueError("histograms must have 256 bins")
    return float(np.abs(h[1:] - y[1:]).sum())


def prior_weight(d: float, xi: float = 1.0, mode: str = "distance") -> float:
    """Gaussian-style candidate weight from a histogram distance d.

    mode="distance" uses (1/(sqrt(2*pi)*xi)) * exp(-(1-d)/(2*xi^2)), which
    grows with d, so less similar regions weigh more. mode="similarity" uses
    exp(-d^2/(2*xi^2)), which decays with d. Both are strictly positive.
    """
    if xi <= 0:
        raise ValueError(f"xi must be positive, got {xi}")
    if mode == "distance":
        return float(np.exp(-(1.0 - d) / (2.0 * xi * xi)) / (np.sqrt(2.0 * np.pi) * xi))
    if mode == "similarity":
        return float(np.exp(-(d * d) / (2.0 * xi * xi)))
    raise ValueError(f"unknown prior weight mode: {mode!r}")


def update_target_histogram(h_t: np.ndarray, h_first: np.ndarray, sigma: float = 0.5) -> np.ndarray:
    """Blend the current-frame histogram with the initial one, binwise.

    Returns sigma * h_t + (1 - sigma) * h_first; anchoring on the first-frame
    histogram keeps the template from drifting with gradual appearance noise.
    Sums are preserved, so normalized inputs stay normalized.
    """
    h_t = np.asarray(h_t, dtype=np.float64)
    h_first = np.asarray(h_first, dtype=np.float64)
    if h_t.shape != h_first.shape:
        raise ValueError("histograms must have matching shapes")
    if not 0.0 <= sigma <= 1.0:
        raise ValueError(f"blend factor must lie in [0, 1], got {sigma}")
    return sigma * h_t + (1.0 - sigma) * h_first


def assemble_prior_map(dims: tuple[int, int], boxes: list, weights: list) -> np.ndarray:
    """Paint per-box weights into an all-ones map.

    Overlapping boxes resolve to the maximum weight. Every weight must be
    strictly positive so the result can multiply a saliency seed safely.
    """
    rows, cols = dims
    if len(boxes) != len(weights):
        raise ValueError("boxes and weights must pair up")
    painted = np.zeros((rows, cols), dtype=np.float64)
    covered = np.zeros((rows, cols), dtype=bool)
    for box, weight in zip(boxes, weights):
        if weight <= 0:
            raise ValueError(f"prior weights must be positive, got {weight}")
        sl = box_slices(clip_box_to_frame(box, rows, cols))
        painted[sl] = np.maximum(painted[sl], weight)
        covered[sl] = True
    return np.where(covered, painted, 1.0)
