"""Saliency and tracking metrics.

Saliency side: MAE against a binary mask, NSS (mean z-scored saliency at
positive pixels, population std, defined as 0 for flat maps), and SIM
(histogram intersection of sum-normalized maps). Tracking side: IoU, the
center-location-error precision curve (thresholds 0..50 px, summary at 20),
and the overlap success curve (thresholds 0..1 in steps of 0.05, summary is
the trapezoidal AUC).
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from .geometry import Box
from .spectral import as_matrix

PRECISION_SUMMARY_PX = 20


def mae(s: np.ndarray, gt: np.ndarray) -> float:
    """Mean absolute error between a [0,1] saliency map and a binary mask."""
    s = as_matrix(s)
    g = as_matrix(np.asarray(gt, dtype=np.float64))
    if s.shape != g.shape:
        raise ValueError(f"shape mismatch: {s.shape} vs {g.shape}")
    return float(np.abs(s - g).mean())


def nss(s: np.ndarray, positives: np.ndarray) -> float:
    """Mean z-scored saliency over the positive pixels.

    The map is standardized with the population standard deviation; a
    constant map scores 0 by convention.
    """
    s = as_matrix(s)
    mask = np.asarray(positives, dtype=bool)
    if s.shape != mask.shape:
        raise ValueError(f"shape mismatch: {s.shape} vs {mask.shape}")
    if not mask.any():
        raise ValueError("positive set is empty")
    # a flat map has no contrast to score; test max == min rather than
    # std == 0, which rounding noise can push to ~1e-16 on constant input
    if s.max() == s.min():
        return 0.0
    z = (s - s.mean()) / float(s.std())
    return float(z[mask].mean())


def sim(p: np.ndarray, q: np.ndarray) -> float:
    """Histogram intersection of the two maps after sum-normalization."""
    p = as_matrix(p)
    q = as_matrix(q)
    if p.shape != q.shape:
        raise ValueError(f"shape mismatch: {p.shape} vs {q.shape}")
    if (p < 0).any() or (q < 0).any():
        raise ValueError("saliency maps must be non-negative")
    ps, qs = p.sum(), q.sum()
    if ps == 0.0 or qs == 0.0:
        return 0.0
    if np.array_equal(p, q):
        # identical inputs intersect fully; skip the normalization round-off
        return 1.0
    return float(np.minimum(p / ps, q / qs).sum())


def iou(a: Box, b: Box) -> float:
    """Intersection over union of two boxes."""
    x0 = max(a.x, b.x)
    y0 = max(a.y, b.y)
    x1 = min(a.x + a.w, b.x + b.w)
    y1 = min(a.y + a.h, b.y + b.h)
    inter = max(x1 - x0, 0) * max(y1 - y0, 0)
    union = a.w * a.h + b.w * b.h - inter
    return inter / union if union > 0 else 0.0


@dataclass(frozen=True)
class CurveReport:
    """Threshold sweep with a single-number summary."""

    thresholds: tuple
    values: tuple
    summary: float

    def __post_init__(self):
        if len(self.thresholds) != len(self.values):
            raise ValueError("thresholds and values must have equal length")
        if any(v < 0.0 or v > 1.0 for v in self.values):
            raise ValueError("curve values must lie in [0, 1]")


def _center_distances(pred: list, gt: list) -> np.ndarray:
    pc = np.array([b.center for b in pred])
    gc = np.array([b.center for b in gt])
    return np.hypot(pc[:, 0] - gc[:, 0], pc[:, 1] - gc[:, 1])


def _check_paired(pred: list, gt: list) -> None:
    if len(pred) != len(gt):
        raise ValueError(f"prediction/ground-truth length mismatch: {len(pred)} vs {len(gt)}")
    if len(pred) == 0:
        raise ValueError("empty box lists")


def precision_curve(pred: list, gt: list) -> CurveReport:
    """Fraction of frames whose center error is within each threshold 0..50 px."""
    _check_paired(pred, gt)
    dist = _center_distances(pred, gt)
    thresholds = np.arange(51, dtype=np.float64)
    values = (dist[None, :] <= thresholds[:, None]).mean(axis=1)
    return CurveReport(
        thresholds=tuple(float(t) for t in thresholds),
        values=tuple(float(v) for v in values),
        summary=float(values[PRECISION_SUMMARY_PX]),
    )


def success_curve(pred: list, gt: list) -> CurveReport:
    """Fraction of frames with IoU at least each threshold 0..1; AUC summary."""
    _check_paired(pred, gt)
    overlaps = np.array([iou(p, g) for p, g in zip(pred, gt)])
    thresholds = np.linspace(0.0, 1.0, 21)
    values = (overlaps[None, :] >= thresholds[:, None]).mean(axis=1)
    return CurveReport(
        thresholds=tuple(float(t) for t in thresholds),
        values=tuple(float(v) for v in values),
        summary=float(trapezoid(values, thresholds)),
    )


def mean_curve(reports: list) -> CurveReport:
    """Average several same-threshold curves; summary recomputed on the mean.

    The precision-style summary (value at 20 px) and the success-style AUC are
    both linear in the values, so the mean curve's summary equals the mean of
    the member summaries either way.
    """
    if len(reports) == 0:
        raise ValueError("no curves to average")
    thresholds = reports[0].thresholds
    for rep in reports:
        if rep.thresholds != thresholds:
            raise ValueError("curves must share thresholds to be averaged")
    values = np.mean([rep.values for rep in reports], axis=0)
    summary = float(np.mean([rep.summary for rep in reports]))
    return CurveReport(
        thresholds=thresholds, values=tuple(float(v) for v in values), summary=summary
    )
