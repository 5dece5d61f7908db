"""Re-detection tracking loop: base tracker plus saliency-guided recovery.

Per frame: run the correlation tracker, compare its peak response against the
running response statistics, and on a drift verdict crop a search region
around the last position, rebuild the prior-weighted aggregation-signature
saliency there, move the tracker to the saliency argmax (model untouched),
and detect again. The first frames are a warm-up that only accumulates
statistics; responses from drift frames never enter the statistics, since
they are outliers by construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import Box, box_slices, shift_box_into
from .kcf import KCFConfig, frame_to_gray, tracker_detect, tracker_init, tracker_update
from .prior import (
    assemble_prior_map,
    grayscale_histogram,
    hist_distance,
    prior_weight,
    top_m_regions,
    update_target_histogram,
)
from .saliency import aggregation_signature_saliency, build_channels, image_signature_saliency

SIGMA_FLOOR = 1e-6


@dataclass
class ResponseStats:
    """Running mean/variance of accepted peak responses (Welford form)."""

    count: int = 0
    mean: float = 0.0
    m2: float = 0.0

    def push(self, r: float) -> None:
        self.count += 1
        delta = r - self.mean
        self.mean += delta / self.count
        self.m2 += delta * (r - self.mean)

    @property
    def variance(self) -> float:
        return self.m2 / self.count if self.count > 0 else 0.0

    @property
    def std(self) -> float:
        return float(np.sqrt(self.variance))


@dataclass(frozen=True)
class TrackEvent:
    """One per frame: the box the tracker settled on and how it got there."""

    frame_index: int
    kind: str
    box: Box
    response: float
    coarse_center: tuple | None = None


@dataclass(frozen=True)
class ASTConfig:
    iters: int = 4
    regions: int = 6
    xi: float = 1.0
    tau: int = 3
    t_g: float = 1.6
    drift_mode: str = "zscore"
    prior_mode: str = "distance"
    search_scale: float = 6.0
    hist_blend: float = 0.5
    warmup: int = 3
    ast: bool = True
    redetect_on_drift: bool = True
    kcf: KCFConfig = field(default_factory=KCFConfig)


@dataclass(frozen=True)
class RedetectResult:
    coarse_center: tuple
    saliency: np.ndarray
    prior: np.ndarray
    offset: tuple


def drift_detected(stats: ResponseStats, r: float, t_g: float, mode: str = "zscore") -> bool:
    """Decide whether a peak response is an outlier against the running stats.

    zscore mode normalizes |r - mean| by the running standard deviation (with
    a 1e-6 floor); literal mode compares the absolute deviation directly.
    Calling before 3 responses have been accumulated is a contract violation.
    """
    if stats.count < 3:
        raise ValueError("drift check requires at least 3 accumulated responses")
    dev = abs(r - stats.mean)
    if mode == "zscore":
        return bool(dev / max(stats.std, SIGMA_FLOOR) > t_g)
    if mode == "literal":
        return bool(dev > t_g)
    raise ValueError(f"unknown drift mode: {mode!r}")


def crop_search_region(frame: np.ndarray, last_box: Box, scale: float) -> tuple[np.ndarray, tuple]:
    """Crop a scale*(w, h) region centered on the box, clamped to the frame.

    Returns the region view and the (x, y) offset of its top-left corner, so
    region coordinates plus offset recover frame coordinates exactly.
    """
    if scale < 1.0:
        raise ValueError(f"search scale must be >= 1, got {scale}")
    rows, cols = frame.shape[:2]
    rw = int(round(scale * last_box.w))
    rh = int(round(scale * last_box.h))
    cx, cy = last_box.center
    x0 = max(int(round(cx - rw / 2.0)), 0)
    y0 = max(int(round(cy - rh / 2.0)), 0)
    x1 = min(x0 + rw, cols)
    y1 = min(y0 + rh, rows)
    return frame[y0:y1, x0:x1], (x0, y0)


def redetect(
    frame: np.ndarray,
    frame_prev: np.ndarray,
    last_box: Box,
    target_hist: np.ndarray,
    cfg: ASTConfig = ASTConfig(),
) -> RedetectResult:
    """Coarse re-localization inside a search region around the last box.

    Builds the channel set on the region, selects candidate regions from the
    plain signature saliency of the grayscale channel, weights each candidate
    by its histogram distance to the target template, and reruns the iterative
    saliency with that prior. The returned coarse center is the center of the
    candidate with the largest prior-weighted saliency mass, mapped back to
    frame coordinates.
    """
    region, offset = crop_search_region(frame, last_box, cfg.search_scale)
    if region.shape[0] < last_box.h or region.shape[1] < last_box.w:
        # degenerate crop (frame smaller than the padded window): scan everything
        region, offset = frame, (0, 0)
    prev_region = frame_prev[
        offset[1] : offset[1] + region.shape[0], offset[0] : offset[0] + region.shape[1]
    ]
    ch = build_channels(region, prev_region)
    base = image_signature_saliency(ch.i1)
    candidates = top_m_regions(base, (last_box.w, last_box.h), cfg.regions)
    weights = [
        prior_weight(hist_distance(target_hist, grayscale_histogram(ch.i1, b)), cfg.xi, cfg.prior_mode)
        for b in candidates
    ]
    prior = assemble_prior_map(base.shape, candidates, weights)
    final, _ = aggregation_signature_saliency(ch, prior=prior, iters=cfg.iters)
    # score whole candidate regions rather than single pixels: the blur skirt
    # just outside a box can outscore its interior, and a lone bright pixel
    # off every candidate has no appearance evidence behind it. Ties keep the
    # first candidate, which is the row-major strongest in the base map.
    scores = [float((prior[box_slices(b)] * final[box_slices(b)]).sum()) for b in candidates]
    best = candidates[int(np.argmax(scores))]
    bx, by = best.center
    coarse = (offset[0] + int(bx), offset[1] + int(by))
    return RedetectResult(coarse_center=coarse, saliency=final, prior=prior, offset=offset)


def track_sequence(frames: list, init_box: Box, cfg: ASTConfig = ASTConfig()) -> list:
    """Track through a frame list; exactly one TrackEvent per frame.

    Frame indices in events are 1-based. The first frame records the
    self-detection response at the given box; subsequent frames detect, check
    drift once the warm-up statistics exist, optionally re-localize, and then
    update the model at the settled box. The target histogram template blends
    the current patch with the first-frame histogram every frame.
    """
    if len(frames) == 0:
        raise ValueError("empty sequence")
    rows, cols = np.asarray(frames[0]).shape[:2]
    init_box = shift_box_into(init_box, rows, cols)

    state = tracker_init(frames[0], init_box, cfg.kcf)
    _, r1 = tracker_detect(state, frames[0])
    stats = ResponseStats()
    stats.push(r1)
    hist_first = grayscale_histogram(frame_to_gray(frames[0]), init_box)
    hist_t = hist_first
    events = [TrackEvent(frame_index=1, kind="normal", box=init_box, response=r1)]

    for t in range(2, len(frames) + 1):
        frame = frames[t - 1]
        box, r = tracker_detect(state, frame)
        kind = "normal"
        coarse = None
        drifted = (
            cfg.ast
            and stats.count >= cfg.warmup
            and drift_detected(stats, r, cfg.t_g, cfg.drift_mode)
        )
        if drifted and cfg.redetect_on_drift:
            prev = frames[max(t - 1 - cfg.tau, 0)]
            result = redetect(frame, prev, state.box, hist_t, cfg)
            cx, cy = result.coarse_center
            state.box = shift_box_into(
                Box(cx - init_box.w // 2, cy - init_box.h // 2, init_box.w, init_box.h), rows, cols
            )
            box, r = tracker_detect(state, frame)
            kind = "redetected"
            coarse = result.coarse_center
        elif drifted:
            kind = "drift_detected"
        else:
            stats.push(r)
        if kind == "normal":
            # drift-frame content is suspect; training on it can poison the
            # model (a blank window degenerates the ridge regression), so the
            # filter only learns from frames it trusts
            state = tracker_update(state, frame, box)
        else:
            state.box = box
        current = grayscale_histogram(frame_to_gray(frame), box)
        hist_t = update_target_histogram(current, hist_first, cfg.hist_blend)
        events.append(TrackEvent(frame_index=t, kind=kind, box=box, response=r, coarse_center=coarse))
    return events
