"""One-pass evaluation over a set of sequences.

Each sequence is initialized from its first ground-truth box and tracked once;
precision and success curves are computed per sequence and averaged (each
sequence weighs equally, regardless of length). FPS counts tracking time
only, not image decoding.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .metrics import CurveReport, mean_curve, precision_curve, success_curve
from .pipeline import ASTConfig, track_sequence


@dataclass(frozen=True)
class SequenceResult:
    name: str
    precision: CurveReport
    success: CurveReport
    events: tuple


@dataclass(frozen=True)
class OPEReport:
    sequences: tuple
    precision: CurveReport
    success: CurveReport
    fps: float
    frame_count: int


def ope_run(specs: list, cfg: ASTConfig = ASTConfig()) -> OPEReport:
    """Run one-pass evaluation; sequences are processed in name order."""
    if len(specs) == 0:
        raise ValueError("no sequences to evaluate")
    results = []
    total_frames = 0
    total_seconds = 0.0
    for spec in sorted(specs, key=lambda s: s.name):
        frames = spec.load_frames()
        start = time.perf_counter()
        events = track_sequence(frames, spec.gt_boxes[0], cfg)
        total_seconds += time.perf_counter() - start
        total_frames += len(frames)
        pred = [ev.box for ev in events]
        results.append(
            SequenceResult(
                name=spec.name,
                precision=precision_curve(pred, list(spec.gt_boxes)),
                success=success_curve(pred, list(spec.gt_boxes)),
                events=tuple(events),
            )
        )
    fps = total_frames / total_seconds if total_seconds > 0 else float("inf")
    return OPEReport(
        sequences=tuple(results),
        precision=mean_curve([r.precision for r in results]),
        success=mean_curve([r.success for r in results]),
        fps=fps,
        frame_count=total_frames,
    )
