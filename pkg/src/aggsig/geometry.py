"""Axis-aligned pixel boxes shared by the tracker, prior, and evaluation code."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Box:
    """Axis-aligned box: 0-based top-left corner (x, y), positive extents (w, h)."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w <= 0 or self.h <= 0:
            raise ValueError(f"box extents must be positive, got w={self.w}, h={self.h}")

    @property
    def center(self) -> tuple[float, float]:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)

    def centered_at(self, cx: float, cy: float) -> "Box":
        """Same-size box recentered on (cx, cy), corner rounded to the pixel grid."""
        return Box(int(round(cx - self.w / 2.0)), int(round(cy - self.h / 2.0)), self.w, self.h)


def shift_box_into(box: Box, rows: int, cols: int) -> Box:
    """Translate a box (size unchanged) so it lies fully inside a rows x cols frame."""
    if box.w > cols or box.h > rows:
        raise ValueError(f"box {box.w}x{box.h} does not fit a {cols}x{rows} frame")
    x = min(max(box.x, 0), cols - box.w)
    y = min(max(box.y, 0), rows - box.h)
    return Box(x, y, box.w, box.h)


def clip_box_to_frame(box: Box, rows: int, cols: int) -> Box:
    """Intersect a box with the frame; raises if the intersection is empty."""
    x0 = max(box.x, 0)
    y0 = max(box.y, 0)
    x1 = min(box.x + box.w, cols)
    y1 = min(box.y + box.h, rows)
    if x1 <= x0 or y1 <= y0:
        raise ValueError(f"box {box} lies outside a {cols}x{rows} frame")
    return Box(x0, y0, x1 - x0, y1 - y0)


def box_slices(box: Box) -> tuple[slice, slice]:
    """(row, column) slices covering the box; the box must already be in-frame."""
    return slice(box.y, box.y + box.h), slice(box.x, box.x + box.w)
