"""Deterministic synthetic scenes for calibration, demos, and the test harness.

Two generators live here. `synth_sparse_scene` renders a single small flat
rectangle over a smooth noisy background and is the workhorse for saliency
scoring: the returned mask is the exact foreground support, so metrics need no
annotation step. `synth_jump_sequence` renders a tracking clip whose target
teleports mid-sequence by more than twice its own size, which defeats a local
tracker but stays inside the re-detection search region.

All pixel values are quantized to the 8-bit grid (multiples of 1/255) so a
frame survives a PNG round trip bit for bit; pipelines fed from memory and
from disk therefore see identical inputs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Box


@dataclass(frozen=True)
class SparseScene:
    """A two-frame scene: current frame, lagged frame, and the exact target mask."""

    frame: np.ndarray
    prev_frame: np.ndarray
    mask: np.ndarray
    box: Box


@dataclass(frozen=True)
class JumpSequence:
    """A tracking clip with one large mid-sequence target teleport."""

    frames: list
    boxes: list
    jump_index: int


def _quantize(img: np.ndarray) -> np.ndarray:
    # snap to the 8-bit grid so PNG encode/decode is lossless
    return np.round(np.clip(img, 0.0, 1.0) * 255.0) / 255.0


def _smooth_background(rows: int, cols: int, rng: np.random.Generator) -> np.ndarray:
    """Low-frequency grayscale background in roughly [0.25, 0.55]."""
    yy = np.linspace(0.0, 1.0, rows)[:, None]
    xx = np.linspace(0.0, 1.0, cols)[None, :]
    gx, gy = rng.uniform(-1.0, 1.0, size=2)
    px, py = rng.uniform(0.0, 2.0 * np.pi, size=2)
    base = 0.4 + 0.06 * (gx * xx + gy * yy)
    base = base + 0.05 * np.sin(2.0 * np.pi * xx + px) * np.sin(2.0 * np.pi * yy + py)
    return base


def synth_sparse_scene(
    rows: int = 128,
    cols: int = 128,
    fg_area_fraction: float = 0.01,
    contrast: float = 0.45,
    noise_level: float = 0.05,
    seed: int = 0,
):
    """Render one small flat rectangle over a smooth noisy background.

    Returns a SparseScene whose `frame` and `prev_frame` share the background
    model (independent noise draws) while the rectangle sits at positions a
    couple of pixels apart, so the frame pair carries genuine motion energy.
    The foreground support is at most `fg_area_fraction` of the frame area and
    `mask` marks exactly the rendered pixels.
    """
    if not 0.0 < fg_area_fraction < 0.25:
        raise ValueError(f"fg_area_fraction out of range: {fg_area_fraction}")
    rng = np.random.default_rng(seed)

    area_cap = int(np.floor(fg_area_fraction * rows * cols))
    w = int(rng.integers(6, 15))
    h_cap = max(3, area_cap // w)
    h = int(rng.integers(3, min(14, h_cap) + 1))
    if w * h > area_cap:
        h = max(3, area_cap // w)

    margin = 6
    x = int(rng.integers(margin, cols - w - margin))
    y = int(rng.integers(margin, rows - h - margin))
    dx, dy = 0, 0
    while dx == 0 and dy == 0:
        dx = int(rng.integers(-2, 3))
        dy = int(rng.integers(-2, 3))
    xp = min(max(x + dx, 1), cols - w - 1)
    yp = min(max(y + dy, 1), rows - h - 1)

    # saturated bright foreground: contrast shows up in both the mean and the
    # max color channel
    mean_fg = 0.4 + contrast
    color = np.clip([mean_fg + 0.12, mean_fg, mean_fg - 0.12], 0.0, 1.0)

    base = _smooth_background(rows, cols, rng)
    frames = []
    for fx, fy in ((x, y), (xp, yp)):
        img = np.repeat(base[:, :, None], 3, axis=2)
        img = img + rng.normal(0.0, noise_level, size=img.shape)
        img[fy : fy + h, fx : fx + w, :] = color
        frames.append(_quantize(img))

    mask = np.zeros((rows, cols), dtype=bool)
    mask[y : y + h, x : x + w] = True
    return SparseScene(frame=frames[0], prev_frame=frames[1], mask=mask, box=Box(x, y, w, h))


def synth_jump_sequence(
    seed: int = 0,
    num_frames: int = 40,
    jump_index: int = 20,
    rows: int = 112,
    cols: int = 112,
    target: int = 8,
) -> JumpSequence:
    """Render a clip where the target drifts slowly, then teleports once.

    The background is a uniform gray and the target a flat colored square
    moving on the integer grid, so a correlation tracker's pre-jump responses
    are reproducible to the bit. At `jump_index` the target teleports by 17 to
    20 pixels (more than twice its 8-pixel size for the defaults), down-right
    and therefore away from the path a lost local tracker wanders, then keeps
    drifting with its previous velocity. Ground-truth boxes cover the target
    exactly on every frame.
    """
    if jump_index < 1:
        raise ValueError("jump must land after the first frame")
    if num_frames < jump_index + 2:
        raise ValueError("sequence must extend past the jump")
    rng = np.random.default_rng(seed)

    bg = 102.0 / 255.0
    color = np.array([242.0, 178.0, 76.0]) / 255.0

    vx, vy = [(1, 0), (0, 1), (1, 1)][int(rng.integers(0, 3))]
    x = int(rng.integers(26, 35))
    y = int(rng.integers(26, 35))
    jdx = int(rng.integers(12, 15))
    jdy = int(rng.integers(12, 15))
    span = jump_index * max(vx, vy) + max(jdx, jdy) + (num_frames - jump_index) * max(vx, vy)
    if max(x, y) + span + target >= min(rows, cols):
        raise ValueError("frame too small for the motion budget")

    frames = []
    boxes = []
    for i in range(num_frames):
        if i == jump_index:
            x, y = x + jdx, y + jdy
        elif 0 < i:
            x, y = x + vx, y + vy
        img = np.full((rows, cols, 3), bg)
        img[y : y + target, x : x + target, :] = color
        frames.append(img)
        boxes.append(Box(x, y, target, target))
    return JumpSequence(frames=frames, boxes=boxes, jump_index=jump_index)
