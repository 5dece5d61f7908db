"""Dataset layout, image codecs, and result serialization.

Sequence directories follow the common tracking-benchmark layout: an `img/`
directory of numerically named frames plus `groundtruth_rect.txt` with one
1-based `x,y,w,h` line per frame (comma or tab separated). Track results are
line-delimited JSON records, curves are two-column CSV, and saliency maps
export as 16-bit binary PGM or CSV depending on the target extension.
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field

import numpy as np
from PIL import Image

from .geometry import Box
from .pipeline import TrackEvent
from .spectral import as_matrix

IMAGE_EXTENSIONS = (".png", ".jpg", ".jpeg", ".bmp")
GT_FILENAME = "groundtruth_rect.txt"


@dataclass(frozen=True)
class SequenceSpec:
    """A named, ordered frame list with per-frame ground-truth boxes."""

    name: str
    frame_paths: tuple
    gt_boxes: tuple
    attributes: tuple = field(default_factory=tuple)

    def __post_init__(self):
        if len(self.frame_paths) == 0:
            raise ValueError(f"sequence {self.name!r} has no frames")
        if len(self.gt_boxes) != len(self.frame_paths):
            raise ValueError(
                f"sequence {self.name!r}: {len(self.gt_boxes)} ground-truth boxes "
                f"for {len(self.frame_paths)} frames"
            )

    def load_frames(self) -> list:
        return [decode_image(p) for p in self.frame_paths]


def decode_image(path: str) -> np.ndarray:
    """Decode a raster image to (rows, cols, 3) float64 RGB in [0, 1]."""
    with Image.open(path) as img:
        rgb = np.asarray(img.convert("RGB"), dtype=np.float64)
    return rgb / 255.0


def encode_image(path: str, rgb: np.ndarray) -> None:
    """Write a [0, 1] RGB array as an 8-bit image file."""
    rgb = np.asarray(rgb, dtype=np.float64)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError(f"expected (rows, cols, 3), got {rgb.shape}")
    data = np.round(np.clip(rgb, 0.0, 1.0) * 255.0).astype(np.uint8)
    Image.fromarray(data, mode="RGB").save(path)


def parse_gt_line(line: str, path: str, lineno: int) -> Box:
    """Parse one 1-based `x,y,w,h` ground-truth line (comma or tab separated)."""
    parts = line.replace("\t", ",").split(",")
    try:
        x, y, w, h = (int(round(float(p))) for p in parts)
        return Box(x - 1, y - 1, w, h)
    except (ValueError, TypeError) as exc:
        raise ValueError(f"{path}:{lineno}: cannot parse ground-truth line {line!r}") from exc


def load_sequence(seq_dir: str) -> SequenceSpec:
    """Read one sequence directory into a SequenceSpec.

    Frames come from `img/` sorted by filename (zero-padded numeric names sort
    in frame order); boxes come from `groundtruth_rect.txt` and are converted
    to 0-based coordinates.
    """
    img_dir = os.path.join(seq_dir, "img")
    if not os.path.isdir(img_dir):
        raise FileNotFoundError(f"missing image directory: {img_dir}")
    names = sorted(n for n in os.listdir(img_dir) if n.lower().endswith(IMAGE_EXTENSIONS))
    frame_paths = tuple(os.path.join(img_dir, n) for n in names)

    gt_path = os.path.join(seq_dir, GT_FILENAME)
    if not os.path.isfile(gt_path):
        raise FileNotFoundError(f"missing ground-truth file: {gt_path}")
    with open(gt_path, encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    boxes = tuple(
        parse_gt_line(ln, gt_path, i + 1) for i, ln in enumerate(lines) if ln
    )
    if len(boxes) != len(frame_paths):
        raise ValueError(
            f"{gt_path}: {len(boxes)} ground-truth lines for {len(frame_paths)} frames"
        )

    attributes: tuple = ()
    attr_path = os.path.join(seq_dir, "attributes.txt")
    if os.path.isfile(attr_path):
        with open(attr_path, encoding="utf-8") as fh:
            attributes = tuple(ln.strip() for ln in fh if ln.strip())
    return SequenceSpec(
        name=os.path.basename(os.path.normpath(seq_dir)),
        frame_paths=frame_paths,
        gt_boxes=boxes,
        attributes=attributes,
    )


def write_results(path: str, events: list) -> None:
    """Serialize track events as one JSON record per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for ev in events:
            record = {
                "frame": ev.frame_index,
                "kind": ev.kind,
                "x": ev.box.x,
                "y": ev.box.y,
                "w": ev.box.w,
                "h": ev.box.h,
                "response": ev.response,
            }
            if ev.coarse_center is not None:
                record["coarse_x"] = int(ev.coarse_center[0])
                record["coarse_y"] = int(ev.coarse_center[1])
            fh.write(json.dumps(record, sort_keys=True) + "\n")


def read_results(path: str) -> list:
    """Inverse of write_results; returns TrackEvent objects."""
    events = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            coarse = None
            if "coarse_x" in rec:
                coarse = (rec["coarse_x"], rec["coarse_y"])
            events.append(
                TrackEvent(
                    frame_index=rec["frame"],
                    kind=rec["kind"],
                    box=Box(rec["x"], rec["y"], rec["w"], rec["h"]),
                    response=rec["response"],
                    coarse_center=coarse,
                )
            )
    return events


def write_curves(path: str, report) -> None:
    """Write a CurveReport as `threshold,value` CSV with a header line."""
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("threshold,value\n")
        for t, v in zip(report.thresholds, report.values):
            fh.write(f"{float(t)!r},{float(v)!r}\n")


def export_saliency(path: str, m: np.ndarray) -> None:
    """Write a [0, 1] saliency map as 16-bit binary PGM (.pgm) or CSV text.

    PGM values are round(65535 * v), big-endian, maxval 65535.
    """
    m = as_matrix(m)
    if m.min() < 0.0 or m.max() > 1.0:
        raise ValueError("saliency map must lie in [0, 1] before export")
    ext = os.path.splitext(path)[1].lower()
    if ext == ".pgm":
        data = np.round(m * 65535.0).astype(">u2")
        with open(path, "wb") as fh:
            fh.write(f"P5\n{m.shape[1]} {m.shape[0]}\n65535\n".encode("ascii"))
            fh.write(data.tobytes())
    elif ext == ".csv":
        with open(path, "w", encoding="utf-8") as fh:
            for row in m:
                fh.write(",".join(repr(float(v)) for v in row) + "\n")
    else:
        raise ValueError(f"unsupported saliency export extension: {ext!r}")


def read_saliency_pgm(path: str) -> np.ndarray:
    """Read back a 16-bit binary PGM written by export_saliency."""
    with open(path, "rb") as fh:
        magic = fh.readline().strip()
        if magic != b"P5":
            raise ValueError(f"{path}: not a binary PGM")
        dims = fh.readline().split()
        maxval = int(fh.readline())
        cols, rows = int(dims[0]), int(dims[1])
        dtype = ">u2" if maxval > 255 else "u1"
        data = np.frombuffer(fh.read(), dtype=dtype, count=rows * cols)
    return data.reshape(rows, cols).astype(np.float64) / maxval
