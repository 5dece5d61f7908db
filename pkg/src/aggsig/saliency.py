"""Context channels and the spectral sign-signature saliency engines.

Three engines share one recipe: transform, keep only the entrywise sign of
the spectrum, transform back, square, blur, normalize. The plain image
signature (IS) works on the scalar DCT of the intensity channel; the
quaternion signature (QIS) bundles intensity, saturation-like and motion
channels with a saliency channel into one quaternion DCT; the aggregation
engine (AS) iterates the quaternion signature, feeding each reconstruction
back in as the prior-weighted saliency channel of the next pass.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .quaternion import QuaternionImage, iqdct, qdct, qmodulus_sq, qsign
from .spectral import as_matrix, dct2, gaussian_blur, idct2, sign_elementwise


@dataclass(frozen=True)
class ChannelSet:
    """The three context channels plus the evolving saliency channel.

    i1 is intensity (R+G+B)/3, i2 the channel maximum max(R,G,B), i3 the
    scaled frame difference |i1_t - i1_{t-tau}|/3, and s the current saliency
    channel in [0, 1].
    """

    i1: np.ndarray
    i2: np.ndarray
    i3: np.ndarray
    s: np.ndarray

    def __post_init__(self):
        if not (self.i1.shape == self.i2.shape == self.i3.shape == self.s.shape):
            raise ValueError("channel planes must share dimensions")

    @property
    def shape(self) -> tuple:
        return self.i1.shape

    def with_saliency(self, s: np.ndarray) -> "ChannelSet":
        return replace(self, s=as_matrix(s))


def minmax_normalize(m: np.ndarray) -> np.ndarray:
    """Min-max normalize to [0, 1]; a constant input maps to all zeros."""
    m = as_matrix(m)
    lo = m.min()
    span = m.max() - lo
    if span == 0.0:
        return np.zeros_like(m)
    return (m - lo) / span


def default_blur_sigma(shape: tuple) -> float:
    """Blur bandwidth used by the engines: 4% of the larger image side."""
    return 0.04 * max(shape)


def build_channels(frame_t: np.ndarray, frame_t_minus_tau: np.ndarray) -> ChannelSet:
    """Build the context channels from an RGB frame and its tau-lagged frame.

    Frames are (rows, cols, 3) arrays with values in [0, 1]. At sequence
    starts where no lagged frame exists, pass the current frame twice; the
    motion channel then vanishes. The saliency channel starts at zero and is
    filled in by the engines.
    """
    frame_t = _as_rgb(frame_t)
    frame_t_minus_tau = _as_rgb(frame_t_minus_tau)
    if frame_t.shape != frame_t_minus_tau.shape:
        raise ValueError(
            f"frame dimensions differ: {frame_t.shape} vs {frame_t_minus_tau.shape}"
        )
    i1 = frame_t.mean(axis=2)
    i2 = frame_t.max(axis=2)
    i1_lag = frame_t_minus_tau.mean(axis=2)
    i3 = np.abs(i1 - i1_lag) / 3.0
    return ChannelSet(i1=i1, i2=i2, i3=i3, s=np.zeros_like(i1))


def _as_rgb(frame) -> np.ndarray:
    frame = np.asarray(frame, dtype=np.float64)
    if frame.ndim != 3 or frame.shape[2] != 3:
        raise ValueError(f"expected an RGB frame of shape (rows, cols, 3), got {frame.shape}")
    return frame


def image_signature_saliency(gray: np.ndarray, blur_sigma: float | None = None) -> np.ndarray:
    """Scalar DCT sign-signature saliency of a grayscale image.

    Reconstructs the image from only the sign of its DCT spectrum, squares
    the reconstruction, blurs, and min-max normalizes.
    """
    gray = as_matrix(gray)
    if blur_sigma is None:
        blur_sigma = default_blur_sigma(gray.shape)
    recon = idct2(sign_elementwise(dct2(gray)))
    return minmax_normalize(gaussian_blur(recon * recon, blur_sigma))


def signature_pass(ch: ChannelSet, prior: np.ndarray, s: np.ndarray,
                   blur_sigma: float) -> np.ndarray:
    """One quaternion sign-signature pass with saliency channel s.

    Assembles the quaternion image (prior*s, i1, i2, i3), reconstructs it
    from the sign of its quaternion DCT, and returns the blurred, normalized
    squared modulus.
    """
    xq = QuaternionImage(prior * s, ch.i1, ch.i2, ch.i3)
    recon = iqdct(qsign(qdct(xq)))
    return minmax_normalize(gaussian_blur(qmodulus_sq(recon), blur_sigma))


def qdct_signature_saliency(ch: ChannelSet, prior: np.ndarray | None = None,
                            blur_sigma: float | None = None) -> np.ndarray:
    """Quaternion DCT sign-signature saliency (a single pass, no iteration)."""
    if prior is None:
        prior = np.ones(ch.shape)
    if blur_sigma is None:
        blur_sigma = default_blur_sigma(ch.shape)
    return signature_pass(ch, as_matrix(prior), ch.s, blur_sigma)


def aggregation_signature_saliency(
    ch: ChannelSet,
    prior: np.ndarray | None = None,
    iters: int = 4,
    blur_sigma: float | None = None,
) -> tuple[np.ndarray, list[np.ndarray]]:
    """Iterated, prior-weighted quaternion sign-signature saliency.

    Starts from the plain image signature of the intensity channel and
    refines it for `iters` passes, each pass feeding the prior-weighted
    previous map back in as the saliency channel. The prior is held fixed
    across passes. Returns the final map and the full trajectory of
    per-iteration maps (length iters + 1, the first being the image
    signature).
    """
    if iters < 0:
        raise ValueError(f"iteration count must be >= 0, got {iters}")
    if prior is None:
        prior = np.ones(ch.shape)
    prior = as_matrix(prior)
    if prior.shape != ch.shape:
        raise ValueError(f"prior shape {prior.shape} does not match channels {ch.shape}")
    if np.any(prior <= 0):
        raise ValueError("prior entries must be > 0")
    if blur_sigma is None:
        blur_sigma = default_blur_sigma(ch.shape)

    s = image_signature_saliency(ch.i1, blur_sigma)
    trajectory = [s]
    for _ in range(iters):
        s = signature_pass(ch, prior, s, blur_sigma)
        trajectory.append(s)
    return s, trajectory
