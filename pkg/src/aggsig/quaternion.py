"""Quaternion arithmetic and the quaternion DCT over four-plane images.

The quaternion basis is written j, k, h (j*k = h, k*h = j, h*j = k,
j^2 = k^2 = h^2 = -1). A four-channel image is treated as a quaternion-valued
matrix; its DCT is taken single-sided by left-multiplying every pixel with the
unit pure quaternion mu = (j + k + h)/sqrt(3) and transforming each plane with
the orthonormal 2-D DCT. The plane mixing that this multiplication induces is
spelled out explicitly below, which keeps the transform a handful of real
DCTs.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import as_matrix, dct2, idct2

_INV_SQRT3 = 1.0 / np.sqrt(3.0)


@dataclass(frozen=True)
class Quaternion:
    """Scalar quaternion r + qj*j + qk*k + qh*h."""

    r: float = 0.0
    qj: float = 0.0
    qk: float = 0.0
    qh: float = 0.0

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return qmul(self, other)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.r, -self.qj, -self.qk, -self.qh)


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product under the j,k,h basis table."""
    return Quaternion(
        r=p.r * q.r - p.qj * q.qj - p.qk * q.qk - p.qh * q.qh,
        qj=p.r * q.qj + p.qj * q.r + p.qk * q.qh - p.qh * q.qk,
        qk=p.r * q.qk - p.qj * q.qh + p.qk * q.r + p.qh * q.qj,
        qh=p.r * q.qh + p.qj * q.qk - p.qk * q.qj + p.qh * q.r,
    )


def qconj(q: Quaternion) -> Quaternion:
    """Conjugate: negate the three imaginary components."""
    return Quaternion(q.r, -q.qj, -q.qk, -q.qh)


def qmodulus(q: Quaternion) -> float:
    """Quaternion modulus sqrt(r^2 + qj^2 + qk^2 + qh^2)."""
    return float(np.sqrt(q.r * q.r + q.qj * q.qj + q.qk * q.qk + q.qh * q.qh))


class QuaternionImage:
    """Four co-registered matrix planes (real, j, k, h)."""

    __slots__ = ("re", "pj", "pk", "ph")

    def __init__(self, re, pj, pk, ph):
        self.re = as_matrix(re)
        self.pj = as_matrix(pj)
        self.pk = as_matrix(pk)
        self.ph = as_matrix(ph)
        if not (self.re.shape == self.pj.shape == self.pk.shape == self.ph.shape):
            raise ValueError(
                "quaternion image planes must share dimensions, got "
                f"{self.re.shape}, {self.pj.shape}, {self.pk.shape}, {self.ph.shape}"
            )

    @property
    def shape(self) -> tuple:
        return self.re.shape

    def planes(self) -> tuple:
        return self.re, self.pj, self.pk, self.ph

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QuaternionImage":
        z = np.zeros((rows, cols))
        return cls(z, z.copy(), z.copy(), z.copy())


def _mul_by_axis(re, pj, pk, ph) -> tuple:
    # Left multiplication by mu = (j+k+h)/sqrt(3), expanded per plane.
    out_re = -(pj + pk + ph) * _INV_SQRT3
    out_pj = (re + ph - pk) * _INV_SQRT3
    out_pk = (re + pj - ph) * _INV_SQRT3
    out_ph = (re + pk - pj) * _INV_SQRT3
    return out_re, out_pj, out_pk, out_ph


def _mul_by_neg_axis(re, pj, pk, ph) -> tuple:
    # Left multiplication by mu^-1 = -mu.
    out_re, out_pj, out_pk, out_ph = _mul_by_axis(re, pj, pk, ph)
    return -out_re, -out_pj, -out_pk, -out_ph


def qdct(x: QuaternionImage) -> QuaternionImage:
    """Single-sided quaternion DCT: left-multiply by mu, then per-plane DCT."""
    re, pj, pk, ph = _mul_by_axis(*x.planes())
    return QuaternionImage(dct2(re), dct2(pj), dct2(pk), dct2(ph))


def iqdct(x: QuaternionImage) -> QuaternionImage:
    """Inverse quaternion DCT: per-plane inverse DCT, then left-multiply by -mu."""
    re, pj, pk, ph = (idct2(p) for p in x.planes())
    return QuaternionImage(*_mul_by_neg_axis(re, pj, pk, ph))


def qsign(x: QuaternionImage, mode: str = "polar") -> QuaternionImage:
    """Entrywise quaternion sign.

    "polar" (default) normalizes each nonzero pixel to unit modulus, q/|q|,
    and maps zero to zero. "componentwise" applies the real sign to each
    plane independently.
    """
    if mode == "componentwise":
        return QuaternionImage(*(np.sign(p) for p in x.planes()))
    if mode != "polar":
        raise ValueError(f"unknown sign mode {mode!r}")
    mod = np.sqrt(qmodulus_sq(x))
    scale = np.zeros_like(mod)
    nonzero = mod > 0
    scale[nonzero] = 1.0 / mod[nonzero]
    return QuaternionImage(*(p * scale for p in x.planes()))


def qmodulus_sq(x: QuaternionImage) -> np.ndarray:
    """Per-pixel squared modulus r^2 + qj^2 + qk^2 + qh^2."""
    re, pj, pk, ph = x.planes()
    return re * re + pj * pj + pk * pk + ph * ph
