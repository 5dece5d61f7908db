"""Spectral sign-signature saliency and small-object tracking.

The saliency side reconstructs images from the sign of their (quaternion)
DCT spectra and iterates that reconstruction with a target prior to pop out
small foreground objects. The tracking side wraps a kernelized correlation
filter with drift detection and saliency-guided re-detection, plus the
evaluation machinery (precision/success curves, one-pass evaluation) and
synthetic fixtures to exercise all of it.
"""

from .benchmark import OPEReport, SequenceResult, ope_run
from .geometry import Box, box_slices, clip_box_to_frame, shift_box_into
from .io import (
    SequenceSpec,
    decode_image,
    encode_image,
    export_saliency,
    load_sequence,
    parse_gt_line,
    read_results,
    read_saliency_pgm,
    write_curves,
    write_results,
)
from .kcf import (
    KCFConfig,
    TrackerState,
    dense_gauss_kernel,
    frame_to_gray,
    gaussian_labels,
    get_subwindow,
    tracker_detect,
    tracker_init,
    tracker_update,
)
from .metrics import (
    CurveReport,
    iou,
    mae,
    mean_curve,
    nss,
    precision_curve,
    sim,
    success_curve,
)
from .pipeline import (
    ASTConfig,
    RedetectResult,
    ResponseStats,
    TrackEvent,
    crop_search_region,
    drift_detected,
    redetect,
    track_sequence,
)
from .prior import (
    assemble_prior_map,
    grayscale_histogram,
    hist_distance,
    prior_weight,
    top_m_regions,
    update_target_histogram,
)
from .quaternion import (
    Quaternion,
    QuaternionImage,
    iqdct,
    qconj,
    qdct,
    qmodulus,
    qmodulus_sq,
    qmul,
    qsign,
)
from .saliency import (
    ChannelSet,
    aggregation_signature_saliency,
    build_channels,
    default_blur_sigma,
    image_signature_saliency,
    minmax_normalize,
    qdct_signature_saliency,
    signature_pass,
)
from .spectral import dct2, fft2, gaussian_blur, idct2, ifft2, sign_elementwise
from .synthetic import JumpSequence, SparseScene, synth_jump_sequence, synth_sparse_scene

__version__ = "0.1.0"

__all__ = [
    "ASTConfig",
    "Box",
    "ChannelSet",
    "CurveReport",
    "JumpSequence",
    "KCFConfig",
    "OPEReport",
    "Quaternion",
    "QuaternionImage",
    "RedetectResult",
    "ResponseStats",
    "SequenceResult",
    "SequenceSpec",
    "SparseScene",
    "TrackEvent",
    "TrackerState",
    "aggregation_signature_saliency",
    "assemble_prior_map",
    "box_slices",
    "build_channels",
    "clip_box_to_frame",
    "crop_search_region",
    "dct2",
    "decode_image",
    "default_blur_sigma",
    "dense_gauss_kernel",
    "drift_detected",
    "encode_image",
    "export_saliency",
    "fft2",
    "frame_to_gray",
    "gaussian_blur",
    "gaussian_labels",
    "get_subwindow",
    "grayscale_histogram",
    "hist_distance",
    "idct2",
    "ifft2",
    "image_signature_saliency",
    "iou",
    "iqdct",
    "load_sequence",
    "mae",
    "mean_curve",
    "minmax_normalize",
    "nss",
    "ope_run",
    "parse_gt_line",
    "precision_curve",
    "prior_weight",
    "qconj",
    "qdct",
    "qdct_signature_saliency",
    "qmodulus",
    "qmodulus_sq",
    "qmul",
    "qsign",
    "read_results",
    "read_saliency_pgm",
    "redetect",
    "shift_box_into",
    "sign_elementwise",
    "sim",
    "signature_pass",
    "success_curve",
    "synth_jump_sequence",
    "synth_sparse_scene",
    "top_m_regions",
    "tracker_detect",
    "tracker_init",
    "tracker_update",
    "track_sequence",
    "update_target_histogram",
    "write_curves",
    "write_results",
]
