"""Advanced quadratic-phase Wigner and ambiguity distributions.

Signals and the quadratic-phase Fourier transform live in :mod:`aqwd.signals`
and :mod:`aqwd.qpft`; the six distributions in :mod:`aqwd.tfd`; analytic LFM
responses in :mod:`aqwd.closedform`; identity checks in
:mod:`aqwd.properties`; ridge detection in :mod:`aqwd.detect`.
"""

from .closedform import LineModel, estimate_lfm_params, predicted_ridge
from .detect import DetectionReport, detect_map, run_detection, snr_sweep
from .errors import AlignmentError, FitError, GridError, PreconditionError, RegimeError
from .properties import PropertyId, ResidualReport, run_all, verify_property
from .qpft import ParamMap, ParamSet, apply_map, qpft_forward
from .signals import (
    NOISELESS,
    LFMComponent,
    Signal,
    add_awgn,
    make_gaussian_pair,
    make_lfm,
    make_multicomponent,
)
from .tfd import TFKind, TFMap, compute_cross_tfd, compute_tfd

__version__ = "0.1.0"

__all__ = [
    "AlignmentError", "DetectionReport", "FitError", "GridError", "LFMComponent",
    "LineModel", "NOISELESS", "ParamMap", "ParamSet", "PreconditionError",
    "PropertyId", "RegimeError", "ResidualReport", "Signal", "TFKind", "TFMap",
    "add_awgn", "apply_map", "compute_cross_tfd", "compute_tfd", "detect_map",
    "estimate_lfm_params", "make_gaussian_pair", "make_lfm", "make_multicomponent",
    "predicted_ridge", "qpft_forward", "run_all", "run_detection", "snr_sweep",
    "verify_property",
]
