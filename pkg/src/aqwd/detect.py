"""LFM detection from distribution maps: ridge extraction, line fitting,
parameter recovery and seeded SNR sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Union

import numpy as np

from .closedform import LineModel, estimate_lfm_params
from .errors import FitError, RegimeError
from .qpft import ParamSet
from .signals import NOISELESS, Signal, add_awgn
from .tfd import TFKind, TFMap, compute_tfd

#: Points within this many frequency bins of a line's prediction join it.
CLUSTER_BINS = 3
#: A cluster counts as a ridge when it holds at least this share of points...
CLUSTER_MIN_SHARE = 0.05
#: ...and at least this many points.
CLUSTER_MIN_POINTS = 5


@dataclass(frozen=True)
class DetectionReport:
    """Outcome of one detection.  Estimates are NaN when the map gave no usable
    ridge or the parameter set is outside the straight-line regime."""

    kind: TFKind
    params: Optional[ParamSet]
    line: Optional[LineModel]
    nu0_hat: float
    xi0_hat: float
    peak_ratio: float
    n_ridges: int
    fit_rmse: float
    detected: bool = True
    lines: tuple = ()
    n_points: int = 0
    note: str = ""


def extract_ridge(W: TFMap, threshold_frac: float) -> list[tuple[float, float]]:
    """Per-row argmax of ``|W|``, keeping rows whose maximum reaches
    ``threshold_frac`` of the global maximum."""
    if not 0 < threshold_frac < 1:
        raise ValueError("threshold_frac must lie in (0, 1)")
    mag = W.magnitude()
    if mag.size == 0:
        raise ValueError("empty map")
    top = float(mag.max())
    if top == 0.0:
        return []
    cols = np.argmax(mag, axis=1)
    row_max = mag[np.arange(mag.shape[0]), cols]
    keep = np.nonzero(row_max >= threshold_frac * top)[0]
    return [(float(W.outer_axis[i]), float(W.freq_axis[cols[i]])) for i in keep]


def fit_line(points: Sequence[tuple[float, float]]) -> tuple[LineModel, float]:
    """Least-squares ``nu = slope * x + intercept`` and the residual RMS."""
    if len(points) < 2:
        raise FitError(f"need at least 2 points, got {len(points)}")
    pts = np.asarray(points, dtype=float)
    x, y = pts[:, 0], pts[:, 1]
    if np.ptp(x) == 0:
        raise FitError("all points share one x value")
    design = np.column_stack([x, np.ones_like(x)])
    (slope, intercept), *_ = np.linalg.lstsq(design, y, rcond=None)
    resid = y - (slope * x + intercept)
    return LineModel(float(slope), float(intercept)), float(np.sqrt(np.mean(resid**2)))


def _predict(cluster: list) -> float:
    """Extrapolate a growing cluster to the next x (constant until it has a slope)."""
    if len(cluster) == 1 or cluster[0][0] == cluster[-1][0]:
        return cluster[-1][1]
    line, _ = fit_line(cluster)
    return line


def cluster_lines(points: Sequence[tuple[float, float]], dnu: float) -> list[list]:
    """Greedy line clustering in row order: each point joins the cluster whose
    prediction is closest, if within ``CLUSTER_BINS`` bins; else it starts one."""
    clusters: list[list] = []
    models: list = []
    for x, y in points:
        best, best_d = None, CLUSTER_BINS * dnu
        for i, model in enumerate(models):
            pred = model(x) if isinstance(model, LineModel) else model
            d = abs(float(pred) - y)
            if d <= best_d:
                best, best_d = i, d
        if best is None:
            clusters.append([(x, y)])
            models.append(y)
        else:
            clusters[best].append((x, y))
            models[best] = _predict(clusters[best])
    return clusters


def _significant(clusters: list[list], total: int) -> list[list]:
    need = max(CLUSTER_MIN_POINTS, math.ceil(CLUSTER_MIN_SHARE * total))
    return [c for c in clusters if len(c) >= need]


def _peak_ratio(W: TFMap, line: Optional[LineModel]) -> float:
    mag = W.magnitude()
    top = float(mag.max())
    if top == 0.0:
        return 0.0
    if line is None:
        off = mag
    else:
        dist = np.abs(W.freq_axis[None, :] - line(W.outer_axis)[:, None])
        off = mag[dist > CLUSTER_BINS * W.dnu]
        if off.size == 0:
            off = mag
    med = float(np.median(off))
    return math.inf if med == 0.0 else top / med


def _failure(W: TFMap, n_points: int, note: str) -> DetectionReport:
    return DetectionReport(
        W.kind, W.params, None, math.nan, math.nan, _peak_ratio(W, None), 0, math.nan,
        detected=False, n_points=n_points, note=note,
    )


def detect_map(W: TFMap, threshold_frac: float = 0.5) -> DetectionReport:
    """Ridge -> clusters -> least-squares fit of the largest cluster -> (nu0, xi0)."""
    points = extract_ridge(W, threshold_frac)
    if len(points) < 2:
        return _failure(W, len(points), "fewer than two ridge points")
    clusters = _significant(cluster_lines(points, W.dnu), len(points))
    if not clusters:
        return _failure(W, len(points), "no ridge cluster large enough")
    clusters.sort(key=len, reverse=True)
    lines = []
    for c in clusters:
        try:
            lines.append(fit_line(c))
        except FitError:
            continue
    if not lines:
        return _failure(W, len(points), "degenerate ridge")
    line, rmse = lines[0]
    note = ""
    try:
        nu0, xi0 = estimate_lfm_params(line, W.params, W.kind)
    except RegimeError as exc:
        nu0, xi0, note = None, math.nan, str(exc)
    return DetectionReport(
        W.kind,
        W.params,
        line,
        math.nan if nu0 is None else float(nu0),
        float(xi0),
        _peak_ratio(W, line),
        len(lines),
        rmse,
        lines=tuple(ln for ln, _ in lines),
        n_points=len(points),
        note=note,
    )


def run_detection(
    f: Signal,
    lam: Optional[ParamSet],
    kind: TFKind,
    threshold_frac: float = 0.5,
    workers: Optional[int] = None,
) -> DetectionReport:
    W = compute_tfd(kind, None if not kind.needs_params else lam, f, workers=workers)
    return detect_map(W, threshold_frac)


@dataclass(frozen=True)
class SweepRow:
    kind: TFKind
    snr_db: float
    seed: int
    report: Optional[DetectionReport]
    error: str = ""
    extra: dict = field(default_factory=dict)


ParamsArg = Union[Optional[ParamSet], Mapping[TFKind, Optional[ParamSet]]]


def params_for(params: ParamsArg, kind: TFKind) -> Optional[ParamSet]:
    if not kind.needs_params:
        return None
    if isinstance(params, Mapping):
        return params[kind]
    return params


def snr_sweep(
    f_clean: Signal,
    params: ParamsArg,
    kinds: Sequence[TFKind],
    snrs_db: Sequence[float],
    seeds: Sequence[int],
    threshold_frac: float = 0.5,
    workers: Optional[int] = None,
) -> list[SweepRow]:
    """Detections over kinds x SNRs x seeds, ordered by (kind, snr, seed).

    One noise realization per (snr, seed) is shared by all kinds, so kinds are
    compared on identical noisy inputs.  A failing cell records its error and
    the sweep continues.
    """
    if not (kinds and len(snrs_db) and len(seeds)):
        raise ValueError("kinds, snrs_db and seeds must be nonempty")
    noisy = {}
    for snr in snrs_db:
        for seed in seeds:
            noisy[(snr, seed)] = f_clean if snr == NOISELESS else add_awgn(f_clean, snr, seed)
    rows = []
    for kind in kinds:
        for snr in snrs_db:
            for seed in seeds:
                try:
                    rep = run_detection(
                        noisy[(snr, seed)], params_for(params, kind), kind, threshold_frac, workers
                    )
                    rows.append(SweepRow(kind, float(snr), int(seed), rep))
                except Exception as exc:  # a failing cell must not abort the sweep
                    rows.append(SweepRow(kind, float(snr), int(seed), None, f"{type(exc).__name__}: {exc}"))
    return rows


def median_abs_error(rows: Sequence[SweepRow], attr: str, truth: float) -> float:
    """Median of ``|report.attr - truth|``; failed cells count as infinite error."""
    errs = []
    for r in rows:
        v = math.nan if r.report is None else getattr(r.report, attr)
        errs.append(math.inf if not math.isfinite(v) else abs(v - truth))
    return float(np.median(errs)) if errs else math.nan
