"""CSV and PGM serialization for maps, signals and result tables.

Floats are written with ``repr`` (shortest round-trip form), so reading a file
back reproduces every value bit for bit.
"""

from __future__ import annotations

import csv
import math
from pathlib import Path
from typing import Iterable, Optional, Sequence

import numpy as np

from .detect import DetectionReport, SweepRow
from .properties import ResidualReport, tolerance
from .qpft import ParamSet
from .signals import Signal
from .tfd import TFKind, TFMap

MAP_PREFIX = "# "
SIGNAL_HEADER = "# t0,dt,N"


def _fmt(v: float) -> str:
    return repr(float(v))


def write_tfmap_csv(W: TFMap, path) -> None:
    """Line 1: ``# kind,A,B,C,D,E,N,dt`` (parameter fields empty for WD/AF);
    line 2: the frequency axis; then one ``outer,re0,im0,re1,im1,...`` row per
    outer-axis value."""
    lam = ["", "", "", "", ""] if W.params is None else [_fmt(v) for v in W.params.as_tuple()]
    lines = [
        MAP_PREFIX + ",".join([W.kind.value, *lam, str(W.n_samples), _fmt(W.dt)]),
        ",".join(_fmt(v) for v in W.freq_axis),
    ]
    re, im = W.values.real, W.values.imag
    for i, x in enumerate(W.outer_axis):
        cells = np.empty(2 * re.shape[1], dtype=float)
        cells[0::2], cells[1::2] = re[i], im[i]
        lines.append(",".join([_fmt(x), *(_fmt(v) for v in cells)]))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_tfmap_csv(path) -> TFMap:
    text = Path(path).read_text(encoding="utf-8").splitlines()
    if len(text) < 2 or not text[0].startswith(MAP_PREFIX):
        raise ValueError(f"{path}: not a distribution CSV")
    meta = text[0][len(MAP_PREFIX):].split(",")
    if len(meta) != 8:
        raise ValueError(f"{path}: malformed metadata line")
    kind = TFKind.parse(meta[0])
    lam = None if meta[1] == "" else ParamSet.of(float(v) for v in meta[1:6])
    n, dt = int(meta[6]), float(meta[7])
    freq = np.array([float(v) for v in text[1].split(",")])
    outer, rows = [], []
    for line in text[2:]:
        vals = np.array([float(v) for v in line.split(",")])
        if vals.size != 1 + 2 * freq.size:
            raise ValueError(f"{path}: row has {vals.size} fields, expected {1 + 2 * freq.size}")
        outer.append(vals[0])
        rows.append(vals[1:])
    values = np.empty((len(rows), freq.size), dtype=np.complex128)
    if rows:
        cells = np.array(rows)
        # assign parts separately so signed zeros survive
        values.real, values.imag = cells[:, 0::2], cells[:, 1::2]
    return TFMap(values, np.array(outer), freq, kind, lam, n, dt)


def write_heatmap(W: TFMap, path, levels: Optional[int] = None) -> None:
    """Binary 8-bit PGM of ``|W|``; row 0 is the smallest outer value and
    column 0 the smallest frequency.  ``levels`` posterizes to that many grey
    levels (contour view)."""
    mag = W.magnitude()
    top = float(mag.max()) if mag.size else 0.0
    if top == 0.0:
        pix = np.zeros(mag.shape, dtype=np.uint8)
    elif levels is None:
        pix = np.rint(255.0 * mag / top).astype(np.uint8)
    else:
        if levels < 2:
            raise ValueError("contour mode needs at least 2 levels")
        band = np.minimum(np.floor(levels * mag / top), levels - 1)
        pix = np.rint(255.0 * band / (levels - 1)).astype(np.uint8)
    rows, cols = pix.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{cols} {rows}\n255\n".encode("ascii"))
        fh.write(pix.tobytes())


def read_pgm(path) -> np.ndarray:
    data = Path(path).read_bytes()
    parts = data.split(b"\n", 3)
    if parts[0] != b"P5" or len(parts) < 4:
        raise ValueError(f"{path}: not a binary PGM")
    cols, rows = (int(v) for v in parts[1].split())
    return np.frombuffer(parts[3], dtype=np.uint8).reshape(rows, cols)


def write_signal_csv(f: Signal, path) -> None:
    lines = [SIGNAL_HEADER, f"{_fmt(f.t0)},{_fmt(f.dt)},{f.n}"]
    lines += [f"{_fmt(z.real)},{_fmt(z.imag)}" for z in f.samples]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_signal_csv(path) -> Signal:
    text = Path(path).read_text(encoding="utf-8").splitlines()
    if len(text) < 2 or text[0] != SIGNAL_HEADER:
        raise ValueError(f"{path}: not a signal CSV")
    t0, dt, n = text[1].split(",")
    vals = [line.split(",") for line in text[2:]]
    if len(vals) != int(n):
        raise ValueError(f"{path}: header says {n} samples, found {len(vals)}")
    x = np.empty(len(vals), dtype=np.complex128)
    if vals:
        parts = np.array(vals, dtype=float)
        x.real, x.imag = parts[:, 0], parts[:, 1]
    return Signal(x, float(t0), float(dt))


def _num(v) -> str:
    if v is None:
        return ""
    return _fmt(v) if isinstance(v, float) or isinstance(v, np.floating) else str(v)


REPORT_FIELDS = ["property", "variant", "rel_error", "N", "dt", "M", "tolerance", "pass"]


def write_reports_csv(reports: Iterable[ResidualReport], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        n, dt, m = r.grid_meta
        tol = tolerance(r.property)
        w.writerow([r.property.value, r.variant, _num(r.rel_error), n, _num(dt), m, _num(tol), int(r.passed)])


DETECTION_FIELDS = [
    "kind", "lambda", "detected", "nu0_hat", "xi0_hat", "slope", "intercept",
    "peak_ratio", "n_ridges", "fit_rmse", "n_points",
]


def _detection_cells(rep: DetectionReport) -> list:
    slope = intercept = math.nan
    if rep.line is not None:
        slope, intercept = rep.line.slope, rep.line.intercept
    return [
        rep.kind.value,
        "" if rep.params is None else str(rep.params),
        int(rep.detected),
        _num(rep.nu0_hat),
        _num(rep.xi0_hat),
        _num(slope),
        _num(intercept),
        _num(rep.peak_ratio),
        rep.n_ridges,
        _num(rep.fit_rmse),
        rep.n_points,
    ]


def write_detection_csv(reports: Sequence[DetectionReport], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(DETECTION_FIELDS)
    for rep in reports:
        w.writerow(_detection_cells(rep))


def write_sweep_csv(rows: Iterable[SweepRow], fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["snr_db", "seed", *DETECTION_FIELDS, "error"])
    for row in rows:
        if row.report is None:
            cells = [row.kind.value] + [""] * (len(DETECTION_FIELDS) - 1)
        else:
            cells = _detection_cells(row.report)
        w.writerow([_num(row.snr_db), row.seed, *cells, row.error])
