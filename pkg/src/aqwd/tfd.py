"""Discrete engines for the six bilinear distributions.

All kinds share one lag-product core.  The half-lag ``t +/- tau/2`` is only ever
evaluated at whole samples by restricting the lag to ``tau = 2 m dt``; products
that fall outside the record are zero.  Integrals are plain Riemann sums
(``2 dt`` over lag, ``dt`` over time).

Frequency axes are chosen so that the oscillatory factor of each kind becomes an
exact DFT twiddle: with ``beta`` the multiplier of ``nu`` in the exponent
(``B`` for the quadratic-phase kinds, ``-1`` for WD/AF), the inner variable step
``delta`` and transform length ``M``,

    nu_k = 2 pi k / (M * delta * |beta|),   k in [-M//2, M - M//2).

The sign of ``beta`` only picks the transform direction, so ``freq_axis`` is
always ascending.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
import scipy.fft

from .errors import GridError
from .qpft import ParamSet, sqrt_b_over_i
from .signals import Signal

MIN_SAMPLES = 8


class TFKind(enum.Enum):
    WD = "wd"
    AF = "af"
    QWD = "qwd"
    QAF = "qaf"
    AQWD = "aqwd"
    AQAF = "aqaf"

    @property
    def needs_params(self) -> bool:
        return self not in (TFKind.WD, TFKind.AF)

    @property
    def is_ambiguity(self) -> bool:
        """AF-family kinds are indexed by lag on the outer axis."""
        return self in (TFKind.AF, TFKind.QAF, TFKind.AQAF)

    @classmethod
    def parse(cls, name: str) -> "TFKind":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown distribution kind {name!r}") from None


@dataclass(frozen=True, eq=False)
class TFMap:
    """A distribution sampled on (outer_axis x freq_axis).

    ``outer_axis`` holds times for WD-family kinds and lags for AF-family kinds.
    """

    values: np.ndarray
    outer_axis: np.ndarray
    freq_axis: np.ndarray
    kind: TFKind
    params: Optional[ParamSet] = None
    n_samples: int = 0
    dt: float = 0.0
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        values = np.array(self.values, dtype=np.complex128)
        outer = np.array(self.outer_axis, dtype=float)
        freq = np.array(self.freq_axis, dtype=float)
        if values.shape != (outer.size, freq.size):
            raise GridError(
                f"values shape {values.shape} does not match axes ({outer.size}, {freq.size})"
            )
        for name, axis in (("outer_axis", outer), ("freq_axis", freq)):
            if axis.size > 1 and not np.all(np.diff(axis) > 0):
                raise GridError(f"{name} must be strictly increasing")
        for arr in (values, outer, freq):
            arr.setflags(write=False)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "outer_axis", outer)
        object.__setattr__(self, "freq_axis", freq)

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    @property
    def dnu(self) -> float:
        return float(self.freq_axis[1] - self.freq_axis[0])

    @property
    def douter(self) -> float:
        return float(self.outer_axis[1] - self.outer_axis[0])

    def magnitude(self) -> np.ndarray:
        return np.abs(self.values)


def _check(kind: TFKind, lam: Optional[ParamSet], f: Signal) -> None:
    if kind.needs_params and lam is None:
        raise ValueError(f"{kind.name} requires a parameter set")
    if not kind.needs_params and lam is not None:
        raise ValueError(f"{kind.name} takes no parameter set")
    if f.n < MIN_SAMPLES:
        raise GridError(f"need at least {MIN_SAMPLES} samples, got {f.n}")


def _beta(kind: TFKind, lam: Optional[ParamSet]) -> float:
    return -1.0 if lam is None or not kind.needs_params else lam.b


def _outer_indices(kind: TFKind, n: int) -> np.ndarray:
    if kind.is_ambiguity:
        return np.arange(-(n // 2), n // 2)
    return np.arange(n)


def tf_axes(kind: TFKind, lam: Optional[ParamSet], f: Signal) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(outer_axis, freq_axis)`` exactly as ``compute_tfd`` embeds them."""
    _check(kind, lam, f)
    n = f.n
    m_len = n
    beta = abs(_beta(kind, lam))
    if kind.is_ambiguity:
        outer = 2.0 * _outer_indices(kind, n) * f.dt
        delta = f.dt
    else:
        outer = f.times
        delta = 2.0 * f.dt
    k = np.arange(m_len) - m_len // 2
    freq = 2.0 * math.pi * k / (m_len * delta * beta)
    return outer, freq


def lag_product(f: Signal, lam: Optional[ParamSet], n: int, m: int) -> complex:
    """f_{C,E}[n+m] * conj(f_{A,D}[n-m]) (plain f when ``lam`` is None);
    zero when either index leaves the record."""
    if not (0 <= n + m < f.n and 0 <= n - m < f.n):
        return 0j
    x, y = f.samples[n + m], f.samples[n - m]
    if lam is not None:
        tp, tm = f.t0 + (n + m) * f.dt, f.t0 + (n - m) * f.dt
        x = x * np.exp(1j * (lam.c * tp * tp + lam.e * tp))
        y = y * np.exp(1j * (lam.a * tm * tm + lam.d * tm))
    return complex(x * np.conj(y))


def _products(x: np.ndarray, y: np.ndarray, ambiguity: bool) -> np.ndarray:
    """Lag-product matrix.  WD-family: rows = time n, columns = lag m ascending
    from -N//2.  AF-family: rows = lag m ascending from -N//2, columns = time n."""
    n_len = x.size
    if ambiguity:
        m = np.arange(-(n_len // 2), n_len // 2)[:, None]
        n = np.arange(n_len)[None, :]
    else:
        n = np.arange(n_len)[:, None]
        m = (np.arange(n_len) - n_len // 2)[None, :]
    ip, im = n + m, n - m
    ok = (ip >= 0) & (ip < n_len) & (im >= 0) & (im < n_len)
    out = np.zeros(ok.shape, dtype=np.complex128)
    out[ok] = x[ip[ok]] * np.conj(y[im[ok]])
    return out


def _dft_rows(p: np.ndarray, sign: float, ambiguity: bool, workers: Optional[int]) -> np.ndarray:
    """sum_j p[., j] exp(sign * 2 pi i j k / M) for k in [-M//2, M - M//2)."""
    m_len = p.shape[1]
    if not ambiguity:
        # lag columns start at -M//2; move lag 0 to index 0
        p = np.fft.ifftshift(p, axes=1)
    if sign < 0:
        s = scipy.fft.fft(p, axis=1, workers=workers)
    else:
        s = scipy.fft.ifft(p, axis=1, workers=workers) * m_len
    return np.fft.fftshift(s, axes=1)


def _engine(
    kind: TFKind,
    lam: Optional[ParamSet],
    f: Signal,
    g: Optional[Signal],
    workers: Optional[int],
) -> TFMap:
    _check(kind, lam, f)
    if g is None:
        g = f
    elif not f.same_grid(g):
        raise GridError("cross distribution needs signals on identical grids")
    t = f.times
    ambiguity = kind.is_ambiguity
    outer, freq = tf_axes(kind, lam, f)
    beta = _beta(kind, lam)

    if kind in (TFKind.AQWD, TFKind.AQAF):
        x = f.samples * np.exp(1j * (lam.c * t * t + lam.e * t))
        y = g.samples * np.exp(1j * (lam.a * t * t + lam.d * t))
    else:
        x, y = f.samples, g.samples

    p = _products(x, y, ambiguity)
    if kind is TFKind.QWD:
        lag = 2.0 * (np.arange(f.n) - f.n // 2) * f.dt
        p *= np.exp(1j * (lam.a * lag * lag + lam.d * lag))[None, :]
    elif kind is TFKind.QAF:
        p *= np.exp(1j * (lam.a * t * t + lam.d * t))[None, :]

    s = _dft_rows(p, beta, ambiguity, workers)
    if ambiguity:
        s *= f.dt * np.exp(1j * beta * freq * f.t0)[None, :]
    else:
        s *= 2.0 * f.dt

    if kind in (TFKind.AQWD, TFKind.AQAF):
        s *= (abs(lam.b) * lam.outer_phase(freq))[None, :]
    elif kind in (TFKind.QWD, TFKind.QAF):
        col = sqrt_b_over_i(lam.b) / math.sqrt(2 * math.pi)
        s *= (col * np.exp(1j * (lam.c * freq * freq + lam.e * freq)))[None, :]

    return TFMap(s, outer, freq, kind, lam, f.n, f.dt)


def compute_tfd(
    kind: TFKind, lam: Optional[ParamSet], f: Signal, workers: Optional[int] = None
) -> TFMap:
    """Evaluate the distribution ``kind`` of ``f`` on the grid of :func:`tf_axes`.

    Args:
        kind: which of the six distributions.
        lam: parameter set; required for QWD/QAF/AQWD/AQAF, forbidden for WD/AF.
        f: the signal, at least 8 samples.
        workers: FFT worker threads.  Rows are transformed independently, so
            the result is bit-identical for any worker count.
    """
    return _engine(kind, lam, f, None, workers)


def compute_cross_tfd(
    kind: TFKind,
    lam: Optional[ParamSet],
    f: Signal,
    g: Signal,
    workers: Optional[int] = None,
) -> TFMap:
    """Cross distribution: ``f`` at ``t + tau/2``, ``conj(g)`` at ``t - tau/2``."""
    return _engine(kind, lam, f, g, workers)
