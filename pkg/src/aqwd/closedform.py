"""Closed forms for LFM signals: auto-terms, cross-terms, and ridge lines.

Every expression integrates the lag (WD-family) or the time (AF-family) over a
symmetric window of length ``T``.  For a chirp supported on ``|t| <= h`` the
window seen by the discrete engines is ``4 (h - |t|)`` for WD-family cells at
time ``t`` and ``2 h - |tau|`` for AF-family cells at lag ``tau``; see
:func:`effective_window`.

``sinc`` is the unnormalised ``sin(x)/x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import RegimeError
from .qpft import ParamSet, sqrt_b_over_i
from .signals import LFMComponent
from .tfd import TFKind

_GL_NODES, _GL_WEIGHTS = leggauss(12)
_MAX_PANEL_PHASE = math.pi / 4


@dataclass(frozen=True)
class LineModel:
    """nu = slope * x + intercept in the (t, nu) or (tau, nu) plane."""

    slope: float
    intercept: float

    def __post_init__(self):
        if not (math.isfinite(self.slope) and math.isfinite(self.intercept)):
            raise ValueError("line parameters must be finite")

    def __call__(self, x):
        return self.slope * np.asarray(x, dtype=float) + self.intercept


def sinc(x):
    return np.sinc(np.asarray(x, dtype=float) / math.pi)


def fresnel_segment(alpha: float, beta, a: float, b: float):
    """integral_a^b exp(i(alpha x^2 + beta x)) dx, vectorised over ``beta``.

    ``alpha == 0`` uses the exact antiderivative.  Otherwise composite
    Gauss-Legendre with panels narrow enough that the phase moves at most pi/4
    across each one.
    """
    if not a <= b:
        raise ValueError("fresnel_segment needs a <= b")
    beta = np.asarray(beta, dtype=float)
    width = b - a
    if alpha == 0:
        out = np.exp(0.5j * beta * (a + b)) * width * sinc(0.5 * beta * width)
        return out[()] if out.ndim == 0 else out
    if width == 0:
        out = np.zeros(beta.shape, dtype=complex)
        return out[()] if out.ndim == 0 else out
    rate = np.maximum(np.abs(2 * alpha * a + beta), np.abs(2 * alpha * b + beta))
    panels = max(1, int(math.ceil(width * float(np.max(rate)) / _MAX_PANEL_PHASE)))
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * _GL_NODES[None, :]).ravel()
    w = (half[:, None] * _GL_WEIGHTS[None, :]).ravel()
    flat = beta.reshape(-1)
    out = np.empty(flat.size, dtype=complex)
    # chunk over beta so the (beta x nodes) phase matrix stays small
    step = max(1, 2_000_000 // x.size)
    quad = np.exp(1j * alpha * x * x) * w
    for lo in range(0, flat.size, step):
        out[lo : lo + step] = np.exp(1j * np.outer(flat[lo : lo + step], x)) @ quad
    out = out.reshape(beta.shape)
    return out[()] if out.ndim == 0 else out


def effective_window(kind: TFKind, half_support: float, x) -> np.ndarray:
    """Integration window length a finite chirp on ``|t| <= half_support``
    presents at outer coordinate ``x`` (time for WD-family, lag for AF-family)."""
    x = np.abs(np.asarray(x, dtype=float))
    if kind.is_ambiguity:
        return np.maximum(2 * half_support - x, 0.0)
    return np.maximum(4 * (half_support - x), 0.0)


def _windowed(alpha, bracket, T):
    """integral over [-T/2, T/2] of exp(i(alpha s^2 + bracket s)), broadcasting T."""
    T = np.asarray(T, dtype=float)
    if alpha == 0:
        return T * sinc(0.5 * T * bracket)
    if T.ndim == 0:
        return fresnel_segment(alpha, bracket, -0.5 * float(T), 0.5 * float(T))
    bracket, T = np.broadcast_arrays(bracket, T)
    out = np.empty(bracket.shape, dtype=complex)
    for width in np.unique(T):
        sel = T == width
        out[sel] = fresnel_segment(alpha, bracket[sel], -0.5 * width, 0.5 * width)
    return out


def _energy(amp1: complex, amp2: complex) -> complex:
    return amp1 * np.conj(amp2)


def lfm_auto_analytic(kind: TFKind, lam: ParamSet, comp: LFMComponent, T, point):
    """Closed-form AQWD, AQAF or QWD of one chirp at ``point = (x, nu)``.

    ``x`` is time for AQWD/QWD and lag for AQAF; ``x``, ``nu`` and ``T`` broadcast.
    """
    if np.any(np.asarray(T) <= 0):
        raise ValueError("window length T must be positive")
    x, nu = (np.asarray(v, dtype=float) for v in point)
    A, B, C, D, E = lam.as_tuple()
    nu0, xi0 = comp.nu0, comp.xi0
    energy = _energy(comp.amp, comp.amp).real
    if kind is TFKind.AQWD:
        bracket = (2 * xi0 + C + A) * x + B * nu + nu0 + 0.5 * (D + E)
        if A == C:
            pre = energy * abs(B) * np.exp(1j * (D - E) * (nu - x))
            return pre * _windowed(0.0, bracket, T)
        pre = energy * abs(B) * np.exp(1j * ((A - C) * (nu**2 - x**2) + (D - E) * (nu - x)))
        return pre * _windowed(0.25 * (C - A), bracket, T)
    if kind is TFKind.AQAF:
        bracket = (2 * xi0 + C + A) * x + B * nu + E - D
        pre = energy * abs(B) * np.exp(
            1j * ((A - C) * (nu**2 - 0.25 * x**2) + (D - E) * nu + 0.5 * (D + E) * x + nu0 * x)
        )
        return pre * _windowed(C - A, bracket, T)
    if kind is TFKind.QWD:
        bracket = 2 * xi0 * x + B * nu + nu0 + D
        pre = energy * sqrt_b_over_i(B) / math.sqrt(2 * math.pi) * np.exp(1j * (C * nu**2 + E * nu))
        return pre * _windowed(A, bracket, T)
    raise ValueError(f"no closed form for {kind.name}; use AQWD, AQAF or QWD")


def cross_term_analytic(
    kind: TFKind,
    lam: ParamSet,
    comp1: LFMComponent,
    comp2: LFMComponent,
    T,
    point,
):
    """Closed-form cross-term of ``comp1`` at ``t + tau/2`` against ``comp2`` at
    ``t - tau/2``.  ``comp1 == comp2`` gives the auto-term."""
    if np.any(np.asarray(T) <= 0):
        raise ValueError("window length T must be positive")
    x, nu = (np.asarray(v, dtype=float) for v in point)
    A, B, C, D, E = lam.as_tuple()
    n1, x1, n2, x2 = comp1.nu0, comp1.xi0, comp2.nu0, comp2.xi0
    amp = _energy(comp1.amp, comp2.amp)
    if kind is TFKind.AQWD:
        quad = 0.25 * (x1 - x2) + 0.25 * (C - A)
        r2 = amp * abs(B) * np.exp(
            1j * ((A - C) * (nu**2 - x**2) + (D - E) * (nu - x) + (x1 - x2) * x**2 + (n1 - n2) * x)
        )
        bracket = (x1 + x2 + A + C) * x + B * nu + 0.5 * (n1 + n2) + 0.5 * (D + E)
        return r2 * _windowed(quad, bracket, T)
    if kind is TFKind.AQAF:
        quad = x1 - x2 + C - A
        r4 = amp * abs(B) * np.exp(
            1j
            * (
                (A - C) * (nu**2 - 0.25 * x**2)
                + (D - E) * nu
                + 0.5 * (D + E) * x
                + 0.25 * (x1 - x2) * x**2
                + 0.5 * (n1 + n2) * x
            )
        )
        bracket = (x1 + x2 + C + A) * x + B * nu + n1 - n2 + E - D
        return r4 * _windowed(quad, bracket, T)
    raise ValueError(f"no cross-term closed form for {kind.name}; use AQWD or AQAF")


def _regime(kind: TFKind, lam: ParamSet | None) -> None:
    if kind in (TFKind.AQWD, TFKind.AQAF) and lam.a != lam.c:
        raise RegimeError(f"{kind.name} ridges are straight lines only when A == C")
    if kind in (TFKind.QWD, TFKind.QAF) and lam.a != 0:
        raise RegimeError(f"{kind.name} ridges are straight lines only when A == 0")


def predicted_ridge(kind: TFKind, lam: ParamSet | None, comp: LFMComponent) -> LineModel:
    """Line on which the chirp's distribution peaks.

    AQWD: (2 xi0 + 2A) t + B nu + nu0 + (D+E)/2 = 0.  AQAF: (2 xi0 + 2A) tau +
    B nu + E - D = 0.  QWD/QAF (A = 0) and WD/AF are included for comparisons.
    """
    nu0, xi0 = comp.nu0, comp.xi0
    if kind is TFKind.WD:
        return LineModel(2 * xi0, nu0)
    if kind is TFKind.AF:
        return LineModel(2 * xi0, 0.0)
    _regime(kind, lam)
    A, B, C, D, E = lam.as_tuple()
    if kind is TFKind.AQWD:
        return LineModel(-(2 * xi0 + 2 * A) / B, -(nu0 + 0.5 * (D + E)) / B)
    if kind is TFKind.AQAF:
        return LineModel(-(2 * xi0 + 2 * A) / B, -(E - D) / B)
    if kind is TFKind.QWD:
        return LineModel(-2 * xi0 / B, -(nu0 + D) / B)
    return LineModel(-2 * xi0 / B, -D / B)


def estimate_lfm_params(
    line: LineModel, lam: ParamSet | None, kind: TFKind
) -> tuple[float, float | None]:
    """Invert :func:`predicted_ridge`: returns ``(nu0_hat, xi0_hat)``.

    AF-family lines carry no nu0 (it only enters as a phase), so ``nu0_hat`` is
    None for AQAF, QAF and AF.
    """
    if kind is TFKind.WD:
        return line.intercept, 0.5 * line.slope
    if kind is TFKind.AF:
        return None, 0.5 * line.slope
    _regime(kind, lam)
    A, B, C, D, E = lam.as_tuple()
    if kind is TFKind.AQWD:
        return -B * line.intercept - 0.5 * (D + E), -0.5 * B * line.slope - A
    if kind is TFKind.AQAF:
        return None, -0.5 * B * line.slope - A
    if kind is TFKind.QWD:
        return -B * line.intercept - D, -0.5 * B * line.slope
    return None, -0.5 * B * line.slope
