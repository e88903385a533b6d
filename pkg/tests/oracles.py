"""Independent brute-force references used by the tests.

Nothing here touches the FFT engines: every distribution is a direct double
sum of its defining integrand, with chirp factors evaluated at ``t +/- tau/2``.
"""

import math

import numpy as np
from scipy import integrate

from aqwd.tfd import TFKind


def _lags_for_row(n, n_len):
    m = np.arange(-n_len, n_len + 1)
    ok = (n + m >= 0) & (n + m < n_len) & (n - m >= 0) & (n - m < n_len)
    return m[ok]


def _sqrt_b_2pi_i(b):
    return np.sqrt(complex(b) / (2j * math.pi))


def direct_tfd(kind, lam, f, outer_axis, freq_axis):
    """O(N^2 M) evaluation of the defining integral on the given grid."""
    x, t, dt, n_len = f.samples, f.times, f.dt, f.n
    nu = np.asarray(freq_axis)
    out = np.zeros((len(outer_axis), nu.size), dtype=complex)
    if lam is not None:
        A, B, C, D, E = lam.as_tuple()
    for row, outer in enumerate(outer_axis):
        if kind.is_ambiguity:
            m = int(round(outer / (2 * dt)))
            n = np.arange(n_len)
            ok = (n + m >= 0) & (n + m < n_len) & (n - m >= 0) & (n - m < n_len)
            n = n[ok]
            tau = 2 * m * dt
            tc = t[n]
            up, lo = x[n + m], x[n - m]
            tp, tm = tc + tau / 2, tc - tau / 2
            var = tc[:, None]
            w = dt
        else:
            n = row
            m = _lags_for_row(n, n_len)
            tau = 2 * m * dt
            tc = t[n]
            up, lo = x[n + m], x[n - m]
            tp, tm = tc + tau / 2, tc - tau / 2
            var = tau[:, None]
            w = 2 * dt
        v = nu[None, :]
        if kind in (TFKind.WD, TFKind.AF):
            integrand = (up * np.conj(lo))[:, None] * np.exp(-1j * v * var)
            pre = 1.0
        elif kind in (TFKind.QWD, TFKind.QAF):
            integrand = (up * np.conj(lo))[:, None] * np.exp(
                1j * (A * var**2 + B * v * var + C * v**2 + D * var + E * v)
            )
            pre = _sqrt_b_2pi_i(B)
        else:
            mod = up * np.exp(1j * (C * tp**2 + E * tp)) * np.conj(
                lo * np.exp(1j * (A * tm**2 + D * tm))
            )
            integrand = mod[:, None] * np.exp(1j * B * v * var)
            pre = abs(B) * np.exp(1j * ((A - C) * nu**2 + (D - E) * nu))
        out[row] = pre * integrand.sum(axis=0) * w
    return out


def direct_qpft_reduction(lam, f, outer_axis, freq_axis, ambiguity):
    """The A=C, D=E reduced forms with the single factor exp(i(2A t + B nu + D) tau)."""
    A, B, C, D, E = lam.as_tuple()
    assert A == C and D == E
    x, t, dt, n_len = f.samples, f.times, f.dt, f.n
    nu = np.asarray(freq_axis)
    out = np.zeros((len(outer_axis), nu.size), dtype=complex)
    for row, outer in enumerate(outer_axis):
        if ambiguity:
            m = int(round(outer / (2 * dt)))
            n = np.arange(n_len)
            ok = (n + m >= 0) & (n + m < n_len) & (n - m >= 0) & (n - m < n_len)
            n = n[ok]
            tau = 2 * m * dt
            tc = t[n]
            prod = x[n + m] * np.conj(x[n - m])
            ph = np.exp(1j * (2 * A * tc[:, None] * tau + B * nu[None, :] * tc[:, None] + D * tau))
            out[row] = abs(B) * (prod[:, None] * ph).sum(axis=0) * dt
        else:
            n = row
            m = _lags_for_row(n, n_len)
            tau = 2 * m * dt
            prod = x[n + m] * np.conj(x[n - m])
            ph = np.exp(1j * (2 * A * t[n] + B * nu[None, :] + D) * tau[:, None])
            out[row] = abs(B) * (prod[:, None] * ph).sum(axis=0) * 2 * dt
    return out


def direct_lct(a, b, d, f, outer_axis, freq_axis, ambiguity):
    """LCT-domain WD/AF written with the LCT entries (a, b, d) directly."""
    x, t, dt, n_len = f.samples, f.times, f.dt, f.n
    nu = np.asarray(freq_axis)
    out = np.zeros((len(outer_axis), nu.size), dtype=complex)
    pre = np.exp(1j * (d - a) / (2 * b) * nu**2) / abs(b)
    for row, outer in enumerate(outer_axis):
        if ambiguity:
            m = int(round(outer / (2 * dt)))
            n = np.arange(n_len)
            ok = (n + m >= 0) & (n + m < n_len) & (n - m >= 0) & (n - m < n_len)
            n = n[ok]
            tc = t[n]
            tau = 2 * m * dt
            var, w = tc, dt
        else:
            n = row
            m = _lags_for_row(n, n_len)
            tc = t[n]
            tau = 2 * m * dt
            var, w = tau, 2 * dt
        tp, tm = tc + tau / 2, tc - tau / 2
        up = x[n + m] * np.exp(1j * a / (2 * b) * tp**2)
        lo = x[n - m] * np.exp(1j * d / (2 * b) * tm**2)
        ph = np.exp(-1j / b * np.outer(var, nu))
        out[row] = pre * ((up * np.conj(lo))[:, None] * ph).sum(axis=0) * w
    return out


def cquad(func, a, b, **kw):
    """Adaptive quadrature of a complex integrand on [a, b]."""
    opts = dict(limit=5000, epsabs=1e-14, epsrel=1e-13)
    opts.update(kw)
    re = integrate.quad(lambda s: func(s).real, a, b, **opts)[0]
    im = integrate.quad(lambda s: func(s).imag, a, b, **opts)[0]
    return re + 1j * im


def trapezoid_oracle(func, a, b, panels=1_000_000):
    s = np.linspace(a, b, panels + 1)
    return integrate.trapezoid(func(s), s)


def rel_fro(a, b):
    a, b = np.asarray(a), np.asarray(b)
    return float(np.linalg.norm(a - b) / max(np.linalg.norm(a), np.linalg.norm(b), 1e-300))


def direct_lfm_integral(kind, lam, comp1, comp2, T, x, nu):
    """Adaptive quadrature of the defining integral for two chirps on a window
    of length ``T``; ``comp1`` sits at the ``+`` side.  Scalar ``x``, ``nu``."""
    A, B, C, D, E = lam.as_tuple()
    if kind is TFKind.AQWD:
        def g(u):
            tp, tm = x + u / 2, x - u / 2
            up = comp1(tp) * np.exp(1j * (C * tp**2 + E * tp))
            lo = comp2(tm) * np.exp(1j * (A * tm**2 + D * tm))
            return up * np.conj(lo) * np.exp(1j * B * nu * u)
    elif kind is TFKind.AQAF:
        def g(s):
            tp, tm = s + x / 2, s - x / 2
            up = comp1(tp) * np.exp(1j * (C * tp**2 + E * tp))
            lo = comp2(tm) * np.exp(1j * (A * tm**2 + D * tm))
            return up * np.conj(lo) * np.exp(1j * B * nu * s)
    elif kind is TFKind.QWD:
        def g(u):
            prod = comp1(x + u / 2) * np.conj(comp2(x - u / 2))
            return prod * np.exp(1j * (A * u * u + B * nu * u + C * nu * nu + D * u + E * nu))
        return _sqrt_b_2pi_i(B) * cquad(g, -T / 2, T / 2)
    else:
        raise ValueError(kind)
    pre = abs(B) * np.exp(1j * ((A - C) * nu**2 + (D - E) * nu))
    return pre * cquad(g, -T / 2, T / 2)
