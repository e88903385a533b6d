"""Quadratic-phase Fourier transform, its kernel, and the parameter-set algebra.

The QPFT of ``f`` with parameters ``lam = (A, B, C, D, E)`` is

    Q{f}(nu) = 1/sqrt(2 pi) * integral f(t) K(nu, t) dt,
    K(nu, t) = sqrt(B/i) * exp(i (A nu^2 + B t nu + C t^2 + D nu + E t)).

``sqrt`` is always the principal branch of the complex square root.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .signals import Signal


@dataclass(frozen=True)
class ParamSet:
    """The real quintuple (A, B, C, D, E) with B != 0."""

    a: float
    b: float
    c: float
    d: float
    e: float

    def __post_init__(self):
        for name in "abcde":
            v = float(getattr(self, name))
            if not math.isfinite(v):
                raise ValueError(f"parameter {name.upper()} must be finite")
            object.__setattr__(self, name, v)
        if self.b == 0.0:
            raise ValueError("B must be nonzero")

    @classmethod
    def of(cls, values) -> "ParamSet":
        values = tuple(values)
        if len(values) != 5:
            raise ValueError(f"expected 5 parameters (A,B,C,D,E), got {len(values)}")
        return cls(*values)

    @classmethod
    def from_lct(cls, a: float, b: float, d: float) -> "ParamSet":
        """Parameter set under which the advanced distributions become the
        LCT-domain ones for an LCT matrix with entries a, b, d."""
        if b == 0:
            raise ValueError("LCT parameter b must be nonzero")
        return cls(d / (2 * b), -1.0 / b, a / (2 * b), 0.0, 0.0)

    def as_tuple(self) -> tuple[float, float, float, float, float]:
        return (self.a, self.b, self.c, self.d, self.e)

    def __str__(self):
        return ",".join(repr(v) for v in self.as_tuple())

    @property
    def line_regime(self) -> bool:
        """True when A == C, the case where LFM auto-terms concentrate on lines."""
        return self.a == self.c

    def hat(self) -> "ParamSet":
        return ParamSet(self.c, self.b, self.a, self.e, self.d)

    def tilde(self) -> "ParamSet":
        return ParamSet(self.c, -self.b, self.a, self.e, self.d)

    def reflect(self) -> "ParamSet":
        """(A, B, C, -D, -E): the set that carries f(-t) exactly."""
        return ParamSet(self.a, self.b, self.c, -self.d, -self.e)

    def outer_phase(self, nu):
        """exp(i[(A-C) nu^2 + (D-E) nu]), the column factor of AQWD/AQAF."""
        nu = np.asarray(nu, dtype=float)
        return np.exp(1j * ((self.a - self.c) * nu * nu + (self.d - self.e) * nu))


CLASSICAL = ParamSet(0.0, -1.0, 0.0, 0.0, 0.0)


class ParamMap(enum.Enum):
    HAT = "hat"
    TILDE = "tilde"
    PRIME_WD_MARGINAL = "prime_wd_marginal"
    PRIME_AF_MARGINAL = "prime_af_marginal"
    DOUBLEPRIME_AF_MARGINAL = "doubleprime_af_marginal"
    CLASSICAL = "classical"
    REFLECT = "reflect"


def apply_map(kind: ParamMap, lam: ParamSet) -> ParamSet:
    a, b, c, d, e = lam.as_tuple()
    if kind in (ParamMap.HAT, ParamMap.PRIME_WD_MARGINAL):
        return ParamSet(c, b, a, e, d)
    if kind is ParamMap.TILDE:
        return ParamSet(c, -b, a, e, d)
    if kind is ParamMap.PRIME_AF_MARGINAL:
        return ParamSet(a, b / 2, c, d, e)
    if kind is ParamMap.DOUBLEPRIME_AF_MARGINAL:
        return ParamSet(c, -b / 2, a, e, d)
    if kind is ParamMap.CLASSICAL:
        return CLASSICAL
    if kind is ParamMap.REFLECT:
        return lam.reflect()
    raise ValueError(f"unknown parameter map {kind!r}")


def is_qpft_reduction(lam: ParamSet) -> bool:
    """A == C and D == E: the advanced distributions collapse to the
    earlier QPFT-domain WD/AF with a single chirp factor."""
    return lam.a == lam.c and lam.d == lam.e


def sqrt_b_over_i(b: float) -> complex:
    return complex(np.sqrt(complex(b) / 1j))


def kernel(lam: ParamSet, nu, t):
    nu = np.asarray(nu, dtype=float)
    t = np.asarray(t, dtype=float)
    a, b, c, d, e = lam.as_tuple()
    phase = a * nu * nu + b * t * nu + c * t * t + d * nu + e * t
    out = sqrt_b_over_i(b) * np.exp(1j * phase)
    return out[()] if out.ndim == 0 else out


def chirp_modulate(f: Signal, p: float, q: float) -> Signal:
    """f_{p,q}(t) = f(t) exp(i(p t^2 + q t)) on the signal's own grid."""
    if p == 0 and q == 0:
        return f
    t = f.times
    return f.with_samples(f.samples * np.exp(1j * (p * t * t + q * t)))


def qpft_forward(lam: ParamSet, f: Signal, nu_grid, chunk: int = 2048) -> np.ndarray:
    """Riemann-sum QPFT of ``f`` evaluated at each frequency in ``nu_grid``."""
    nu = np.atleast_1d(np.asarray(nu_grid, dtype=float))
    if not np.all(np.isfinite(nu)):
        raise ValueError("nu_grid must be finite")
    a, b, c, d, e = lam.as_tuple()
    t = f.times
    g = f.samples * np.exp(1j * (c * t * t + e * t))
    out = np.empty(nu.size, dtype=np.complex128)
    for lo in range(0, nu.size, chunk):
        v = nu[lo : lo + chunk]
        out[lo : lo + chunk] = np.exp(1j * b * np.outer(v, t)) @ g
    scale = sqrt_b_over_i(b) * f.dt / math.sqrt(2 * math.pi)
    return scale * np.exp(1j * (a * nu * nu + d * nu)) * out
