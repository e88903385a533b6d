"""Test signals: LFM chirps, Gaussian beam pairs, seeded complex AWGN."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import GridError

#: Pass as ``snr_db`` to :func:`add_awgn` to disable noise.
NOISELESS = math.inf


@dataclass(frozen=True, eq=False)
class Signal:
    """Uniformly sampled complex signal; sample ``n`` sits at ``t0 + n*dt``."""

    samples: np.ndarray
    t0: float
    dt: float

    def __post_init__(self):
        x = np.array(self.samples, dtype=np.complex128).ravel()
        if x.size < 2:
            raise ValueError(f"a signal needs at least 2 samples, got {x.size}")
        if not (self.dt > 0 and math.isfinite(self.dt)):
            raise ValueError(f"dt must be positive and finite, got {self.dt}")
        if not math.isfinite(self.t0):
            raise ValueError("t0 must be finite")
        x.setflags(write=False)
        object.__setattr__(self, "samples", x)
        object.__setattr__(self, "t0", float(self.t0))
        object.__setattr__(self, "dt", float(self.dt))

    @property
    def n(self) -> int:
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t0 + np.arange(self.n) * self.dt

    def same_grid(self, other: "Signal") -> bool:
        return self.n == other.n and self.t0 == other.t0 and self.dt == other.dt

    def with_samples(self, samples) -> "Signal":
        return Signal(samples, self.t0, self.dt)

    def energy(self) -> float:
        return float(np.sum(np.abs(self.samples) ** 2) * self.dt)

    def power(self) -> float:
        return float(np.mean(np.abs(self.samples) ** 2))


@dataclass(frozen=True)
class LFMComponent:
    """One chirp ``amp * exp(i(nu0 t + xi0 t^2))``; nu0 in rad/s, xi0 in rad/s^2."""

    amp: complex
    nu0: float
    xi0: float

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        return self.amp * np.exp(1j * (self.nu0 * t + self.xi0 * t * t))


def symmetric_grid(half_support: float, n: int) -> tuple[float, float]:
    """Return ``(t0, dt)`` for ``n`` points spanning [-half_support, half_support]
    with both endpoints included."""
    if not (half_support > 0 and math.isfinite(half_support)):
        raise ValueError(f"half_support must be positive, got {half_support}")
    if int(n) != n or n < 2:
        raise ValueError(f"n must be an integer >= 2, got {n}")
    return -float(half_support), 2.0 * half_support / (n - 1)


def sample_function(func: Callable, half_support: float, n: int) -> Signal:
    t0, dt = symmetric_grid(half_support, n)
    t = t0 + np.arange(n) * dt
    return Signal(func(t), t0, dt)


def make_lfm(comp: LFMComponent, half_support: float, n: int) -> Signal:
    """Sample a single chirp on the symmetric grid over [-half_support, half_support]."""
    return sample_function(comp, half_support, n)


def make_multicomponent(
    comps: Sequence[LFMComponent], half_support: float, n: int
) -> Signal:
    if len(comps) == 0:
        raise ValueError("at least one LFM component is required")
    t0, dt = symmetric_grid(half_support, n)
    t = t0 + np.arange(n) * dt
    x = np.zeros(n, dtype=np.complex128)
    for comp in comps:
        x = x + comp(t)
    return Signal(x, t0, dt)


def gaussian_pair(centers: tuple[float, float] = (0.0, 4.0)) -> Callable:
    """Analytic ``t -> exp(-(t-c1)^2/sqrt2) + exp(-(t-c2)^2/sqrt2)``."""
    c1, c2 = (float(c) for c in centers)
    root2 = math.sqrt(2.0)

    def beam(t):
        t = np.asarray(t, dtype=float)
        return (np.exp(-((t - c1) ** 2) / root2) + np.exp(-((t - c2) ** 2) / root2)).astype(
            np.complex128
        )

    return beam


def make_gaussian_pair(
    centers: tuple[float, float], half_support: float, n: int
) -> Signal:
    return sample_function(gaussian_pair(centers), half_support, n)


def add_awgn(f: Signal, snr_db: float, seed: int) -> Signal:
    """Add circularly-symmetric complex white noise at ``snr_db`` (average power
    over the support).  Same ``(f, snr_db, seed)`` gives bit-identical output;
    ``snr_db=NOISELESS`` returns ``f`` unchanged."""
    power = f.power()
    if power == 0.0:
        raise ValueError("SNR is undefined for a zero-energy signal")
    if snr_db == math.inf:
        return f
    if math.isnan(snr_db):
        raise ValueError("snr_db is NaN")
    noise_power = power / 10.0 ** (snr_db / 10.0)
    rng = np.random.default_rng(seed)
    w = rng.standard_normal((2, f.n))
    noise = math.sqrt(noise_power / 2.0) * (w[0] + 1j * w[1])
    return f.with_samples(f.samples + noise)


def inner_product(f: Signal, g: Signal) -> complex:
    """Riemann approximation of <f, g> = integral f(t) conj(g(t)) dt."""
    if not f.same_grid(g):
        raise GridError("inner product needs signals on identical grids")
    return complex(np.sum(f.samples * np.conj(g.samples)) * f.dt)
