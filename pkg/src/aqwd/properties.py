"""Numerical checks of the algebraic identities satisfied by AQWD/AQAF.

Each verifier computes both sides of one identity on the discrete grid and
returns a :class:`ResidualReport`.  Where an identity has competing forms
(sign, constant or phase conventions), each form is evaluated as a named
variant and ``rel_error`` is the best of them; ``variant`` names the winner.

Shift, conjugation and symmetry identities are exact rearrangements of the
engine's finite sums, provided the shifts land on grid points (see
:func:`aligned_fixture`).  Marginals, Moyal and reconstruction replace integrals
by sums and are checked against smooth Gaussian fixtures.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import AlignmentError, PreconditionError
from .qpft import ParamMap, ParamSet, apply_map, qpft_forward
from .signals import Signal, gaussian_pair, inner_product, sample_function
from .tfd import TFKind, TFMap, compute_tfd


class PropertyId(enum.Enum):
    TIME_SHIFT_WD = "time_shift_wd"
    TIME_SHIFT_AF = "time_shift_af"
    FREQ_SHIFT_WD = "freq_shift_wd"
    FREQ_SHIFT_AF = "freq_shift_af"
    JOINT_SHIFT_WD = "joint_shift_wd"
    JOINT_SHIFT_AF = "joint_shift_af"
    CONJ_WD = "conj_wd"
    CONJ_AF = "conj_af"
    SYMM_WD = "symm_wd"
    SYMM_AF = "symm_af"
    MARGINAL_WD = "marginal_wd"
    MARGINAL_AF = "marginal_af"
    ENERGY_MARGINAL = "energy_marginal"
    AF_SLICE = "af_slice"
    MOYAL_WD = "moyal_wd"
    MOYAL_AF = "moyal_af"
    RECON_WD = "recon_wd"
    RECON_AF = "recon_af"

    @property
    def is_ambiguity(self) -> bool:
        return self.name.endswith("_AF") or self is PropertyId.AF_SLICE


SHIFT_PROPERTIES = (
    PropertyId.TIME_SHIFT_WD,
    PropertyId.TIME_SHIFT_AF,
    PropertyId.FREQ_SHIFT_WD,
    PropertyId.FREQ_SHIFT_AF,
    PropertyId.JOINT_SHIFT_WD,
    PropertyId.JOINT_SHIFT_AF,
)
REINDEX_PROPERTIES = (
    PropertyId.CONJ_WD,
    PropertyId.CONJ_AF,
    PropertyId.SYMM_WD,
    PropertyId.SYMM_AF,
)
QUADRATURE_PROPERTIES = (
    PropertyId.MARGINAL_WD,
    PropertyId.MARGINAL_AF,
    PropertyId.ENERGY_MARGINAL,
    PropertyId.AF_SLICE,
    PropertyId.MOYAL_WD,
    PropertyId.MOYAL_AF,
    PropertyId.RECON_WD,
    PropertyId.RECON_AF,
)

SHIFT_TOL = 1e-8
REINDEX_TOL = 1e-10
QUADRATURE_TOL = 1e-2


def tolerance(pid: PropertyId) -> float:
    if pid in SHIFT_PROPERTIES:
        return SHIFT_TOL
    if pid in REINDEX_PROPERTIES:
        return REINDEX_TOL
    return QUADRATURE_TOL


@dataclass(frozen=True, eq=False)
class VerifierFixture:
    """Inputs for one verification.

    ``f_exact`` is an optional analytic version of ``f``; identities that need
    ``f`` off the sample grid (half-sample points on even grids) use it.
    """

    f: Signal
    lam: ParamSet
    g: Optional[Signal] = None
    t0: float = 0.0
    u0: float = 0.0
    f_exact: Optional[Callable] = None


@dataclass(frozen=True)
class ResidualReport:
    property: PropertyId
    lhs_norm: float
    rhs_norm: float
    rel_error: float
    variant_errors: dict = field(default_factory=dict)
    variant: Optional[str] = None
    grid_meta: tuple = ()

    @property
    def passed(self) -> bool:
        return self.rel_error <= tolerance(self.property)


def rel_error(lhs, rhs) -> float:
    lhs, rhs = np.asarray(lhs), np.asarray(rhs)
    a, b = float(np.linalg.norm(lhs)), float(np.linalg.norm(rhs))
    return float(np.linalg.norm(lhs - rhs)) / max(a, b, 1e-12)


# ---------------------------------------------------------------- helpers


def _phi(lam: ParamSet, nu):
    return (lam.a - lam.c) * nu * nu + (lam.d - lam.e) * nu


def _kind(pid: PropertyId) -> TFKind:
    return TFKind.AQAF if pid.is_ambiguity else TFKind.AQWD


def _shifted_view(values: np.ndarray, rows: int, cols: int):
    """``out[n, k] = values[n - rows, k + cols]`` with a validity mask."""
    n_out, n_freq = values.shape
    out = np.zeros_like(values)
    mask = np.zeros(values.shape, dtype=bool)
    r_lo, r_hi = max(0, rows), min(n_out, n_out + rows)
    c_lo, c_hi = max(0, -cols), min(n_freq, n_freq - cols)
    if r_lo < r_hi and c_lo < c_hi:
        out[r_lo:r_hi, c_lo:c_hi] = values[r_lo - rows : r_hi - rows, c_lo + cols : c_hi + cols]
        mask[r_lo:r_hi, c_lo:c_hi] = True
    return out, mask


def _mirror_index(size: int, axis_is_symmetric_grid: bool) -> np.ndarray:
    """Index of the negated coordinate, -1 where it is off the grid."""
    i = np.arange(size)
    if axis_is_symmetric_grid:
        return size - 1 - i
    j = 2 * (size // 2) - i
    j[(j < 0) | (j >= size)] = -1
    return j


def _flip(values: np.ndarray, row_map: Optional[np.ndarray], col_map: Optional[np.ndarray]):
    out = values
    mask = np.ones(values.shape, dtype=bool)
    if row_map is not None:
        ok = row_map >= 0
        out = out[np.where(ok, row_map, 0), :]
        mask &= ok[:, None]
    if col_map is not None:
        ok = col_map >= 0
        out = out[:, np.where(ok, col_map, 0)]
        mask &= ok[None, :]
    return np.where(mask, out, 0), mask


def _as_index(value: float, what: str) -> int:
    k = round(value)
    if abs(value - k) > 1e-6:
        raise AlignmentError(f"{what} = {value:.9g} steps is not an integer")
    return int(k)


def _report(pid, lhs, variants: dict, fixture_meta, single_label=None):
    """``variants`` maps label -> (rhs, mask)."""
    errors = {}
    norms = {}
    for label, (rhs, mask) in variants.items():
        lo, ro = np.asarray(lhs)[mask], np.asarray(rhs)[mask]
        errors[label] = rel_error(lo, ro)
        norms[label] = (float(np.linalg.norm(lo)), float(np.linalg.norm(ro)))
    best = min(errors, key=errors.get)
    lhs_norm, rhs_norm = norms[best]
    shown = errors if len(errors) > 1 else {}
    return ResidualReport(pid, lhs_norm, rhs_norm, errors[best], shown, best, fixture_meta)


def _meta(f: Signal) -> tuple:
    return (f.n, f.dt, f.n)


def _full(shape):
    return np.ones(shape, dtype=bool)


def _is_symmetric_grid(f: Signal) -> bool:
    return abs(f.t0 + f.times[-1]) <= 1e-9 * max(1.0, abs(f.t0))


# ---------------------------------------------------------- shift identities


def _time_steps(fx: VerifierFixture) -> int:
    return _as_index(fx.t0 / fx.f.dt, "t0/dt")


def _col_shift(delta: float, W: TFMap) -> int:
    return _as_index(delta / W.dnu, "frequency offset/dnu")


def _shifted_signal(fx: VerifierFixture, time=True, freq=True) -> Signal:
    f = fx.f
    x = f.samples
    if time:
        s = _time_steps(fx)
        spill = x[f.n - s :] if s > 0 else x[:-s]
        if s and np.any(spill != 0):
            raise AlignmentError("time shift would push nonzero samples off the record")
        x = np.roll(x, s)
    if freq and fx.u0:
        x = x * np.exp(1j * fx.u0 * f.times)
    return f.with_samples(x)


def _time_shift_wd_phases(lam: ParamSet, t0: float, t, nu):
    A, B, C, D, E = lam.as_tuple()
    delta = (A + C) * t0 / B
    derived = np.exp(
        1j * (_phi(lam, nu) - _phi(lam, nu + delta) + (C - A) * (2 * t - t0) * t0 + (E - D) * t0)
    )
    printed = (
        np.exp(1j * (C - A) * (2 * t - t0) * t0)
        * np.exp(1j * (2 * nu + delta) * ((C * C - A * A) / B * t0))
        * np.exp(1j * (E - D) * ((A + C) / B + 1) * t0)
    )
    return delta, derived, printed


def _time_shift_af_phases(lam: ParamSet, t0: float, tau, nu):
    A, B, C, D, E = lam.as_tuple()
    delta = 2 * (C - A) * t0 / B
    derived = np.exp(
        1j
        * (
            (C - A) * t0 * t0
            + (E - D) * t0
            + (C + A) * t0 * tau
            + B * nu * t0
            + _phi(lam, nu)
            - _phi(lam, nu + delta)
        )
    )
    printed = (
        np.exp(1j * ((A - C) * t0 + (A + C) * tau) * t0)
        * np.exp(1j * (C - A) ** 2 / B * (nu + (C - A) / B * t0) * 4 * t0)
        * np.exp(1j * (E - D) * (1 + (C - A) / B * 2 * t0))
    )
    return delta, derived, printed


def _freq_shift_wd_phases(lam: ParamSet, u0: float, t, nu):
    A, B, C, D, E = lam.as_tuple()
    d = u0 / B
    base = (C - A) * (d + 2 * nu) * d + (E - D) * d
    return d, np.exp(1j * base), np.exp(1j * base * t)


def _verify_shift(pid: PropertyId, fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    kind = _kind(pid)
    use_time = pid in (PropertyId.TIME_SHIFT_WD, PropertyId.TIME_SHIFT_AF) or pid.name.startswith("JOINT")
    use_freq = pid in (PropertyId.FREQ_SHIFT_WD, PropertyId.FREQ_SHIFT_AF) or pid.name.startswith("JOINT")
    t0 = fx.t0 if use_time else 0.0
    u0 = fx.u0 if use_freq else 0.0
    shifted = VerifierFixture(f, lam, t0=t0, u0=u0)
    g = _shifted_signal(shifted, use_time, use_freq)
    Wf = compute_tfd(kind, lam, f)
    Wg = compute_tfd(kind, lam, g)
    x = Wf.outer_axis[:, None]
    nu = Wf.freq_axis[None, :]
    rows = _time_steps(shifted) if not kind.is_ambiguity else 0

    if kind is TFKind.AQWD:
        dt_, ph_t_der, ph_t_pr = _time_shift_wd_phases(lam, t0, x, nu)
        du, ph_u_der, ph_u_hdr = _freq_shift_wd_phases(lam, u0, x, nu)
        if pid is PropertyId.TIME_SHIFT_WD:
            cols = _col_shift(dt_, Wf)
            phases = {"printed": ph_t_pr, "derived": ph_t_der}
        elif pid is PropertyId.FREQ_SHIFT_WD:
            cols = _col_shift(du, Wf)
            phases = {"printed-header": ph_u_hdr, "derivation": ph_u_der}
        else:
            cols = _col_shift(dt_ + du, Wf)
            A, C = lam.a, lam.c
            total = dt_ + du
            composed = np.exp(
                1j
                * (
                    _phi(lam, nu)
                    - _phi(lam, nu + total)
                    + (C - A) * (2 * x - t0) * t0
                    + (lam.e - lam.d) * t0
                )
            )
            phases = {"printed": ph_t_pr * ph_u_der, "derived": composed}
    else:
        dt_, ph_t_der, ph_t_pr = _time_shift_af_phases(lam, t0, x, nu)
        mod = np.exp(1j * u0 * x) * np.ones_like(nu)
        cols = _col_shift(dt_, Wf) if t0 else 0
        if pid is PropertyId.FREQ_SHIFT_AF:
            phases = {"printed": mod}
        elif pid is PropertyId.TIME_SHIFT_AF:
            phases = {"printed": ph_t_pr, "derived": ph_t_der}
        else:
            phases = {"printed": ph_t_pr * mod, "derived": ph_t_der * mod}

    base, mask = _shifted_view(Wf.values, rows, cols)
    variants = {label: (ph * base, mask) for label, ph in phases.items()}
    return _report(pid, Wg.values, variants, _meta(f))


# ----------------------------------------------------- re-indexing identities


def _verify_conj(pid: PropertyId, fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    if pid is PropertyId.CONJ_WD:
        W = compute_tfd(TFKind.AQWD, lam, f)
        lhs = np.conj(W.values)
        Wh = compute_tfd(TFKind.AQWD, apply_map(ParamMap.HAT, lam), f).values
        cols = _mirror_index(W.shape[1], False)
        flipped, fmask = _flip(Wh, None, cols)
        variants = {
            "printed": (-flipped, fmask),
            "derivation": (-Wh, _full(W.shape)),
            "sign-corrected": (Wh, _full(W.shape)),
        }
    else:
        A = compute_tfd(TFKind.AQAF, lam, f)
        lhs = np.conj(A.values)
        At = compute_tfd(TFKind.AQAF, apply_map(ParamMap.TILDE, lam), f).values
        rows = _mirror_index(A.shape[0], False)
        cols = _mirror_index(A.shape[1], False)
        both, bmask = _flip(At, rows, cols)
        lag_only, lmask = _flip(At, rows, None)
        variants = {"printed": (both, bmask), "derivation": (lag_only, lmask)}
    return _report(pid, lhs, variants, _meta(f))


def _verify_symm(pid: PropertyId, fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    if not _is_symmetric_grid(f):
        raise AlignmentError("symmetry check needs a grid symmetric about t = 0")
    kind = _kind(pid)
    reversed_f = f.with_samples(f.samples[::-1])
    lhs = compute_tfd(kind, lam, reversed_f).values
    W = compute_tfd(kind, lam, f).values
    Wt = compute_tfd(kind, apply_map(ParamMap.TILDE, lam), f).values
    Wr = compute_tfd(kind, apply_map(ParamMap.REFLECT, lam), f).values
    rows = _mirror_index(W.shape[0], not kind.is_ambiguity)
    cols = _mirror_index(W.shape[1], False)
    variants = {
        "printed": _flip(W, rows, cols),
        "derivation": _flip(Wt, rows, None),
        "reflected": _flip(Wr, rows, cols),
    }
    return _report(pid, lhs, variants, _meta(f))


# -------------------------------------------------------- quadrature identities


def _f_at(fx: VerifierFixture, t) -> np.ndarray:
    """f at arbitrary times: analytic if available, else exact grid samples."""
    t = np.asarray(t, dtype=float)
    if fx.f_exact is not None:
        return np.asarray(fx.f_exact(t), dtype=complex)
    f = fx.f
    idx = (t - f.t0) / f.dt
    k = np.round(idx)
    if np.any(np.abs(idx - k) > 1e-9):
        raise PreconditionError("identity needs f between samples; supply f_exact")
    k = k.astype(int)
    out = np.zeros(t.shape, dtype=complex)
    ok = (k >= 0) & (k < f.n)
    out[ok] = f.samples[k[ok]]
    return out


def _verify_marginal(pid: PropertyId, fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    if pid is PropertyId.MARGINAL_WD:
        W = compute_tfd(TFKind.AQWD, lam, f)
        lhs = W.values.sum(axis=0) * f.dt
        nu = W.freq_axis
        rhs = 2 * math.pi * qpft_forward(lam, f, nu) * np.conj(
            qpft_forward(apply_map(ParamMap.PRIME_WD_MARGINAL, lam), f, nu)
        )
        variants = {"printed": (rhs, _full(nu.shape))}
    else:
        A = compute_tfd(TFKind.AQAF, lam, f)
        lhs = A.values.sum(axis=0) * 2 * f.dt
        nu = A.freq_axis
        printed = 4 * math.pi * qpft_forward(apply_map(ParamMap.PRIME_AF_MARGINAL, lam), f, nu) * np.conj(
            qpft_forward(apply_map(ParamMap.DOUBLEPRIME_AF_MARGINAL, lam), f, nu)
        )
        # the two half-B kernels multiply to -iB where |B| is needed
        corrected = printed * 1j * math.copysign(1.0, lam.b)
        variants = {
            "printed": (printed, _full(nu.shape)),
            "unit-phase-corrected": (corrected, _full(nu.shape)),
        }
    return _report(pid, lhs, variants, _meta(f))


def _verify_energy_marginal(fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    W = compute_tfd(TFKind.AQWD, lam, f)
    t = W.outer_axis[:, None]
    nu = W.freq_axis[None, :]
    A, B, C, D, E = lam.as_tuple()
    lhs = np.abs(f.samples) ** 2
    printed_phase = np.exp(-1j * ((A - C) * (nu**2 + t**2) + (D - E) * (nu + t)))
    derived_phase = np.exp(-1j * ((A - C) * (nu**2 - t**2) + (D - E) * (nu - t)))
    s_printed = (printed_phase * W.values).sum(axis=1) * W.dnu
    s_derived = (derived_phase * W.values).sum(axis=1) * W.dnu
    full = _full(lhs.shape)
    variants = {
        "printed": (s_printed / (2 * math.pi * abs(B)), full),
        "phase-corrected": (s_derived / (2 * math.pi * abs(B)), full),
        "derived": (s_derived / (2 * math.pi), full),
    }
    return _report(PropertyId.ENERGY_MARGINAL, lhs, variants, _meta(f))


def _lag_product_exact(fx: VerifierFixture, tau) -> np.ndarray:
    return _f_at(fx, tau / 2) * np.conj(_f_at(fx, -tau / 2))


def _verify_af_slice(fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    Amap = compute_tfd(TFKind.AQAF, lam, f)
    tau = Amap.outer_axis[:, None]
    nu = Amap.freq_axis[None, :]
    A, B, C, D, E = lam.as_tuple()
    lhs = _lag_product_exact(fx, Amap.outer_axis)
    bracket = (A - C) * (nu**2 - tau**2 / 4) + (D - E) * nu + (D + E) * tau / 2
    printed = (np.exp(1j * bracket) * Amap.values).sum(axis=1) * Amap.dnu / (2 * math.pi * abs(B))
    derived = (np.exp(-1j * bracket) * Amap.values).sum(axis=1) * Amap.dnu / (2 * math.pi)
    full = _full(lhs.shape)
    variants = {"printed": (printed, full), "derived": (derived, full)}
    return _report(PropertyId.AF_SLICE, lhs, variants, _meta(f))


def _verify_moyal(pid: PropertyId, fx: VerifierFixture) -> ResidualReport:
    if fx.g is None:
        raise ValueError("Moyal check needs a second signal g")
    lam, f, g = fx.lam, fx.f, fx.g
    kind = _kind(pid)
    Wf = compute_tfd(kind, lam, f)
    Wg = compute_tfd(kind, lam, g)
    step = 2 * f.dt if kind.is_ambiguity else f.dt
    lhs = np.sum(Wf.values * np.conj(Wg.values)) * step * Wf.dnu
    ip = abs(inner_product(f, g)) ** 2
    one = np.ones(1, dtype=bool)
    variants = {
        "2*pi*B": (np.array([2 * math.pi * lam.b * ip]), one),
        "2*pi*|B|": (np.array([2 * math.pi * abs(lam.b) * ip]), one),
    }
    return _report(pid, np.array([lhs]), variants, _meta(f))


def reconstruct_from_aqwd(W: TFMap, f0_conj: complex, lam: ParamSet) -> Signal:
    """Recover ``f(2t)`` from the rows of an AQWD map.

    ``f(2t) = exp(-i[C(2t)^2 + E(2t)]) / (2 pi f*(0))
    * sum_k exp(-i phi(nu_k)) W[t, k] exp(-2i B nu_k t) dnu``,
    with ``phi(nu) = (A-C) nu^2 + (D-E) nu``.  The result lives on the grid
    with start ``2 t0`` and step ``2 dt``.
    """
    if W.kind is not TFKind.AQWD:
        raise ValueError(f"expected an AQWD map, got {W.kind.name}")
    if f0_conj == 0:
        raise PreconditionError("reconstruction needs f(0) != 0")
    A, B, C, D, E = lam.as_tuple()
    t = W.outer_axis
    nu = W.freq_axis
    kern = np.exp(-1j * (_phi(lam, nu)[None, :] + 2 * B * np.outer(t, nu)))
    s = (kern * W.values).sum(axis=1) * W.dnu
    x = np.exp(-1j * (C * (2 * t) ** 2 + E * (2 * t))) * s / (2 * math.pi * f0_conj)
    return Signal(x, 2 * t[0], 2 * (t[1] - t[0]))


def reconstruct_from_aqaf(Amap: TFMap, lam: ParamSet) -> np.ndarray:
    """Recover ``f(tau/2) conj(f(-tau/2))`` for each lag row of an AQAF map."""
    if Amap.kind is not TFKind.AQAF:
        raise ValueError(f"expected an AQAF map, got {Amap.kind.name}")
    A, B, C, D, E = lam.as_tuple()
    tau = Amap.outer_axis
    nu = Amap.freq_axis
    s = (np.exp(-1j * _phi(lam, nu))[None, :] * Amap.values).sum(axis=1) * Amap.dnu
    chirp = np.exp(-1j * ((C - A) * tau * tau / 4 + (E + D) * tau / 2))
    return chirp * s / (2 * math.pi)


def _verify_recon(pid: PropertyId, fx: VerifierFixture) -> ResidualReport:
    lam, f = fx.lam, fx.f
    B = abs(lam.b)
    if pid is PropertyId.RECON_WD:
        f0 = complex(_f_at(fx, np.array(0.0)))
        W = compute_tfd(TFKind.AQWD, lam, f)
        rec = reconstruct_from_aqwd(W, np.conj(f0), lam)
        inside = np.abs(rec.times) <= max(abs(f.t0), abs(f.times[-1])) + 1e-12
        lhs = _f_at(fx, rec.times[inside])
        est = rec.samples[inside]
    else:
        Amap = compute_tfd(TFKind.AQAF, lam, f)
        est = reconstruct_from_aqaf(Amap, lam)
        lhs = _lag_product_exact(fx, Amap.outer_axis)
    full = _full(lhs.shape)
    variants = {"printed": (est / B, full), "derived": (est, full)}
    return _report(pid, lhs, variants, _meta(f))


def verify_property(pid: PropertyId, fixture: VerifierFixture) -> ResidualReport:
    """Evaluate both sides of identity ``pid`` on ``fixture``'s grid."""
    if pid in SHIFT_PROPERTIES:
        return _verify_shift(pid, fixture)
    if pid in (PropertyId.CONJ_WD, PropertyId.CONJ_AF):
        return _verify_conj(pid, fixture)
    if pid in (PropertyId.SYMM_WD, PropertyId.SYMM_AF):
        return _verify_symm(pid, fixture)
    if pid in (PropertyId.MARGINAL_WD, PropertyId.MARGINAL_AF):
        return _verify_marginal(pid, fixture)
    if pid is PropertyId.ENERGY_MARGINAL:
        return _verify_energy_marginal(fixture)
    if pid is PropertyId.AF_SLICE:
        return _verify_af_slice(fixture)
    if pid in (PropertyId.MOYAL_WD, PropertyId.MOYAL_AF):
        return _verify_moyal(pid, fixture)
    return _verify_recon(pid, fixture)


# ------------------------------------------------------------------ fixtures


def aligned_fixture(
    lam: ParamSet,
    n: int = 128,
    shift_samples: int = 3,
    freq_bins: int = 2,
    seed: int = 0,
) -> VerifierFixture:
    """Random compactly supported signal on a grid where every shift is exact.

    With ``dt = sqrt(pi / n)`` the frequency offsets induced by a time shift of
    ``s`` samples are ``(A+C) s`` AQWD bins and ``(C-A) s`` AQAF bins, so ``A``
    and ``C`` must be integers.  ``u0`` moves the AQWD by ``freq_bins`` bins.
    """
    for name, v in (("A", lam.a), ("C", lam.c)):
        if v != round(v):
            raise AlignmentError(f"aligned fixtures need integer {name}, got {v}")
    pad = abs(shift_samples) + 1
    if n < 8 + 2 * pad:
        raise ValueError("grid too small for the requested shift")
    dt = math.sqrt(math.pi / n)
    t0 = -0.5 * (n - 1) * dt
    rng = np.random.default_rng(seed)
    x = np.zeros(n, dtype=complex)
    x[pad : n - pad] = rng.standard_normal(n - 2 * pad) + 1j * rng.standard_normal(n - 2 * pad)
    f = Signal(x, t0, dt)
    dnu_wd = math.pi / (n * dt * abs(lam.b))
    u0 = freq_bins * lam.b * dnu_wd
    return VerifierFixture(f, lam, t0=shift_samples * dt, u0=u0)


def gaussian_fixture(
    lam: ParamSet,
    n: int = 1024,
    half_support: float = 20.0,
    centers: tuple[float, float] = (0.0, 4.0),
    g_centers: Optional[tuple[float, float]] = None,
) -> VerifierFixture:
    exact = gaussian_pair(centers)
    f = sample_function(exact, half_support, n)
    g = f if g_centers is None else sample_function(gaussian_pair(g_centers), half_support, n)
    return VerifierFixture(f, lam, g=g, f_exact=exact)


REFERENCE_SHIFT_PARAMS = (
    ParamSet(1, -2, 1, 2, 1),
    ParamSet(0, -1, 0, 2, 2),
    ParamSet(2, -1.5, -1, 0.5, -0.3),
)
REFERENCE_QUADRATURE_PARAMS = (ParamSet(0, -1, 0, 2, 2), ParamSet(1, -2, 1, 2, 1))


def run_all(n: int = 1024, half_support: float = 20.0) -> list[ResidualReport]:
    """Every identity on the reference fixtures.  Exact identities use a
    128-sample aligned fixture; quadrature identities use ``n`` samples."""
    out = []
    for lam in REFERENCE_SHIFT_PARAMS:
        fx = aligned_fixture(lam)
        for pid in SHIFT_PROPERTIES + REINDEX_PROPERTIES:
            out.append(verify_property(pid, fx))
    for lam in REFERENCE_QUADRATURE_PARAMS:
        fx = gaussian_fixture(lam, n=n, half_support=half_support)
        for pid in QUADRATURE_PROPERTIES:
            out.append(verify_property(pid, fx))
    return out
