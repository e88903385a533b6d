"""Desk-scale recipes for the published figures.

Each recipe returns ``[(name, TFMap), ...]``; the CLI writes a CSV and a PGM
per entry.  Noise is seeded, so a recipe is a pure function of its arguments.
"""

from __future__ import annotations

from typing import Callable, Optional

from .qpft import ParamSet
from .signals import LFMComponent, add_awgn, make_gaussian_pair, make_lfm, make_multicomponent
from .tfd import TFKind, compute_tfd

R_COMPONENT = LFMComponent(1.0, 0.1, 0.2)
U_COMPONENTS = (LFMComponent(1.0, 0.1, 0.2), LFMComponent(1.0, 0.3, 0.2))

FIG5_PARAMS = ParamSet(0, -1, 0, 2, 2)
MONO_QPFT_PARAMS = ParamSet(0, -2, 1, 2, 1)
MONO_ADVANCED_PARAMS = ParamSet(1, -2, 1, 2, 1)
BI_QPFT_PARAMS = ParamSet(0, -2, 1, 0, 1)
BI_ADVANCED_PARAMS = (ParamSet(-2, 1, 1, -2, 1), ParamSet(0, -2, 1, 0, 1))

DEFAULTS = dict(n=1024, half_support=10.0, seed=0)


def _label(kind: TFKind, lam: Optional[ParamSet]) -> str:
    if lam is None:
        return kind.value
    tag = "_".join(f"{v:g}" for v in lam.as_tuple()).replace("-", "m").replace(".", "p")
    return f"{kind.value}_{tag}"


def _snr_tag(snr: float) -> str:
    return f"snr{snr:g}".replace("-", "m")


def _noise_series(kind: TFKind, name: str, n, half_support, seed):
    r = make_lfm(R_COMPONENT, half_support, n)
    out = []
    for snr in (5.0, 10.0, -5.0):
        W = compute_tfd(kind, FIG5_PARAMS, add_awgn(r, snr, seed))
        out.append((f"{name}_{kind.value}_{_snr_tag(snr)}", W))
    return out


def fig5(n=1024, half_support=10.0, seed=0, lam=None):
    """AQWD of r(t) at 5, 10 and -5 dB."""
    return _noise_series(TFKind.AQWD, "fig5", n, half_support, seed)


def fig7(n=1024, half_support=10.0, seed=0, lam=None):
    """AQAF of r(t) at 5, 10 and -5 dB."""
    return _noise_series(TFKind.AQAF, "fig7", n, half_support, seed)


def _comparison(name, family, signal, snr, seed, qpft_params, advanced_params):
    noisy = add_awgn(signal, snr, seed)
    classical, qpft_kind, adv_kind = family
    out = [(f"{name}_{classical.value}", compute_tfd(classical, None, noisy))]
    out.append((f"{name}_{_label(qpft_kind, qpft_params)}", compute_tfd(qpft_kind, qpft_params, noisy)))
    for lam in advanced_params:
        out.append((f"{name}_{_label(adv_kind, lam)}", compute_tfd(adv_kind, lam, noisy)))
    return out


WD_FAMILY = (TFKind.WD, TFKind.QWD, TFKind.AQWD)
AF_FAMILY = (TFKind.AF, TFKind.QAF, TFKind.AQAF)


def fig6(n=1024, half_support=10.0, seed=0, lam=None):
    """WD, QWD and AQWD of r(t) at 10 dB."""
    r = make_lfm(R_COMPONENT, half_support, n)
    return _comparison("fig6", WD_FAMILY, r, 10.0, seed, MONO_QPFT_PARAMS, (MONO_ADVANCED_PARAMS,))


def fig8(n=1024, half_support=10.0, seed=0, lam=None):
    """AF, QAF and AQAF of r(t) at 10 dB."""
    r = make_lfm(R_COMPONENT, half_support, n)
    return _comparison("fig8", AF_FAMILY, r, 10.0, seed, MONO_QPFT_PARAMS, (MONO_ADVANCED_PARAMS,))


def fig11(n=1024, half_support=10.0, seed=0, lam=None):
    """WD, QWD and AQWD of u(t) at 5 dB, with the parameter sets of fig12."""
    u = make_multicomponent(U_COMPONENTS, half_support, n)
    return _comparison("fig11", WD_FAMILY, u, 5.0, seed, BI_QPFT_PARAMS, BI_ADVANCED_PARAMS)


def fig12(n=1024, half_support=10.0, seed=0, lam=None):
    """AF, QAF and AQAF of u(t) at 5 dB."""
    u = make_multicomponent(U_COMPONENTS, half_support, n)
    return _comparison("fig12", AF_FAMILY, u, 5.0, seed, BI_QPFT_PARAMS, BI_ADVANCED_PARAMS)


def fig1_gaussian(n=1024, half_support=10.0, seed=0, lam=None):
    """WD/AQWD and AF/AQAF of the Gaussian pair centred at 0 and 4."""
    if lam is None:
        raise ValueError("fig1-gaussian needs an explicit parameter set")
    f = make_gaussian_pair((0.0, 4.0), half_support, n)
    return [
        ("fig1_wd", compute_tfd(TFKind.WD, None, f)),
        (f"fig1_{_label(TFKind.AQWD, lam)}", compute_tfd(TFKind.AQWD, lam, f)),
        ("fig2_af", compute_tfd(TFKind.AF, None, f)),
        (f"fig2_{_label(TFKind.AQAF, lam)}", compute_tfd(TFKind.AQAF, lam, f)),
    ]


RECIPES: dict[str, Callable] = {
    "fig1-gaussian": fig1_gaussian,
    "fig5": fig5,
    "fig6": fig6,
    "fig7": fig7,
    "fig8": fig8,
    "fig11": fig11,
    "fig12": fig12,
}
