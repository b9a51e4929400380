"""Accumulated and differential phase along the elliptically narrowed section."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._parallel import pmap
from .errors import DegenerateGeometryError, EvanescentModeError
from .physics import (
    EllipticalStripProfile,
    FrequencyBand,
    WaveguideSpec,
    cutoff_frequency,
    effective_width,
    guided_beta,
)
from .quadrature import QuadratureSpec, integrate


@dataclass(frozen=True)
class PhaseSweep:
    """Differential phase table, ``phase_shift_deg[i, j]`` for deflection i, frequency j."""

    frequencies: np.ndarray
    deflections: np.ndarray
    phase_shift_deg: np.ndarray

    def row(self, b_e: float) -> np.ndarray:
        idx = np.flatnonzero(self.deflections == b_e)
        if idx.size == 0:
            raise KeyError(f"deflection {b_e!r} not in sweep")
        return self.phase_shift_deg[idx[0]]


def _check_propagates(profile, guide, f):
    if profile.b_e >= guide.broad_wall_width:
        raise DegenerateGeometryError(
            f"b_e={profile.b_e * 1e3:.6g} mm closes the {guide.broad_wall_width * 1e3:.6g} mm guide")
    # the apex is the narrowest cross-section
    apex = guide.broad_wall_width - profile.b_e
    fc = cutoff_frequency(apex)
    if f < fc * (1.0 - 1e-12):
        raise EvanescentModeError(
            f"apex width {apex * 1e3:.6g} mm is below cutoff at {f / 1e9:.6g} GHz "
            f"(cutoff {fc / 1e9:.6g} GHz)",
            frequency=f, deflection=profile.b_e)


def total_phase(profile: EllipticalStripProfile, guide: WaveguideSpec, f: float,
                quad: QuadratureSpec | None = None) -> float:
    """Integral of the local TE10 phase constant over [-a_e, a_e], in radians."""
    _check_propagates(profile, guide, f)
    a = profile.a_e
    if profile.b_e == 0:
        return guided_beta(guide.broad_wall_width, f) * 2.0 * a

    def integrand(x):
        return guided_beta(effective_width(x, profile, guide), f)

    return integrate(integrand, -a, a, quad)


def phase_shift(b_e: float, profile_a_e: float, guide: WaveguideSpec, f: float,
                quad: QuadratureSpec | None = None) -> float:
    """Phase shift in degrees of deflection ``b_e`` relative to the flat strip.

    Positive, because narrowing the guide lowers the phase constant. The
    integrand is the local drop in phase constant, beta(w) - beta(w - h_e(x)),
    which equals total_phase(flat) - total_phase(bent) without the
    cancellation of subtracting two large totals.
    """
    profile = EllipticalStripProfile(profile_a_e, b_e)
    _check_propagates(profile, guide, f)
    if b_e == 0:
        return 0.0
    beta_ref = guided_beta(guide.broad_wall_width, f)

    def integrand(x):
        return beta_ref - guided_beta(effective_width(x, profile, guide), f)

    a = profile.a_e
    return float(np.degrees(integrate(integrand, -a, a, quad)))


def phase_sweep(a_e: float, guide: WaveguideSpec, deflections, band: FrequencyBand,
                n_freq: int, quad: QuadratureSpec | None = None) -> PhaseSweep:
    deflections = np.asarray(deflections, dtype=float)
    if deflections.ndim != 1 or deflections.size == 0:
        raise ValueError("deflections must be a non-empty 1-D sequence")
    if np.any(np.diff(deflections) <= 0):
        raise ValueError("deflections must be strictly increasing")
    freqs = band.grid(n_freq)

    def cell(ij):
        i, j = ij
        b, f = deflections[i], freqs[j]
        try:
            return phase_shift(b, a_e, guide, f, quad)
        except EvanescentModeError as exc:
            raise EvanescentModeError(
                f"at b_e={b * 1e3:.6g} mm, f={f / 1e9:.6g} GHz: {exc}",
                frequency=f, deflection=b) from exc

    cells = [(i, j) for i in range(deflections.size) for j in range(freqs.size)]
    values = np.array(pmap(cell, cells)).reshape(deflections.size, freqs.size)
    return PhaseSweep(freqs, deflections, values)


def dispersion_metric(row) -> float:
    """Spread of a phase row over the band, (max - min) / mean."""
    row = np.asarray(row, dtype=float)
    if row.size == 0:
        raise ValueError("dispersion_metric of an empty row")
    mean = row.mean()
    if mean == 0:
        raise ValueError("dispersion_metric undefined for a zero-mean row")
    return float((row.max() - row.min()) / mean)
