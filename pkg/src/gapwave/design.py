"""Compactness-driven design search over the strip half-length a_e."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.constants import c as C0

from ._parallel import pmap
from .phase import dispersion_metric, phase_shift
from .physics import FrequencyBand, WaveguideSpec, cutoff_frequency
from .quadrature import QuadratureSpec

GRID_POINTS = 64
REFINE_TOL = 1e-6  # m
N_DISPERSION_FREQS = 12


@dataclass(frozen=True)
class DesignTargets:
    band: FrequencyBand
    min_max_phase: float  # deg
    max_length: float  # m, bound on 2 a_e
    cutoff_margin: float = 0.0
    max_dispersion: Optional[float] = None

    def __post_init__(self):
        if self.min_max_phase < 0:
            raise ValueError("min_max_phase >= 0 violated")
        if not self.max_length > 0:
            raise ValueError("max_length > 0 violated")
        if not self.cutoff_margin >= 0:
            raise ValueError("cutoff_margin >= 0 violated")
        if self.max_dispersion is not None and not self.max_dispersion >= 0:
            raise ValueError("max_dispersion >= 0 violated")


@dataclass(frozen=True)
class DesignResult:
    a_e: float
    b_e_max: float
    achieved_phase: float  # deg at band centre
    dispersion: float
    feasible: bool


def feasible_max_deflection(guide: WaveguideSpec, f_low: float, cutoff_margin: float = 0.0) -> float:
    """Largest strip intrusion that keeps the apex (1 + margin) above TE10 cutoff at f_low."""
    if not f_low > cutoff_frequency(guide.broad_wall_width):
        raise ValueError("f_low must lie above the host guide cutoff")
    if cutoff_margin < 0:
        raise ValueError("cutoff_margin must be >= 0")
    half_wavelength = C0 / f_low / 2.0
    return max(0.0, guide.broad_wall_width - (1.0 + cutoff_margin) * half_wavelength)


def max_achievable_phase(a_e: float, guide: WaveguideSpec, f: float, f_low: float,
                         cutoff_margin: float = 0.0, quad: QuadratureSpec | None = None) -> float:
    b_max = feasible_max_deflection(guide, f_low, cutoff_margin)
    return phase_shift(b_max, a_e, guide, f, quad)


def _band_dispersion(b_e, guide, band, quad):
    if b_e == 0:
        return 0.0
    # dispersion_metric is independent of a_e, so any length will do
    row = [phase_shift(b_e, 1.0, guide, f, quad) for f in band.grid(N_DISPERSION_FREQS)]
    return dispersion_metric(row)


def search_design(targets: DesignTargets, guide: WaveguideSpec,
                  quad: QuadratureSpec | None = None) -> DesignResult:
    """Smallest a_e whose full-deflection phase at band centre meets the target.

    A 64-point grid over (0, max_length/2] brackets the answer, then a
    golden-section search on |phase - target| narrows the bracket to 1 um and
    the feasible end of the bracket is returned. Infeasible targets give
    ``feasible=False`` with the longest allowed design's numbers.
    """
    f0 = targets.band.center
    b_max = feasible_max_deflection(guide, targets.band.f_low, targets.cutoff_margin)
    dispersion = _band_dispersion(b_max, guide, targets.band, quad)
    grid = targets.max_length / 2.0 * np.arange(1, GRID_POINTS + 1) / GRID_POINTS

    def phase_at(a):
        return phase_shift(b_max, float(a), guide, f0, quad)

    phases = np.array(pmap(phase_at, grid))
    dispersion_ok = targets.max_dispersion is None or dispersion <= targets.max_dispersion
    hits = np.flatnonzero(phases >= targets.min_max_phase)
    if not dispersion_ok or hits.size == 0:
        return DesignResult(float(grid[-1]), b_max, float(phases[-1]), dispersion, False)

    k = hits[0]
    if k == 0:
        return DesignResult(float(grid[0]), b_max, float(phases[0]), dispersion, True)

    lo, hi = float(grid[k - 1]), float(grid[k])
    best_a, best_phase = hi, float(phases[k])
    gap = lambda a: abs(phase_at(a) - targets.min_max_phase)
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - invphi * (hi - lo)
    x2 = lo + invphi * (hi - lo)
    g1, g2 = gap(x1), gap(x2)
    while hi - lo > REFINE_TOL:
        if g1 < g2:
            hi, x2, g2 = x2, x1, g1
            x1 = hi - invphi * (hi - lo)
            g1 = gap(x1)
        else:
            lo, x1, g1 = x1, x2, g2
            x2 = lo + invphi * (hi - lo)
            g2 = gap(x2)
    for cand in (lo, hi):
        p = phase_at(cand)
        if p >= targets.min_max_phase and cand < best_a:
            best_a, best_phase = cand, p
    return DesignResult(best_a, b_max, best_phase, dispersion, True)
