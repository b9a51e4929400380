"""Cross-section geometry and TE10 dispersion of the strip-narrowed guide.

All quantities are SI: metres, hertz, radians, ohms.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.constants import c as C0, mu_0 as MU0, physical_constants

from .errors import DegenerateGeometryError, EvanescentModeError

ETA0 = physical_constants["characteristic impedance of vacuum"][0]

# radicand slack so a section sitting exactly on cutoff (up to rounding) reads as beta = 0
_CUTOFF_SLACK = 1e-12


@dataclass(frozen=True)
class FrequencyBand:
    f_low: float
    f_high: float

    def __post_init__(self):
        if not 0 < self.f_low < self.f_high:
            raise ValueError(
                f"band requires 0 < f_low < f_high, got {self.f_low!r}, {self.f_high!r}")

    @property
    def center(self) -> float:
        return 0.5 * (self.f_low + self.f_high)

    def grid(self, n: int) -> np.ndarray:
        """Uniform, endpoint-inclusive frequency grid of ``n`` points."""
        if n < 1:
            raise ValueError("n must be >= 1")
        if n == 1:
            return np.array([self.f_low])
        return np.linspace(self.f_low, self.f_high, n)


@dataclass(frozen=True)
class WaveguideSpec:
    """Host rectangular guide: broad-wall width (m) and operating band."""

    broad_wall_width: float
    band: FrequencyBand

    def __post_init__(self):
        if not self.broad_wall_width > 0:
            raise ValueError("broad_wall_width > 0 violated")
        fc = cutoff_frequency(self.broad_wall_width)
        if not self.band.f_low > fc:
            raise ValueError(
                f"band.f_low > cutoff_frequency(broad_wall_width) violated: "
                f"{self.band.f_low / 1e9:.6g} GHz <= {fc / 1e9:.6g} GHz")


@dataclass(frozen=True)
class EllipticalStripProfile:
    """Elliptical strip contour.

    ``a_e`` is the semi-major axis (half the tunable length) and ``b_e`` the
    semi-minor axis, i.e. the peak intrusion of the strip into the guide.
    """

    a_e: float
    b_e: float

    def __post_init__(self):
        if not self.a_e > 0:
            raise ValueError("a_e > 0 violated")
        if not self.b_e >= 0:
            raise ValueError("b_e >= 0 violated")


def strip_height(x, profile: EllipticalStripProfile):
    """Intrusion h_e(x) of the strip at axial position ``x``; zero outside |x| <= a_e."""
    x = np.asarray(x, dtype=float)
    u = x / profile.a_e
    h = profile.b_e * np.sqrt(np.clip(1.0 - u * u, 0.0, None))
    return h if h.ndim else float(h)


def effective_width(x, profile: EllipticalStripProfile, guide: WaveguideSpec):
    """Broad-wall width left open by the strip at ``x``."""
    w = guide.broad_wall_width - np.asarray(strip_height(x, profile))
    if np.any(w <= 0):
        raise DegenerateGeometryError(
            f"strip closes the guide: b_e={profile.b_e!r} m >= width "
            f"{guide.broad_wall_width!r} m")
    return w if w.ndim else float(w)


def cutoff_frequency(width):
    """TE10 cutoff c / (2 width)."""
    width = np.asarray(width, dtype=float)
    if np.any(width <= 0):
        raise DegenerateGeometryError("cutoff_frequency needs width > 0")
    fc = C0 / (2.0 * width)
    return fc if fc.ndim else float(fc)


def _radicand(width, f):
    width = np.asarray(width, dtype=float)
    f = np.asarray(f, dtype=float)
    if np.any(width <= 0):
        raise DegenerateGeometryError("width must be positive")
    if np.any(f <= 0):
        raise ValueError("frequency must be positive")
    ratio = C0 / (2.0 * width * f)
    rad = 1.0 - ratio * ratio
    if np.any(rad < -_CUTOFF_SLACK):
        bad = np.broadcast_to(rad < -_CUTOFF_SLACK, rad.shape)
        fb = np.broadcast_to(f, rad.shape)[bad].flat[0]
        wb = np.broadcast_to(width, rad.shape)[bad].flat[0]
        raise EvanescentModeError(
            f"TE10 is below cutoff: width {wb * 1e3:.6g} mm cuts off at "
            f"{C0 / (2 * wb) / 1e9:.6g} GHz > {fb / 1e9:.6g} GHz",
            frequency=float(fb))
    return np.clip(rad, 0.0, None), f


def guided_beta(width, f):
    """TE10 phase constant (rad/m) of a guide of broad-wall ``width`` at ``f``.

    Exactly at cutoff this returns 0; below it raises EvanescentModeError.
    Broadcasts over array inputs.
    """
    rad, f = _radicand(width, f)
    beta = 2.0 * np.pi * f / C0 * np.sqrt(rad)
    return beta if beta.ndim else float(beta)


def te10_wave_impedance(width, f):
    """TE10 field impedance 2 pi f mu0 / beta (ohms)."""
    beta = np.asarray(guided_beta(width, f))
    if np.any(beta <= 0):
        raise EvanescentModeError("wave impedance diverges at cutoff",
                                  frequency=float(np.max(f)))
    z = 2.0 * np.pi * np.asarray(f, dtype=float) * MU0 / beta
    return z if z.ndim else float(z)

