"""Staircase transfer-matrix model of the tapered section.

Each uniform section is a length of TE10 line; adjacent sections meet at an
ideal impedance step. Waves are power-normalised to the local TE10 field
impedance, so a step between equal widths is exactly the identity and a
uniform guide reflects exactly nothing. Time convention e^{+j omega t}.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._parallel import pmap
from .errors import EvanescentModeError
from .physics import (
    EllipticalStripProfile,
    FrequencyBand,
    WaveguideSpec,
    effective_width,
    guided_beta,
    te10_wave_impedance,
)


@dataclass(frozen=True)
class UniformSection:
    width: float
    length: float

    def __post_init__(self):
        if not self.width > 0:
            raise ValueError("width > 0 violated")
        if not self.length > 0:
            raise ValueError("length > 0 violated")


@dataclass(frozen=True)
class SectionCascade:
    sections: tuple
    port_width: float

    def __post_init__(self):
        if not self.sections:
            raise ValueError("cascade needs at least one section")
        if not self.port_width > 0:
            raise ValueError("port_width > 0 violated")

    @property
    def widths(self) -> np.ndarray:
        return np.array([s.width for s in self.sections])

    @property
    def lengths(self) -> np.ndarray:
        return np.array([s.length for s in self.sections])


@dataclass(frozen=True)
class TwoPortS:
    s11: complex
    s21: complex
    s12: complex
    s22: complex

    def matrix(self) -> np.ndarray:
        return np.array([[self.s11, self.s12], [self.s21, self.s22]])


def discretize_profile(profile: EllipticalStripProfile, guide: WaveguideSpec,
                       n: int) -> SectionCascade:
    """Split [-a_e, a_e] into ``n`` equal sections, each at its midpoint width."""
    if int(n) != n or n < 1:
        raise ValueError("n >= 1 required")
    n = int(n)
    a = profile.a_e
    length = 2.0 * a / n
    mids = -a + (np.arange(n) + 0.5) * length
    # average mirrored samples so the width list is palindromic to the last bit
    widths = np.asarray(effective_width(mids, profile, guide), dtype=float)
    widths = 0.5 * (widths + widths[::-1])
    return SectionCascade(tuple(UniformSection(float(w), length) for w in widths),
                          guide.broad_wall_width)


def step_coefficients(z1, z2):
    """Voltage reflection and transmission of a step from impedance z1 into z2."""
    gamma = (z2 - z1) / (z2 + z1)
    tau = 2.0 * z2 / (z2 + z1)
    return gamma, tau


def _junction(z_left, z_right):
    # maps (forward, backward) normalised amplitudes across a step, left to right
    r = np.sqrt(z_left / z_right)
    p = 0.5 * (r + 1.0 / r)
    m = 0.5 * (r - 1.0 / r)
    out = np.empty(np.shape(r) + (2, 2), dtype=complex)
    out[..., 0, 0] = p
    out[..., 0, 1] = m
    out[..., 1, 0] = m
    out[..., 1, 1] = p
    return out


def _cascade_matrix(widths, lengths, port_width, freqs):
    """Total wave-transfer matrix, shape (len(freqs), 2, 2)."""
    freqs = np.atleast_1d(np.asarray(freqs, dtype=float))
    nf = freqs.size
    z_port = np.asarray(te10_wave_impedance(port_width, freqs)).reshape(nf)
    total = np.broadcast_to(np.eye(2, dtype=complex), (nf, 2, 2)).copy()
    z_prev = z_port
    for k, (w, ell) in enumerate(zip(widths, lengths)):
        try:
            beta = np.asarray(guided_beta(w, freqs)).reshape(nf)
            z = np.asarray(te10_wave_impedance(w, freqs)).reshape(nf)
        except EvanescentModeError as exc:
            raise EvanescentModeError(f"section {k}: {exc}", section=k,
                                      frequency=exc.frequency) from exc
        if w != widths[k - 1] or k == 0:
            total = _junction(z_prev, z) @ total
        phase = np.exp(-1j * beta * ell)
        # diagonal propagation: scale rows instead of a full matmul
        total[:, 0, :] *= phase[:, None]
        total[:, 1, :] /= phase[:, None]
        z_prev = z
    return _junction(z_prev, z_port) @ total


def _to_s(m):
    m11, m12, m21, m22 = m[..., 0, 0], m[..., 0, 1], m[..., 1, 0], m[..., 1, 1]
    s11 = -m21 / m22
    s21 = (m11 * m22 - m12 * m21) / m22
    s12 = 1.0 / m22
    s22 = m12 / m22
    return s11 + 0.0, s21, s12, s22 + 0.0


def cascade_sparams(cascade: SectionCascade, f: float) -> TwoPortS:
    """S-parameters of the cascade at ``f``, referenced to the port's TE10 impedance."""
    m = _cascade_matrix(cascade.widths, cascade.lengths, cascade.port_width, f)
    s11, s21, s12, s22 = (complex(v[0]) for v in _to_s(m))
    return TwoPortS(s11, s21, s12, s22)


def sweep_sparams(profile: EllipticalStripProfile, guide: WaveguideSpec,
                  band: FrequencyBand, n_freq: int, n_sections: int = 512):
    """[(f, TwoPortS), ...] on a uniform endpoint-inclusive grid, ascending in f."""
    cascade = discretize_profile(profile, guide, n_sections)
    freqs = band.grid(n_freq)
    widths, lengths = cascade.widths, cascade.lengths

    def chunk(fs):
        try:
            return _to_s(_cascade_matrix(widths, lengths, cascade.port_width, fs))
        except EvanescentModeError as exc:
            raise EvanescentModeError(f"at {exc.frequency / 1e9:.6g} GHz, {exc}",
                                      frequency=exc.frequency, section=exc.section) from exc

    chunks = np.array_split(freqs, max(1, min(len(freqs), 8)))
    out = []
    for fs, (s11, s21, s12, s22) in zip(chunks, pmap(chunk, chunks)):
        out.extend((float(f), TwoPortS(complex(a), complex(b), complex(c), complex(d)))
                   for f, a, b, c, d in zip(fs, s11, s21, s12, s22))
    return out


def transmission_phase_deg(s21) -> np.ndarray:
    """arg(s21) in degrees, principal value in (-180, 180]."""
    deg = np.degrees(np.angle(np.asarray(s21)))
    return np.where(deg <= -180.0, deg + 360.0, deg)


def unwrap_deg(phase_deg) -> np.ndarray:
    return np.unwrap(np.asarray(phase_deg, dtype=float), period=360.0)


def differential_phase_deg(s21_reference, s21_deflected) -> np.ndarray:
    """Phase advance of the deflected state over the reference, unwrapped along
    the sweep, with the first point on the branch [0, 360)."""
    d = np.degrees(np.angle(np.asarray(s21_deflected) / np.asarray(s21_reference)))
    d = unwrap_deg(np.atleast_1d(d))
    return d - 360.0 * np.floor(d[0] / 360.0)


def magnitude_db(s) -> np.ndarray:
    return 20.0 * np.log10(np.abs(np.asarray(s)))
