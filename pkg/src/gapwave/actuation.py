"""Screw kinematics and inversion of phase targets into screw settings."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .design import feasible_max_deflection
from .errors import InfeasibleTargetError
from .phase import phase_shift
from .physics import WaveguideSpec
from .quadrature import QuadratureSpec

M16_PITCH = 0.35e-3  # m/turn, metric M1.6 thread
PHASE_TOL_DEG = 0.01
MAX_BISECTIONS = 60


@dataclass(frozen=True)
class ScrewSpec:
    pitch: float  # m per turn
    max_turns: float

    def __post_init__(self):
        if not self.pitch > 0:
            raise ValueError("pitch > 0 violated")
        if not self.max_turns > 0:
            raise ValueError("max_turns > 0 violated")

    @classmethod
    def for_guide(cls, guide: WaveguideSpec, pitch: float = M16_PITCH,
                  cutoff_margin: float = 0.0) -> "ScrewSpec":
        """Travel limited by cutoff at the guide's lowest band frequency."""
        b_max = feasible_max_deflection(guide, guide.band.f_low, cutoff_margin)
        if b_max <= 0:
            raise ValueError("guide leaves no room for the strip to deflect")
        return cls(pitch, b_max / pitch)


@dataclass(frozen=True)
class Setting:
    turns: float
    b_e: float
    phase_shift_deg: float
    frequency: float


def turns_to_deflection(turns: float, screw: ScrewSpec) -> float:
    if not 0 <= turns <= screw.max_turns:
        raise ValueError(f"turns must lie in [0, {screw.max_turns:.6g}], got {turns!r}")
    return turns * screw.pitch


def deflection_to_turns(b_e: float, screw: ScrewSpec) -> float:
    if b_e < 0:
        raise ValueError("b_e >= 0 required")
    turns = b_e / screw.pitch
    if turns > screw.max_turns:
        raise ValueError(f"{turns:.6g} turns exceeds max_turns={screw.max_turns:.6g}")
    return turns


def _max_deflection(f, guide, screw):
    # cutoff limit taken at the lower of f and the band edge
    f_limit = min(f, guide.band.f_low)
    return min(screw.max_turns * screw.pitch, feasible_max_deflection(guide, f_limit))


def solve_setting(target_phase: float, f: float, a_e: float, guide: WaveguideSpec,
                  screw: ScrewSpec, quad: QuadratureSpec | None = None) -> Setting:
    """Screw setting giving ``target_phase`` degrees at ``f``, by bisection on b_e."""
    if target_phase < 0:
        raise ValueError("target_phase >= 0 required")
    if target_phase == 0:
        return Setting(0.0, 0.0, 0.0, f)
    hi = _max_deflection(f, guide, screw)
    p_hi = phase_shift(hi, a_e, guide, f, quad)
    if p_hi < target_phase - PHASE_TOL_DEG:
        raise InfeasibleTargetError(
            f"{target_phase:.6g} deg unreachable at {f / 1e9:.6g} GHz; maximum is "
            f"{p_hi:.6g} deg at b_e={hi * 1e3:.6g} mm", p_hi)
    lo = 0.0
    b, p = hi, p_hi
    for _ in range(MAX_BISECTIONS):
        if abs(p - target_phase) <= PHASE_TOL_DEG:
            break
        b = 0.5 * (lo + hi)
        p = phase_shift(b, a_e, guide, f, quad)
        if p < target_phase:
            lo = b
        else:
            hi = b
    return Setting(b / screw.pitch, b, p, f)


def calibration_table(f: float, a_e: float, guide: WaveguideSpec, screw: ScrewSpec,
                      n_points: int = 11, quad: QuadratureSpec | None = None) -> list[Setting]:
    """Phase at evenly spaced screw turns from 0 to the largest usable travel."""
    if n_points < 2:
        raise ValueError("n_points >= 2 required")
    top = _max_deflection(f, guide, screw) / screw.pitch
    rows = []
    for turns in np.linspace(0.0, top, n_points):
        b = float(turns) * screw.pitch
        rows.append(Setting(float(turns), b, phase_shift(b, a_e, guide, f, quad), f))
    return rows


def mean_phase_per_turn(table: list[Setting]) -> float:
    last = table[-1]
    return last.phase_shift_deg / last.turns
