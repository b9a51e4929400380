"""Model and design tools for strip-tuned rectangular-waveguide phase shifters.

The tunable section is a flexible strip whose elliptical contour narrows the
broad wall of a TE10 guide. Internal units are SI throughout.
"""
from .actuation import (
    M16_PITCH,
    ScrewSpec,
    Setting,
    calibration_table,
    deflection_to_turns,
    mean_phase_per_turn,
    solve_setting,
    turns_to_deflection,
)
from .design import (
    DesignResult,
    DesignTargets,
    feasible_max_deflection,
    max_achievable_phase,
    search_design,
)
from .errors import (
    ConfigError,
    DegenerateGeometryError,
    EvanescentModeError,
    GapwaveError,
    InfeasibleTargetError,
    QuadratureError,
)
from .phase import PhaseSweep, dispersion_metric, phase_shift, phase_sweep, total_phase
from .physics import (
    EllipticalStripProfile,
    FrequencyBand,
    WaveguideSpec,
    cutoff_frequency,
    effective_width,
    guided_beta,
    strip_height,
    te10_wave_impedance,
)
from .quadrature import QuadratureSpec, adaptive_simpson, fixed_gauss, integrate
from .tmm import (
    SectionCascade,
    TwoPortS,
    UniformSection,
    cascade_sparams,
    differential_phase_deg,
    discretize_profile,
    sweep_sparams,
    transmission_phase_deg,
    unwrap_deg,
)

__version__ = "0.1.0"
