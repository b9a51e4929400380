"""Exception types raised by gapwave."""


class GapwaveError(Exception):
    """Base class for all domain errors raised by this package."""


class DegenerateGeometryError(GapwaveError, ValueError):
    """The strip closes (or inverts) the guide cross-section."""


class EvanescentModeError(GapwaveError, ValueError):
    """A cross-section is at or below the TE10 cutoff at the requested frequency.

    ``section`` holds the index of the offending section when raised from a
    cascade, ``frequency`` the offending frequency in Hz when known.
    """

    def __init__(self, message, *, frequency=None, section=None, deflection=None):
        super().__init__(message)
        self.frequency = frequency
        self.section = section
        self.deflection = deflection


class QuadratureError(GapwaveError, RuntimeError):
    """Requested tolerance not reached within the subdivision budget."""


class InfeasibleTargetError(GapwaveError, ValueError):
    """A phase target exceeds what the geometry can deliver.

    ``max_phase_deg`` carries the achievable maximum.
    """

    def __init__(self, message, max_phase_deg):
        super().__init__(message)
        self.max_phase_deg = max_phase_deg


class ConfigError(GapwaveError, ValueError):
    """Invalid configuration document. ``path`` is the dotted key path."""

    def __init__(self, message, path=""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
