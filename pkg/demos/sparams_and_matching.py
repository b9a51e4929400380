"""
Reflection of the tapered section
=================================

The elliptical strip is a smooth taper: the width shrinks towards the middle
and grows back to the port width. A staircase of uniform sections joined by
impedance steps gives the two-port S-parameters, which can be written as
Touchstone.
"""

import numpy as np

from gapwave import (
    EllipticalStripProfile,
    FrequencyBand,
    WaveguideSpec,
    differential_phase_deg,
    phase_shift,
    sweep_sparams,
)
from gapwave.io import write_touchstone
from gapwave.tmm import magnitude_db

MM, GHZ = 1e-3, 1e9

guide = WaveguideSpec(3.76 * MM, FrequencyBand(64 * GHZ, 75 * GHZ))

##############################################################################
# Worst-case reflection over the band for a few deflections.

for b in (0.3, 0.55, 0.8, 1.0):
    sweep = sweep_sparams(EllipticalStripProfile(11 * MM, b * MM), guide, guide.band, 221)
    s11 = magnitude_db([s.s11 for _, s in sweep])
    print(f"b_e = {b:.2f} mm: max |S11| = {s11.max():6.1f} dB")

##############################################################################
# The transmission phase of the cascade includes the small reflections the
# integral model leaves out; the two agree to a fraction of a degree.

flat = sweep_sparams(EllipticalStripProfile(11 * MM, 0.0), guide, guide.band, 12, 1024)
bent = sweep_sparams(EllipticalStripProfile(11 * MM, 0.55 * MM), guide, guide.band, 12, 1024)
cascade = differential_phase_deg([s.s21 for _, s in flat], [s.s21 for _, s in bent])
integral = np.array([phase_shift(0.55 * MM, 11 * MM, guide, f) for f, _ in bent])
for (f, _), a, b in zip(bent, cascade, integral):
    print(f"{f / GHZ:5.1f} GHz  cascade {a:7.2f}  integral {b:7.2f}  diff {a - b:+.3f}")

write_touchstone(bent, "prototype_b055.s2p")
