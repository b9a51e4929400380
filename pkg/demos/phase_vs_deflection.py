"""
Phase shift and its dispersion across the band
===============================================

The strip narrows the broad wall, lowering the local TE10 phase constant.
Integrating that drop along the strip gives the phase advance relative to
the flat strip. Larger deflections buy more phase but spread it more
unevenly over the band.
"""

import numpy as np

from gapwave import FrequencyBand, WaveguideSpec, dispersion_metric, phase_sweep

MM, GHZ = 1e-3, 1e9

guide = WaveguideSpec(3.76 * MM, FrequencyBand(64 * GHZ, 75 * GHZ))
deflections = np.array([0.0, 0.2, 0.4, 0.55, 0.8, 1.0]) * MM

sweep = phase_sweep(11 * MM, guide, deflections, guide.band, n_freq=12)

##############################################################################
# One row per deflection; columns run from 64 to 75 GHz.

print("b_e [mm]  " + " ".join(f"{f / GHZ:6.1f}" for f in sweep.frequencies))
for b, row in zip(sweep.deflections, sweep.phase_shift_deg):
    print(f"{b / MM:7.2f}   " + " ".join(f"{p:6.1f}" for p in row))

##############################################################################
# Dispersion as (max - min) / mean of each row. The flat strip is skipped,
# its row is all zeros.

for b, row in zip(sweep.deflections[1:], sweep.phase_shift_deg[1:]):
    print(f"b_e = {b / MM:.2f} mm: dispersion {dispersion_metric(row):.3f}")

##############################################################################
# Plot, if matplotlib is around.

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    fig, ax = plt.subplots()
    for b, row in zip(sweep.deflections, sweep.phase_shift_deg):
        ax.plot(sweep.frequencies / GHZ, row, label=f"$b_e$ = {b / MM:.2f} mm")
    ax.set_xlabel("frequency (GHz)")
    ax.set_ylabel("phase shift (deg)")
    ax.legend()
    fig.savefig("phase_vs_deflection.png", dpi=120)
