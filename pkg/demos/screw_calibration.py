"""
From screw turns to phase
=========================

An M1.6 screw advances 0.35 mm per turn and pushes the strip apex by the same
amount. The usable travel ends where the apex would cut off the TE10 mode at
the bottom of the band.
"""

from gapwave import (
    FrequencyBand,
    InfeasibleTargetError,
    ScrewSpec,
    WaveguideSpec,
    calibration_table,
    mean_phase_per_turn,
    solve_setting,
)

MM, GHZ = 1e-3, 1e9

guide = WaveguideSpec(3.76 * MM, FrequencyBand(64 * GHZ, 75 * GHZ))
screw = ScrewSpec.for_guide(guide)
print(f"usable travel: {screw.max_turns:.3f} turns ({screw.max_turns * screw.pitch / MM:.4f} mm)")

##############################################################################
# Calibration table at mid-band.

table = calibration_table(69.5 * GHZ, 11 * MM, guide, screw, n_points=9)
for row in table:
    print(f"{row.turns:6.3f} turns  {row.b_e / MM:6.4f} mm  {row.phase_shift_deg:7.2f} deg")
print(f"mean {mean_phase_per_turn(table):.1f} deg per turn")

##############################################################################
# Inverting a target, and what happens when it is out of reach.

for target in (90.0, 180.0, 250.0, 600.0):
    try:
        s = solve_setting(target, 70 * GHZ, 11 * MM, guide, screw)
        print(f"{target:5.0f} deg -> {s.turns:.3f} turns (b_e = {s.b_e / MM:.4f} mm)")
    except InfeasibleTargetError as exc:
        print(f"{target:5.0f} deg -> infeasible, best {exc.max_phase_deg:.1f} deg")
