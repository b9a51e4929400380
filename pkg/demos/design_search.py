"""
Shortest strip for a phase target
=================================

Band, maximum phase and length pull against each other. Fixing the band and
a cutoff margin sets the largest allowed deflection; the search then finds
the shortest strip reaching the target phase at band centre.
"""

from gapwave import DesignTargets, FrequencyBand, WaveguideSpec, search_design

MM, GHZ = 1e-3, 1e9

guide = WaveguideSpec(3.76 * MM, FrequencyBand(64 * GHZ, 75 * GHZ))
band = FrequencyBand(64 * GHZ, 75 * GHZ)

for target, max_len, margin in [(180, 30, 0.05), (250, 30, 0.05), (360, 30, 0.05),
                                (250, 30, 0.15), (720, 10, 0.0)]:
    r = search_design(DesignTargets(band, target, max_len * MM, margin), guide)
    status = "ok " if r.feasible else "NO "
    print(f"{status} {target:4d} deg, <= {max_len} mm, margin {margin:.2f}: "
          f"a_e = {r.a_e / MM:6.3f} mm, b_e max = {r.b_e_max / MM:.3f} mm, "
          f"phase {r.achieved_phase:6.1f} deg, dispersion {r.dispersion:.3f}")

##############################################################################
# A dispersion cap rules out whole margins at once: the spread of the phase
# over the band does not depend on strip length.

for cap in (0.5, 0.4, 0.35):
    r = search_design(DesignTargets(band, 250, 30 * MM, 0.05, max_dispersion=cap), guide)
    print(f"dispersion <= {cap}: feasible={r.feasible}, dispersion {r.dispersion:.3f}")
