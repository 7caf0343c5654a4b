"""
Mixing a unital and a non-unital dynamical map
==============================================

Both families keep ``l1`` and ``l3`` fixed in time and only the shift
depends on the mixing weight ``p``. The table prints a few times for each
``p``; ``phasecov trajectory`` writes the full grid as CSV.
"""
import numpy as np

from phasecov.dynamics import EXP, OSC, TrajectoryFamily, run_trajectory

for kind, times in ((EXP, [0.0, 0.5, 1.0, 2.0, 4.0]), (OSC, np.linspace(0, np.pi, 5))):
    print(f"--- {kind}")
    print("   p      t   f_min   f_max  nu2^2  nu_inf  axis-only")
    for p in (0.0, 0.5, 1.0):
        for s in run_trajectory(TrajectoryFamily(kind, p), times):
            print(f"{p:4.1f} {s.t:6.3f} {s.f_min:7.4f} {s.f_max:7.4f} {s.nu2_squared:6.4f} "
                  f"{s.nu_inf_bloch:7.4f} {s.nu_inf_paper:9.4f}")

# the trajectory formulas are evaluated alongside and any disagreement is flagged
flags = [s.flags for s in run_trajectory(TrajectoryFamily(OSC, 0.3), np.linspace(0, 2 * np.pi, 629)) if s.flags]
print("flagged samples:", len(flags))
