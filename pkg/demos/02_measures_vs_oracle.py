"""
Closed forms against brute force
================================

Fidelity extrema and maximal output norms have closed forms in the three
channel parameters. Here they are compared with a dense search over pure
inputs. The axis-only formula for the infinity norm misses the peak when
the output norm is largest off the poles.
"""
import math

from phasecov import ChannelParams, measure_report
from phasecov.oracle import audit_channel, brute_fidelity_extrema, brute_output_norm

params = ChannelParams(0.4, 0.0, 0.25)
rep = measure_report(params)
print("closed forms:", rep)

lo, hi = brute_fidelity_extrema(params)
print(f"f_min oracle {lo.value:.12f} gap {lo.absolute_gap:.1e}")
print(f"f_max oracle {hi.value:.12f} gap {hi.absolute_gap:.1e}, argmax x3 = {hi.argument[2]:.6f}")

inf = brute_output_norm(params, math.inf)
print(f"infinity norm: oracle {inf.value:.9f}, corrected {rep.nu_inf_bloch:.9f}, axis-only {rep.nu_inf_paper:.9f}")

# a unital channel, where the two infinity-norm formulas agree
print(audit_channel(ChannelParams(0.3, 0.7, 0.0)))
