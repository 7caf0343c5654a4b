"""
Entanglement death and rebirth
==============================

One half of a Bell pair goes through the channel. The concurrence of the
resulting two-qubit X state has a closed form; the oscillating family
kills entanglement on an interval around pi/2 and revives it afterwards.
The more non-unital the mixture, the shorter the dead interval.
"""
import math

from phasecov import ChannelParams
from phasecov.dynamics import concurrence_exp, death_interval_osc, death_time_exp
from phasecov.entanglement import (
    concurrence_closed,
    concurrence_spectral,
    concurrence_spectrum_closed,
    entanglement_of_formation,
    evolve_one_sided,
)

params = ChannelParams(0.4, 0.5, 0.25)
c = concurrence_closed(params)
print(f"closed {c:.12f}  spectral {concurrence_spectral(evolve_one_sided(params)):.12f}  E_f {entanglement_of_formation(c):.6f}")
print("Wootters spectrum:", concurrence_spectrum_closed(params).r)

print(f"exp family, p=0 dies at t={death_time_exp(0):.9f} (ln(1+sqrt 2) = {math.log(1 + math.sqrt(2)):.9f})")
print(f"exp family, p=1 at t=4: {concurrence_exp(1, 4):.6f} = e^-4")
for p in (0.0, 0.3, 0.5, 0.7, 1.0):
    start, end = death_interval_osc(p)
    print(f"osc family, p={p}: dead on [{start:.4f}, {end:.4f}], length {end - start:.4f}")
