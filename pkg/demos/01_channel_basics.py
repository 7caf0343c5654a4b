"""
Phase-covariant channels on the Bloch ball
==========================================

A channel is fixed by three numbers: the contraction ``l1`` of the
equatorial plane, the contraction ``l3`` of the z axis and a shift ``ls``
along z. Not every triple is a channel; two inequalities decide.
"""
import numpy as np

from phasecov import ChannelParams, QubitState, apply, invariant_state, non_unitality, validate_cp
from phasecov.channel import check_covariance, mix_unital_nonunital

# an amplitude-damping-like channel and a triple that is not a channel
good = ChannelParams(0.4, 0.5, 0.25)
bad = ChannelParams(0.5, 0.0, 0.25)
for params in (good, bad):
    print(params.as_tuple(), validate_cp(params))

# acting on the +x eigenstate shrinks x and pushes towards the north pole
rho = QubitState((1, 0, 0))
print("output Bloch vector:", apply(good, rho).bloch)

# iterating the channel lands on its invariant state
for _ in range(60):
    rho = apply(good, rho)
print("after 60 steps:", rho.bloch, " invariant:", invariant_state(good).bloch)

# non-unitality runs from 0 (identity preserved) to 1 (maximal shift)
for p in (0.0, 0.5, 1.0):
    mixed = mix_unital_nonunital(0.4, 0.5, p)
    print(f"p={p}: ls={mixed.lambda_star:.3f}, non-unitality={non_unitality(mixed):.3f}")

# rotations about z commute with the channel
rng = np.random.default_rng(0)
v = rng.normal(size=3)
v /= 2 * np.linalg.norm(v)
print("covariance residual:", check_covariance(good, QubitState(v), 0.7))
