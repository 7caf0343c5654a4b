import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from phasecov.channel import (
    IDENTITY_CHANNEL,
    ChannelParams,
    apply,
    check_covariance,
    invariant_state,
    mix_unital_nonunital,
    non_unitality,
    sample_cp_params,
    validate_cp,
)
from phasecov.errors import DegenerateFixedPoint, EndpointNotCP, InvalidChannel
from phasecov.linalg import QubitState

from .conftest import cp_params


def random_pure(rng, n):
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


def test_validate_identity():
    assert validate_cp(IDENTITY_CHANNEL).valid


def test_validate_slacks():
    rep = validate_cp(ChannelParams(0.4, 0, 0.25))
    assert rep.valid
    assert rep.slack_a == pytest.approx(0.75)
    assert rep.slack_b == pytest.approx(0.2975)


def test_validate_rejects_condition_b():
    rep = validate_cp(ChannelParams(0.5, 0, 0.25))
    assert not rep.valid
    assert rep.slack_a > 0
    assert rep.slack_b == pytest.approx(1 - 1.0625)


def test_validate_accepts_boundary_noise():
    t = 0.37
    l1 = math.exp(-t)
    # maximally non-unital member sits on the boundary: l1^2 == l3
    assert validate_cp(ChannelParams(l1, l1 * l1 * (1 + 1e-15), 1 - l1 * l1)).valid


def test_apply_examples():
    rho = QubitState((0.3, -0.2, 0.5))
    assert np.array_equal(apply(IDENTITY_CHANNEL, rho).bloch, rho.bloch)
    out = apply(ChannelParams(0.5, 0.5, 0.25), QubitState((1, 0, 0)))
    np.testing.assert_allclose(out.bloch, (0.5, 0, 0.25))
    np.testing.assert_allclose(apply(ChannelParams(0, 0, 0), rho).matrix, 0.5 * np.eye(2))


def test_apply_rejects_non_cp():
    with pytest.raises(InvalidChannel):
        apply(ChannelParams(0.5, 0, 0.25), QubitState((0, 0, 0)))


def test_apply_preserves_trace_and_positivity(rng):
    for params in sample_cp_params(50, rng):
        for v in random_pure(rng, 100):
            out = apply(params, QubitState(v))
            assert out.matrix.trace().real == 1.0
            assert min(np.linalg.eigvalsh(out.matrix)) >= -1e-12


@given(cp_params())
def test_unital_iff_identity_preserved(params):
    out = apply(params, QubitState((0, 0, 0)))
    preserved = not np.any(out.bloch)
    assert preserved == (params.lambda_star == 0)


def test_invariant_state_examples():
    assert np.array_equal(invariant_state(ChannelParams(0.3, 0.7, 0)).bloch, (0, 0, 0))
    np.testing.assert_allclose(invariant_state(ChannelParams(0.4, 0.5, 0.25)).bloch, (0, 0, 0.5))
    np.testing.assert_allclose(invariant_state(ChannelParams(0, 0, 1)).bloch, (0, 0, 1))


def test_invariant_state_by_iteration():
    params = ChannelParams(0.4, 0.5, 0.25)
    rho = QubitState((0.2, 0.1, -0.3))
    for _ in range(200):
        rho = apply(params, rho)
    np.testing.assert_allclose(rho.bloch, invariant_state(params).bloch, atol=1e-14)


def test_invariant_state_degenerate():
    with pytest.raises(DegenerateFixedPoint):
        invariant_state(ChannelParams(0.5, 1.0, 0.0))


@given(cp_params())
def test_invariant_state_is_fixed(params):
    if abs(1 - params.lambda3) < 1e-6:
        return
    rho = invariant_state(params)
    np.testing.assert_allclose(apply(params, rho).bloch, rho.bloch, atol=1e-12)


def test_non_unitality_examples():
    assert non_unitality(ChannelParams(0.3, 0.7, 0)) == 0
    assert non_unitality(ChannelParams(0.4, 0.5, 0.5)) == 1
    assert non_unitality(ChannelParams(0.4, 0.5, 0.25)) == 0.5
    assert non_unitality(ChannelParams(-1, 1, 0)) == 0


@given(cp_params())
def test_non_unitality_in_unit_interval(params):
    assert 0 <= non_unitality(params) <= 1 + 1e-8


def test_mix_examples():
    assert mix_unital_nonunital(0.5, 0.5, 0.0).lambda_star == 0
    params = mix_unital_nonunital(math.exp(-1), math.exp(-2), 0.7)
    assert params.lambda_star == pytest.approx(0.605265301734371, abs=1e-14)
    with pytest.raises(EndpointNotCP):
        mix_unital_nonunital(0.9, 0, 1.0)


def _mixable(rng, n):
    out = []
    while len(out) < n:
        l1, l3 = rng.uniform(-1, 1, size=2)
        if 4 * l1**2 + (1 - abs(l3)) ** 2 <= (1 + l3) ** 2:
            out.append((l1, l3))
    return out


def test_mixture_is_convex_combination(rng):
    for l1, l3 in _mixable(rng, 50):
        unital = mix_unital_nonunital(l1, l3, 0.0)
        extreme = mix_unital_nonunital(l1, l3, 1.0)
        for p in rng.uniform(size=5):
            mixed = mix_unital_nonunital(l1, l3, p)
            assert validate_cp(mixed).valid
            for v in random_pure(rng, 5):
                rho = QubitState(v)
                lhs = apply(mixed, rho).matrix
                rhs = (1 - p) * apply(unital, rho).matrix + p * apply(extreme, rho).matrix
                np.testing.assert_allclose(lhs, rhs, atol=1e-12)


@settings(max_examples=300)
@given(st.floats(0, 1, allow_subnormal=False), st.floats(-1, 1), st.floats(-0.999999, 0.999999), st.sampled_from([1, -1]))
def test_non_unitality_recovers_mixing_weight(p, l1_frac, l3, sign):
    # keep the maximally non-unital endpoint inside the CP set
    l1 = l1_frac * math.sqrt(max(0.0, (1 + l3) ** 2 - (1 - abs(l3)) ** 2)) / 2
    params = mix_unital_nonunital(l1, l3, p, sign)
    assert non_unitality(params) == pytest.approx(p, rel=4e-16, abs=0)


def test_covariance_examples():
    params = ChannelParams(0.4, 0.5, 0.25)
    rho = QubitState((1, 0, 0))
    assert check_covariance(params, rho, 0.0) == 0.0
    assert check_covariance(params, rho, math.pi / 3) < 1e-12


def test_covariance_random(rng):
    for params in sample_cp_params(100, rng):
        v = rng.normal(size=3)
        v *= rng.uniform() / np.linalg.norm(v)
        assert check_covariance(params, QubitState(v), rng.uniform(0, 2 * np.pi)) < 1e-12


def test_sampler_is_deterministic():
    a = sample_cp_params(20, np.random.default_rng(3))
    b = sample_cp_params(20, np.random.default_rng(3))
    assert a == b
    assert all(validate_cp(p).valid for p in a)
