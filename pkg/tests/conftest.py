import numpy as np
import pytest
from hypothesis import strategies as st

from phasecov.channel import ChannelParams, sample_cp_params, validate_cp


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(scope="session")
def cp_suite():
    """1000 seeded random CP channels shared by the heavier checks."""
    return sample_cp_params(1000, np.random.default_rng(42))


unit = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def cp_params(draw):
    l1, l3, ls = draw(unit), draw(unit), draw(unit)
    params = ChannelParams(l1, l3, ls)
    if validate_cp(params).valid:
        return params
    # shrink into the CP set along the ray towards the origin
    scale = draw(st.floats(0.0, 0.5))
    while not validate_cp(params := ChannelParams(l1 * scale, l3 * scale, ls * scale)).valid:
        scale *= 0.5
    return params


@st.composite
def unit_vectors(draw):
    v = np.array([draw(st.floats(-1, 1)) for _ in range(3)])
    n = np.linalg.norm(v)
    if n < 1e-3:
        return np.array([0.0, 0.0, 1.0])
    return v / n
