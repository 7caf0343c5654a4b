import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from phasecov.channel import ChannelParams, mix_unital_nonunital
from phasecov.entanglement import (
    TwoQubitXState,
    binary_entropy,
    concurrence_closed,
    concurrence_spectral,
    concurrence_spectrum_closed,
    entanglement_of_formation,
    evolve_one_sided,
    maximally_entangled,
    spectrum_of,
    x_matrix,
)
from phasecov.errors import InvalidChannel, NotXState, OutOfRange
from phasecov.linalg import IDENTITY, PAULIS

from .conftest import cp_params

SAMPLE = ChannelParams(0.4, 0.5, 0.25)


def apply_to_operator(params, m):
    # linear extension of the channel to arbitrary 2x2 operators
    l1, l3, ls = params.as_tuple()
    c0 = 0.5 * np.trace(m)
    c = [0.5 * np.trace(m @ s) for s in PAULIS]
    return c0 * (IDENTITY + ls * PAULIS[2]) + l1 * c[0] * PAULIS[0] + l1 * c[1] * PAULIS[1] + l3 * c[2] * PAULIS[2]


def one_sided_reference(params):
    out = np.zeros((4, 4), dtype=complex)
    for i in range(2):
        for j in range(2):
            unit = np.zeros((2, 2))
            unit[i, j] = 1
            out += 0.5 * np.kron(unit, apply_to_operator(params, unit))
    return out


def test_maximally_entangled():
    rho = maximally_entangled()
    assert rho.trace == pytest.approx(1.0, abs=1e-15)
    assert rho.purity == pytest.approx(1.0, abs=1e-15)
    assert concurrence_spectral(rho) == pytest.approx(1.0, abs=1e-15)
    bell = np.zeros(4)
    bell[[0, 3]] = 1 / math.sqrt(2)
    np.testing.assert_allclose(rho.matrix, np.outer(bell, bell), atol=1e-15)


def test_evolve_examples():
    np.testing.assert_allclose(evolve_one_sided(ChannelParams(1, 1, 0)).matrix, maximally_entangled().matrix)
    np.testing.assert_allclose(evolve_one_sided(ChannelParams(0, 0, 0)).matrix, 0.25 * np.eye(4))
    np.testing.assert_allclose(
        evolve_one_sided(ChannelParams(0, 0, 1)).matrix, 0.25 * np.kron(IDENTITY, IDENTITY + PAULIS[2])
    )
    with pytest.raises(InvalidChannel):
        evolve_one_sided(ChannelParams(0.5, 0, 0.25))


@given(cp_params())
def test_evolve_matches_linear_extension(params):
    rho = evolve_one_sided(params)
    np.testing.assert_allclose(rho.matrix, one_sided_reference(params), atol=1e-12)
    assert rho.trace == pytest.approx(1.0, abs=1e-12)
    assert np.linalg.eigvalsh(rho.matrix).min() >= -1e-12


def test_x_matrix_entry():
    x = x_matrix(evolve_one_sided(SAMPLE))
    # (4 l1^2 + (1 + l3)^2 - ls^2) / 16 on the diagonal corners
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[3, 3] = 2.8275 / 16
    expected[1, 1] = expected[2, 2] = 0.1875 / 16
    expected[0, 3] = 4 * 0.4 * 1.75 / 16
    expected[3, 0] = 4 * 0.4 * 1.25 / 16
    np.testing.assert_allclose(x, expected, atol=1e-15)
    # same spectrum as the general eigensolver
    r = np.sort(np.linalg.eigvals(x).real)[::-1]
    np.testing.assert_allclose(spectrum_of(evolve_one_sided(SAMPLE)).r, r, atol=1e-12)


def test_x_matrix_of_bell_and_product_states():
    np.testing.assert_allclose(spectrum_of(maximally_entangled()).r, (1, 0, 0, 0), atol=1e-15)
    diag = TwoQubitXState(np.diag([0.1, 0.2, 0.3, 0.4]))
    x = x_matrix(diag)
    assert np.count_nonzero(x - np.diag(np.diag(x))) == 0
    assert concurrence_spectral(diag) == 0


def test_not_x_state():
    m = 0.25 * np.eye(4, dtype=complex)
    m[0, 1] = m[1, 0] = 0.01
    with pytest.raises(NotXState):
        TwoQubitXState(m)


def test_spectrum_examples():
    spec = concurrence_spectrum_closed(ChannelParams(1, 1, 0))
    np.testing.assert_allclose(spec.r, (1, 0, 0, 0), atol=1e-15)
    spec = concurrence_spectrum_closed(SAMPLE)
    assert spec.r_one == pytest.approx(0.01171875, abs=1e-16)
    s = math.sqrt(2.1875)
    assert spec.r_plus == pytest.approx((0.8 + s) ** 2 / 16, abs=1e-15)
    assert spec.r_minus == pytest.approx((0.8 - s) ** 2 / 16, abs=1e-15)
    np.testing.assert_allclose(
        spec.r, (0.32462074457749, 0.0288167554225096, 0.01171875, 0.01171875), atol=1e-14
    )
    pauli = concurrence_spectrum_closed(ChannelParams(0.5, 0.5, 0))
    np.testing.assert_allclose(pauli.r, (2.5**2 / 16, 0.015625, 0.015625, 0.25 / 16))


@given(cp_params())
def test_closed_spectrum_matches_blocks(params):
    closed = concurrence_spectrum_closed(params)
    spectral = spectrum_of(evolve_one_sided(params))
    np.testing.assert_allclose(closed.r, spectral.r, atol=1e-12)
    assert list(closed.r) == sorted(closed.r, reverse=True)
    assert closed.r_plus >= closed.r_minus


def test_labelled_order_can_fail():
    # r_minus overtakes the doubly degenerate pair here
    spec = concurrence_spectrum_closed(SAMPLE)
    assert not spec.labelled_order_holds()
    assert spec.concurrence() == pytest.approx(concurrence_closed(SAMPLE), abs=1e-15)


def test_concurrence_examples():
    assert concurrence_closed(ChannelParams(1, 1, 0)) == 1
    assert concurrence_closed(SAMPLE) == pytest.approx(0.183493649053890, abs=1e-15)
    assert concurrence_spectral(evolve_one_sided(SAMPLE)) == pytest.approx(0.183493649053890, abs=1e-13)


@given(cp_params())
def test_unital_reduction(params):
    if params.lambda_star != 0:
        params = ChannelParams(params.lambda1, params.lambda3, 0.0)
    expected = 0.5 * max(0.0, 2 * abs(params.lambda1) + params.lambda3 - 1)
    assert concurrence_closed(params) == pytest.approx(expected, abs=1e-12)


@given(cp_params())
def test_closed_matches_spectral(params):
    c = concurrence_closed(params)
    assert 0 <= c <= 1
    assert c == pytest.approx(concurrence_spectral(evolve_one_sided(params)), abs=1e-10)


def test_entanglement_of_formation_examples():
    assert entanglement_of_formation(0) == 0
    assert entanglement_of_formation(1) == 1
    assert entanglement_of_formation(0.5) == pytest.approx(0.354578902665270, abs=1e-14)
    with pytest.raises(OutOfRange):
        entanglement_of_formation(1.1)
    with pytest.raises(OutOfRange):
        entanglement_of_formation(-0.01)


def test_entanglement_of_formation_small_concurrence():
    # leading order (c^2 / 4) log2(4 e / c^2)
    c = 1e-9
    expected = c * c / 4 * math.log2(4 * math.e / (c * c))
    assert entanglement_of_formation(c) == pytest.approx(expected, rel=1e-9)
    assert entanglement_of_formation(0.3) == pytest.approx(binary_entropy(0.5 * (1 + math.sqrt(0.91))), rel=1e-14)


def test_binary_entropy():
    assert binary_entropy(0) == binary_entropy(1) == 0
    assert binary_entropy(0.5) == 1
    assert binary_entropy(0.11) == pytest.approx(binary_entropy(0.89))


@given(st.floats(0, 1), st.floats(0, 1))
def test_entanglement_of_formation_monotone(a, b):
    lo, hi = sorted((a, b))
    assert 0 <= entanglement_of_formation(lo) <= entanglement_of_formation(hi) <= 1


@given(cp_params())
def test_zero_and_one_together(params):
    c = concurrence_closed(params)
    e = entanglement_of_formation(c)
    # below ~1e-154 the squared concurrence underflows
    if c == 0 or c > 1e-150:
        assert (c == 0) == (e == 0)
    if c == 1:
        assert e == 1


def test_concurrence_monotone_in_p(rng):
    ps = np.linspace(0, 1, 101)
    done = 0
    while done < 100:
        l1, l3 = rng.uniform(-1, 1, size=2)
        if 4 * l1**2 + (1 - abs(l3)) ** 2 > (1 + l3) ** 2:
            continue
        done += 1
        c = [concurrence_closed(mix_unital_nonunital(l1, l3, p)) for p in ps]
        assert np.diff(c).min() >= -1e-12
