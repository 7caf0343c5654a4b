"""Entanglement of a Bell pair with one half sent through the channel.

The evolved state keeps the X shape (non-zero entries only on the
diagonal and anti-diagonal), so the Wootters matrix splits into two 2x2
blocks on the index pairs (0, 3) and (1, 2) and its spectrum is found
with quadratics.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, require_cp
from .errors import NotXState, OutOfRange
from .linalg import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z

X_TOL = 1e-12

_YY = np.kron(SIGMA_Y, SIGMA_Y)
_OFF_X = np.ones((4, 4), dtype=bool)
_OFF_X[[0, 1, 2, 3, 0, 3, 1, 2], [0, 1, 2, 3, 3, 0, 2, 1]] = False


@dataclass(frozen=True, eq=False)
class TwoQubitXState:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex).reshape(4, 4)
        if np.max(np.abs(m[_OFF_X]), initial=0.0) > X_TOL:
            raise NotXState("non-zero entries outside the diagonal and anti-diagonal")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @property
    def trace(self) -> float:
        return float(np.trace(self.matrix).real)

    @property
    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


@dataclass(frozen=True)
class ConcurrenceSpectrum:
    """Eigenvalues of the Wootters matrix, sorted descending.

    ``r_plus``, ``r_one`` (doubly degenerate) and ``r_minus`` keep the
    labels of the closed form, with ``r_plus >= r_minus``; their relative
    order against ``r_one`` is not fixed.
    """

    r: tuple[float, float, float, float]
    r_plus: float = math.nan
    r_one: float = math.nan
    r_minus: float = math.nan

    def labelled_order_holds(self, tol: float = 1e-12) -> bool:
        """Whether ``r_plus >= r_one >= r_minus``."""
        return self.r_plus >= self.r_one - tol and self.r_one >= self.r_minus - tol

    def concurrence(self) -> float:
        s = [math.sqrt(x) for x in self.r]
        return max(0.0, s[0] - s[1] - s[2] - s[3])


def _pauli_pair(a, b) -> np.ndarray:
    return np.kron(a, b)


def maximally_entangled() -> TwoQubitXState:
    """``(|00> + |11>)(<00| + <11|) / 2``."""
    m = 0.25 * (
        _pauli_pair(IDENTITY, IDENTITY)
        + _pauli_pair(SIGMA_X, SIGMA_X)
        - _pauli_pair(SIGMA_Y, SIGMA_Y)
        + _pauli_pair(SIGMA_Z, SIGMA_Z)
    )
    return TwoQubitXState(m)


def evolve_one_sided(params: ChannelParams) -> TwoQubitXState:
    """``(id (x) L)`` applied to the maximally entangled state."""
    l1, l3, ls = require_cp(params).as_tuple()
    m = 0.25 * (
        _pauli_pair(IDENTITY, IDENTITY)
        + ls * _pauli_pair(IDENTITY, SIGMA_Z)
        + l1 * _pauli_pair(SIGMA_X, SIGMA_X)
        - l1 * _pauli_pair(SIGMA_Y, SIGMA_Y)
        + l3 * _pauli_pair(SIGMA_Z, SIGMA_Z)
    )
    return TwoQubitXState(m)


def x_matrix(rho: TwoQubitXState) -> np.ndarray:
    """Wootters matrix ``rho (Y x Y) conj(rho) (Y x Y)``."""
    m = rho.matrix
    return m @ _YY @ m.conj() @ _YY


def _block_eigenvalues(a, b, c, d) -> tuple[float, float]:
    mean = 0.5 * (a + d)
    disc = np.sqrt(complex(0.25 * (a - d) ** 2 + b * c))
    return float((mean + disc).real), float((mean - disc).real)


def spectrum_of(rho: TwoQubitXState) -> ConcurrenceSpectrum:
    x = x_matrix(rho)
    eig = _block_eigenvalues(x[0, 0], x[0, 3], x[3, 0], x[3, 3])
    eig += _block_eigenvalues(x[1, 1], x[1, 2], x[2, 1], x[2, 2])
    r = sorted((max(0.0, e) for e in eig), reverse=True)
    return ConcurrenceSpectrum(tuple(r))


def concurrence_spectrum_closed(params: ChannelParams) -> ConcurrenceSpectrum:
    l1, l3, ls = require_cp(params).as_tuple()
    s = math.sqrt(max(0.0, (1 + l3 - abs(ls)) * (1 + l3 + abs(ls))))
    r_one = max(0.0, (1 - l3 - abs(ls)) * (1 - l3 + abs(ls))) / 16
    r_plus = (2 * abs(l1) + s) ** 2 / 16
    r_minus = (2 * abs(l1) - s) ** 2 / 16
    r = tuple(sorted((r_plus, r_one, r_one, r_minus), reverse=True))
    return ConcurrenceSpectrum(r, r_plus, r_one, r_minus)


def concurrence_closed(params: ChannelParams) -> float:
    l1, l3, ls = require_cp(params).as_tuple()
    # factored form; CP makes it >= 0 up to rounding and the CP tolerance
    radicand = max(0.0, (1 - l3 - abs(ls)) * (1 - l3 + abs(ls)))
    return 0.5 * max(0.0, 2 * abs(l1) - math.sqrt(radicand))


def concurrence_spectral(rho: TwoQubitXState) -> float:
    return min(1.0, spectrum_of(rho).concurrence())


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def entanglement_of_formation(c: float) -> float:
    c = float(c)
    if not -1e-12 <= c <= 1 + 1e-12:
        raise OutOfRange(f"concurrence {c!r} outside [0, 1]")
    c = min(max(c, 0.0), 1.0)
    root = math.sqrt(1 - c * c)
    # smaller argument without the cancellation in (1 - root) / 2
    small = 0.5 * c * c / (1 + root)
    if small <= 0.0:
        return 0.0
    large = 1.0 - small
    return -small * math.log2(small) - large * math.log1p(-small) / math.log(2)
