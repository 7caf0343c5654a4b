"""Qubit linear algebra in Pauli coordinates.

Every state is stored by its Bloch vector ``v``; the density matrix
``(I + v . sigma) / 2`` is a derived view.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BlochNormExceeded, NegativeDeterminant, NonHermitian

HERMITIAN_TOL = 1e-10
POSITIVITY_TOL = 1e-12

IDENTITY = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

for _m in (IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z):
    _m.setflags(write=False)


def _frozen(v) -> np.ndarray:
    arr = np.array(v, dtype=float).reshape(3)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class QubitState:
    """A qubit density matrix held as its Bloch vector."""

    bloch: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "bloch", _frozen(self.bloch))

    @property
    def matrix(self) -> np.ndarray:
        x, y, z = self.bloch
        return 0.5 * np.array([[1 + z, x - 1j * y], [x + 1j * y, 1 - z]])

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.bloch))

    @property
    def eigenvalues(self) -> tuple[float, float]:
        r = self.norm
        return (0.5 * (1 + r), 0.5 * (1 - r))

    @property
    def determinant(self) -> float:
        return 0.25 * (1.0 - float(self.bloch @ self.bloch))

    def is_pure(self, tol: float = 1e-12) -> bool:
        return abs(self.norm - 1.0) <= tol

    def __eq__(self, other):
        if not isinstance(other, QubitState):
            return NotImplemented
        return bool(np.array_equal(self.bloch, other.bloch))

    def __repr__(self):
        x, y, z = self.bloch
        return f"QubitState(bloch=({x:.6g}, {y:.6g}, {z:.6g}))"


def pauli_decompose(m) -> tuple[float, np.ndarray]:
    """Split a Hermitian 2x2 matrix as ``t0 * I + sum_k v_k sigma_k``.

    Raises NonHermitian if the anti-Hermitian part exceeds 1e-10 entrywise.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    anti = 0.5 * (m - m.conj().T)
    if np.max(np.abs(anti)) > HERMITIAN_TOL:
        raise NonHermitian(f"anti-Hermitian part {np.max(np.abs(anti)):.3g} exceeds {HERMITIAN_TOL}")
    t0 = 0.5 * np.trace(m).real
    v = np.array([0.5 * np.trace(m @ s).real for s in PAULIS])
    return float(t0), v


def bloch_to_state(v) -> QubitState:
    v = np.asarray(v, dtype=float).reshape(3)
    n = float(np.linalg.norm(v))
    if n > 1.0 + POSITIVITY_TOL:
        raise BlochNormExceeded(f"Bloch vector norm {n!r} exceeds 1")
    return QubitState(v)


def matrix_to_state(m) -> QubitState:
    """Inverse of ``QubitState.matrix`` for a unit-trace Hermitian matrix."""
    t0, v = pauli_decompose(m)
    if abs(2 * t0 - 1.0) > HERMITIAN_TOL:
        raise ValueError(f"trace {2 * t0!r} is not 1")
    return bloch_to_state(2.0 * v)


def state_overlap(a: QubitState, b: QubitState) -> float:
    """Hilbert-Schmidt overlap Tr(ab) = (1 + a.b) / 2."""
    return 0.5 * (1.0 + float(a.bloch @ b.bloch))


def _checked_det(s: QubitState) -> float:
    d = s.determinant
    if d < -POSITIVITY_TOL:
        raise NegativeDeterminant(f"determinant {d!r} < 0; not a valid state")
    return max(d, 0.0)


def fidelity_qubit(a: QubitState, b: QubitState) -> float:
    """Uhlmann fidelity of two qubit states.

    Uses the two-dimensional identity ``F = Tr(ab) + 2 sqrt(det a det b)``,
    which avoids matrix square roots.
    """
    return state_overlap(a, b) + 2.0 * np.sqrt(_checked_det(a) * _checked_det(b))
