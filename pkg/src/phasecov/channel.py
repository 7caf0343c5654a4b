"""Phase-covariant qubit channels.

Up to a fixed rotation about the z axis, a phase-covariant channel acts on
Bloch vectors as

    (x1, x2, x3) -> (l1 * x1, l1 * x2, ls + l3 * x3)

with ``l1`` the eigenvalue shared by sigma_x and sigma_y, ``l3`` the
eigenvalue of sigma_z and ``ls`` the shift that breaks unitality.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import expm

from .errors import DegenerateFixedPoint, EndpointNotCP, InvalidChannel
from .linalg import SIGMA_Z, QubitState, matrix_to_state

CP_TOL = 1e-9
FIXED_POINT_TOL = 1e-12


@dataclass(frozen=True)
class ChannelParams:
    lambda1: float
    lambda3: float
    lambda_star: float = 0.0

    def __post_init__(self):
        for name in ("lambda1", "lambda3", "lambda_star"):
            value = float(getattr(self, name))
            if not np.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.lambda1, self.lambda3, self.lambda_star)

    @property
    def is_unital(self) -> bool:
        return self.lambda_star == 0.0


IDENTITY_CHANNEL = ChannelParams(1.0, 1.0, 0.0)


class CPReport(NamedTuple):
    valid: bool
    slack_a: float
    slack_b: float


def validate_cp(params: ChannelParams) -> CPReport:
    """Check both complete-positivity inequalities.

    ``slack_a = 1 - (|ls| + |l3|)`` and ``slack_b = (1 + l3)^2 - 4 l1^2 - ls^2``.
    A channel is accepted when both slacks are >= -CP_TOL.
    """
    l1, l3, ls = params.as_tuple()
    slack_a = 1.0 - (abs(ls) + abs(l3))
    slack_b = (1.0 + l3) ** 2 - (4.0 * l1 * l1 + ls * ls)
    return CPReport(slack_a >= -CP_TOL and slack_b >= -CP_TOL, slack_a, slack_b)


def require_cp(params: ChannelParams) -> ChannelParams:
    report = validate_cp(params)
    if not report.valid:
        raise InvalidChannel(
            f"{params} is not completely positive "
            f"(slacks {report.slack_a:.3g}, {report.slack_b:.3g})"
        )
    return params


def apply_bloch(params: ChannelParams, v) -> np.ndarray:
    """Channel action on one Bloch vector or a stack of shape (..., 3). No CP check."""
    v = np.asarray(v, dtype=float)
    out = np.empty_like(v)
    out[..., 0] = params.lambda1 * v[..., 0]
    out[..., 1] = params.lambda1 * v[..., 1]
    out[..., 2] = params.lambda_star + params.lambda3 * v[..., 2]
    return out


def apply(params: ChannelParams, rho: QubitState) -> QubitState:
    require_cp(params)
    return QubitState(apply_bloch(params, rho.bloch))


def apply_matrix(params: ChannelParams, m) -> np.ndarray:
    return apply(params, matrix_to_state(m)).matrix


def invariant_state(params: ChannelParams) -> QubitState:
    l3, ls = params.lambda3, params.lambda_star
    if abs(1.0 - l3) <= FIXED_POINT_TOL:
        raise DegenerateFixedPoint("lambda3 = 1: every state on the z axis is a fixed point")
    return QubitState((0.0, 0.0, ls / (1.0 - l3)))


def non_unitality(params: ChannelParams) -> float:
    """``|ls| / (1 - |l3|)``: 0 for unital maps, 1 for maximally non-unital ones."""
    denom = 1.0 - abs(params.lambda3)
    if denom <= FIXED_POINT_TOL:
        # CP forces ls = 0 here
        return 0.0
    return abs(params.lambda_star) / denom


def mix_unital_nonunital(lambda1: float, lambda3: float, p: float, sign: int = 1) -> ChannelParams:
    """Convex mixture ``(1 - p) * unital + p * maximally non-unital``.

    Both members share the eigenvalues ``lambda1`` and ``lambda3``; only the
    shift differs, so the mixture has ``ls = sign * p * (1 - |lambda3|)``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"mixing weight p={p!r} outside [0, 1]")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    if abs(lambda3) > 1.0 + CP_TOL:
        raise EndpointNotCP(f"|lambda3| = {abs(lambda3)!r} > 1")
    gap = 1.0 - abs(lambda3)
    if 4.0 * lambda1**2 + gap**2 > (1.0 + lambda3) ** 2 + CP_TOL:
        raise EndpointNotCP(
            f"maximally non-unital endpoint ({lambda1}, {lambda3}, {sign * gap}) is not CP"
        )
    return ChannelParams(lambda1, lambda3, sign * p * gap)


def phase_rotation(phi: float) -> np.ndarray:
    return expm(-1j * phi * SIGMA_Z)


def check_covariance(params: ChannelParams, rho: QubitState, phi: float) -> float:
    """Max-entry residual of ``L[U rho U^+] - U L[rho] U^+`` for ``U = exp(-i sigma_z phi)``."""
    u = phase_rotation(phi)
    lhs = apply_matrix(params, u @ rho.matrix @ u.conj().T)
    rhs = u @ apply(params, rho).matrix @ u.conj().T
    return float(np.max(np.abs(lhs - rhs)))


def sample_cp_params(n: int, rng: np.random.Generator) -> list[ChannelParams]:
    """Rejection-sample ``n`` CP channels uniformly from the box [-1, 1]^3."""
    out: list[ChannelParams] = []
    while len(out) < n:
        for l1, l3, ls in rng.uniform(-1.0, 1.0, size=(max(2 * (n - len(out)), 8), 3)):
            params = ChannelParams(l1, l3, ls)
            if validate_cp(params).valid:
                out.append(params)
                if len(out) == n:
                    break
    return out
