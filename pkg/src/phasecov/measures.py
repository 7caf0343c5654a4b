"""Closed-form performance measures of phase-covariant channels.

For a pure input with Bloch vector ``x`` the channel fidelity and the
output Bloch norm depend on ``x3`` only, through quadratics

    2 F - 1    = (l3 - l1) x3^2 + ls x3 + l1
    |v_out|^2  = (l3^2 - l1^2) x3^2 + 2 l3 ls x3 + l1^2 + ls^2

so every extremum sits either at the critical point of the quadratic or
at a pole ``x3 = +-1``. The closed forms below pick the branch; the
extremizing projectors form a circle of latitude (``ExtremalFamily``).

Exact branch-boundary ties are resolved to the endpoint branch, where both
branches coincide and the interior formula would divide by zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channel import ChannelParams, require_cp
from .errors import InvalidExponent, NotPure

INTERIOR = "interior"
ENDPOINT = "endpoint"


@dataclass(frozen=True)
class ExtremalFamily:
    """Pure states ``(x1, +-sqrt(1 - x3^2 - x1^2), x3)`` sharing one latitude."""

    x3: float
    branch: str

    @property
    def x1_range(self) -> tuple[float, float]:
        r = math.sqrt(max(0.0, 1.0 - self.x3**2))
        return (-r, r)

    def members(self, n: int = 16) -> np.ndarray:
        """``n`` Bloch vectors spread around the latitude circle, shape (n, 3)."""
        r = math.sqrt(max(0.0, 1.0 - self.x3**2))
        phi = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
        return np.stack([r * np.cos(phi), r * np.sin(phi), np.full(n, self.x3)], axis=-1)


def _sign(x: float, zero: float) -> float:
    if x > 0:
        return 1.0
    if x < 0:
        return -1.0
    return zero


def f_min_closed(params: ChannelParams) -> tuple[float, ExtremalFamily]:
    l1, l3, ls = require_cp(params).as_tuple()
    gap = l3 - l1
    if gap > 0 and abs(ls) < 2 * gap:
        value = 0.5 * (1 + l1 - ls * ls / (4 * gap))
        return value, ExtremalFamily(-ls / (2 * gap) + 0.0, INTERIOR)
    return 0.5 * (1 + l3 - abs(ls)), ExtremalFamily(-_sign(ls, 1.0), ENDPOINT)


def f_max_closed(params: ChannelParams) -> tuple[float, ExtremalFamily]:
    l1, l3, ls = require_cp(params).as_tuple()
    gap = l1 - l3
    if gap > 0 and abs(ls) < 2 * gap:
        value = 0.5 * (1 + l1 + ls * ls / (4 * gap))
        return value, ExtremalFamily(ls / (2 * gap), INTERIOR)
    return 0.5 * (1 + l3 + abs(ls)), ExtremalFamily(_sign(ls, 1.0), ENDPOINT)


def _max_output_bloch_norm_sq(params: ChannelParams) -> tuple[float, ExtremalFamily]:
    l1, l3, ls = require_cp(params).as_tuple()
    gap = l1 * l1 - l3 * l3
    if gap > 0 and abs(l3 * ls) < gap:
        value = l1 * l1 + l1 * l1 * ls * ls / gap
        return value, ExtremalFamily(l3 * ls / gap, INTERIOR)
    value = (abs(l3) + abs(ls)) ** 2
    return value, ExtremalFamily(_sign(l3 * ls, 1.0), ENDPOINT)


def nu2_squared_closed(params: ChannelParams) -> tuple[float, ExtremalFamily]:
    """Squared maximal output 2-norm, ``max_P Tr(L[P]^2)``."""
    k, family = _max_output_bloch_norm_sq(params)
    return 0.5 * (1 + k), family


def nu_inf_paper(params: ChannelParams) -> float:
    """``(1 + max{|l1|, |l3 + ls|, |l3 - ls|}) / 2``.

    Only looks at the axes of the Bloch sphere. It underestimates the
    maximal output infinity-norm when ``|l1| > |l3|`` and the output norm
    peaks strictly inside the sphere; see ``nu_inf_bloch``.
    """
    l1, l3, ls = require_cp(params).as_tuple()
    return 0.5 * (1 + max(abs(l1), abs(l3 + ls), abs(l3 - ls)))


def nu_inf_bloch(params: ChannelParams) -> tuple[float, ExtremalFamily]:
    """Maximal output infinity-norm, ``(1 + max_P |v_out|) / 2``."""
    k, family = _max_output_bloch_norm_sq(params)
    return 0.5 * (1 + math.sqrt(k)), family


def nu_p_general(params: ChannelParams, p: float) -> float:
    """Maximal output Schatten p-norm; ``p = math.inf`` gives ``nu_inf_bloch``."""
    p = float(p)
    if not p >= 1.0:
        raise InvalidExponent(f"Schatten exponent must be >= 1, got {p!r}")
    k, _ = _max_output_bloch_norm_sq(params)
    s = math.sqrt(k)
    hi, lo = 0.5 * (1 + s), 0.5 * (1 - s)
    if math.isinf(p):
        return hi
    return (hi**p + lo**p) ** (1.0 / p)


def fidelity_on_pure(params: ChannelParams, v) -> float:
    """``Tr(P L[P])`` for the pure state with unit Bloch vector ``v``."""
    x1, x2, x3 = np.asarray(v, dtype=float).reshape(3)
    if abs(math.sqrt(x1 * x1 + x2 * x2 + x3 * x3) - 1.0) > 1e-9:
        raise NotPure(f"Bloch vector {v!r} is not a unit vector")
    l1, l3, ls = params.as_tuple()
    return 0.5 * (1 + l1 * (x1 * x1 + x2 * x2) + l3 * x3 * x3 + ls * x3)


@dataclass(frozen=True)
class MeasureReport:
    f_min: float
    f_max: float
    nu2_squared: float
    nu_inf_paper: float
    nu_inf_bloch: float
    f_min_family: ExtremalFamily
    f_max_family: ExtremalFamily
    nu_family: ExtremalFamily

    @property
    def branches(self) -> dict[str, str]:
        return {
            "f_min": self.f_min_family.branch,
            "f_max": self.f_max_family.branch,
            "nu2_squared": self.nu_family.branch,
            "nu_inf_bloch": self.nu_family.branch,
        }


def measure_report(params: ChannelParams) -> MeasureReport:
    f_min, fam_min = f_min_closed(params)
    f_max, fam_max = f_max_closed(params)
    nu2, fam_nu = nu2_squared_closed(params)
    nu_inf, _ = nu_inf_bloch(params)
    return MeasureReport(f_min, f_max, nu2, nu_inf_paper(params), nu_inf, fam_min, fam_max, fam_nu)
