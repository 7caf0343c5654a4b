"""Dynamical maps mixing a unital and a maximally non-unital channel.

Two families share eigenvalues between their unital and non-unital
members and differ only in the shift ``ls``:

* ``exp``: l1 = e^-t, l3 = e^-2t, ls = p (1 - e^-2t)   (dephasing vs. amplitude damping)
* ``osc``: l1 = cos t, l3 = cos^2 t, ls = p sin^2 t

Alongside the general closed forms, each family has explicit trajectory
formulas in ``t`` and ``p``; both are evaluated so they can be compared.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .channel import ChannelParams, mix_unital_nonunital
from .entanglement import concurrence_closed, entanglement_of_formation
from .measures import f_max_closed, f_min_closed, nu2_squared_closed, nu_inf_bloch, nu_inf_paper

log = logging.getLogger(__name__)

EXP = "exp"
OSC = "osc"
DEFAULT_P = (0.0, 0.3, 0.5, 0.7, 1.0)
FORMULA_TOL = 1e-9


def default_t_grid(kind: str) -> np.ndarray:
    if kind == EXP:
        return np.linspace(0.0, 4.0, 401)
    return np.linspace(0.0, 2 * np.pi, 629)


@dataclass(frozen=True)
class TrajectoryFamily:
    kind: str
    p: float
    sign: int = 1

    def __post_init__(self):
        if self.kind not in (EXP, OSC):
            raise ValueError(f"unknown family {self.kind!r}; expected 'exp' or 'osc'")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p={self.p!r} outside [0, 1]")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


def sample(family: TrajectoryFamily, t: float) -> ChannelParams:
    if t < 0:
        raise ValueError(f"t={t!r} must be >= 0")
    if family.kind == EXP:
        l1, l3 = math.exp(-t), math.exp(-2 * t)
    else:
        l1 = math.cos(t)
        l3 = l1 * l1
    # ls = p (1 - |l3|) keeps p = 1 exactly on the CP boundary
    return mix_unital_nonunital(l1, l3, family.p, family.sign)


class FormulaValues(NamedTuple):
    f_min: float
    f_max: float
    nu2_squared: float
    nu_inf: float


def paper_formulas_exp(p: float, t: float) -> FormulaValues:
    """Explicit trajectory formulas for the ``exp`` family.

    At ``t = 0`` the branch thresholds are 0/0; their limit is used there.
    """
    if t == 0:
        return FormulaValues(1.0, 1.0, 1.0, 1.0)
    e1, e2 = math.exp(-t), math.exp(-2 * t)
    sh = math.sinh(t)
    f_min = 0.5 * (1 - p + (1 + p) * e2)
    if p <= (1 - e1) / sh:
        f_max = (1 - e2) / (4 * (1 - e1)) * (2 + p * p * sh)
    else:
        f_max = 0.5 * (1 + p + (1 - p) * e2)
    nu2 = (1 + p * p) / 2 + (1 - p * p) / 2 * e2
    if p <= (1 - e1) / (2 * sh):
        nu_inf = 0.5 * (1 + e1)
    else:
        nu_inf = 0.5 * (1 + p + (1 - p) * e2)
    return FormulaValues(f_min, f_max, nu2, nu_inf)


def _threshold(c: float, s2: float) -> float:
    num = 2 * abs(c) * (1 - c)
    return math.inf if s2 == 0 else num / s2


def paper_formulas_osc(p: float, t: float) -> FormulaValues:
    """Explicit trajectory formulas for the ``osc`` family.

    The fidelity conditions are open at ``cos t = -1``; there the value is
    the one-sided limit, which the interior expression attains, so that
    boundary is included in the interior branch.
    """
    c, s = math.cos(t), math.sin(t)
    s2 = s * s
    interior = s2 * (4 * c + p * p * s2) / (8 * c * (1 - c)) if c not in (0.0, 1.0) else math.nan
    if -1 <= c < 0 and p <= _threshold(c, s2):
        f_min = interior
    else:
        f_min = 0.5 * (1 + c * c - p * s2)
    if 0 < c < 1 and p <= _threshold(c, s2):
        f_max = interior
    else:
        f_max = 0.5 * (1 + c * c + p * s2)
    nu2 = 0.5 * (1 + c * c + p * p * s2)
    nu_inf = 0.5 * (1 + max(abs(c), abs(c * c + p * s2)))
    return FormulaValues(f_min, f_max, nu2, nu_inf)


def concurrence_exp(p: float, t: float) -> float:
    return max(0.0, math.exp(-t) * (1 - math.sqrt(1 - p * p) * math.sinh(t)))


def concurrence_osc(p: float, t: float) -> float:
    return 0.5 * max(0.0, 2 * abs(math.cos(t)) - math.sqrt(1 - p * p) * math.sin(t) ** 2)


def _boundary(alive, a: float, b: float, iters: int = 200) -> float:
    """Bisect for the switch point of ``alive`` between ``a`` and ``b`` (alive(a) != alive(b))."""
    fa = alive(a)
    for _ in range(iters):
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        if alive(m) == fa:
            a = m
        else:
            b = m
    return 0.5 * (a + b)


def death_time_exp(p: float, t_max: float = 50.0) -> float:
    """First time the ``exp`` concurrence hits zero; ``inf`` if it never does."""
    def alive(t):
        return concurrence_exp(p, t) > 0

    if alive(t_max):
        return math.inf
    return _boundary(alive, 0.0, t_max)


def death_interval_osc(p: float) -> tuple[float, float]:
    """Closed zero set of the ``osc`` concurrence inside (0, pi)."""
    if p >= 1.0:
        return (math.pi / 2, math.pi / 2)

    def alive(t):
        return concurrence_osc(p, t) > 0

    return (_boundary(alive, 0.0, math.pi / 2), _boundary(alive, math.pi, math.pi / 2))


CSV_FIELDS = (
    "t",
    "p",
    "f_min",
    "f_max",
    "nu2_squared",
    "nu_inf_paper",
    "nu_inf_bloch",
    "concurrence",
    "eof",
    "f_min_paper",
    "f_max_paper",
    "nu2_squared_paper",
    "nu_inf_trajectory_paper",
)


@dataclass(frozen=True)
class TrajectorySample:
    t: float
    p: float
    params: ChannelParams
    f_min: float
    f_max: float
    nu2_squared: float
    nu_inf_paper: float
    nu_inf_bloch: float
    concurrence: float
    eof: float
    f_min_paper: float
    f_max_paper: float
    nu2_squared_paper: float
    nu_inf_trajectory_paper: float
    flags: tuple[str, ...] = field(default=())

    def as_row(self) -> dict[str, float]:
        return {name: getattr(self, name) for name in CSV_FIELDS}


def evaluate(family: TrajectoryFamily, t: float) -> TrajectorySample:
    params = sample(family, t)
    explicit = (paper_formulas_exp if family.kind == EXP else paper_formulas_osc)(family.p, t)
    c_traj = (concurrence_exp if family.kind == EXP else concurrence_osc)(family.p, t)
    f_min = f_min_closed(params)[0]
    f_max = f_max_closed(params)[0]
    nu2 = nu2_squared_closed(params)[0]
    nu_p = nu_inf_paper(params)
    c = concurrence_closed(params)
    checks = {
        "f_min": (f_min, explicit.f_min),
        "f_max": (f_max, explicit.f_max),
        "nu2_squared": (nu2, explicit.nu2_squared),
        "nu_inf_paper": (nu_p, explicit.nu_inf),
        "concurrence": (c, c_traj),
    }
    flags = tuple(k for k, (a, b) in checks.items() if not abs(a - b) <= FORMULA_TOL)
    if flags:
        log.warning("%s p=%g t=%r: trajectory formulas disagree on %s", family.kind, family.p, t, flags)
    return TrajectorySample(
        t=float(t),
        p=float(family.p),
        params=params,
        f_min=f_min,
        f_max=f_max,
        nu2_squared=nu2,
        nu_inf_paper=nu_p,
        nu_inf_bloch=nu_inf_bloch(params)[0],
        concurrence=c,
        eof=entanglement_of_formation(c),
        f_min_paper=explicit.f_min,
        f_max_paper=explicit.f_max,
        nu2_squared_paper=explicit.nu2_squared,
        nu_inf_trajectory_paper=explicit.nu_inf,
        flags=flags,
    )


def run_trajectory(family: TrajectoryFamily, t_grid) -> list[TrajectorySample]:
    t_grid = [float(t) for t in t_grid]
    if any(t < 0 for t in t_grid) or any(b < a for a, b in zip(t_grid, t_grid[1:])):
        raise ValueError("time grid must be sorted and non-negative")
    return [evaluate(family, t) for t in t_grid]
