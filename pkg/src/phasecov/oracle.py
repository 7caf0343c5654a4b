"""Brute-force verification of the closed-form measures.

Pure inputs are scanned on a deterministic (polar x azimuth) grid of the
Bloch sphere; the best grid point is then refined by golden-section search
in ``x3`` along its azimuth. Nothing here assumes the objective is
independent of the azimuth: the grid samples it, and the refinement keeps
the best azimuth found.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .channel import ChannelParams, apply_bloch, invariant_state, require_cp
from .errors import NoConvergence
from .measures import f_max_closed, f_min_closed, nu_p_general

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class GridSpec:
    n_polar: int = 4001
    n_azimuth: int = 64
    refinement: int = 40

    def __post_init__(self):
        if self.n_polar < 2 or self.n_azimuth < 1 or self.refinement < 0:
            raise ValueError(f"invalid grid {self}")


DEFAULT_GRID = GridSpec()


@dataclass(frozen=True)
class OracleReport:
    value: float
    argument: np.ndarray
    closed_form_value: float
    iterations: int = 0

    @property
    def absolute_gap(self) -> float:
        return abs(self.value - self.closed_form_value)


@lru_cache(maxsize=8)
def _grid_points(grid: GridSpec) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    x3 = np.linspace(-1.0, 1.0, grid.n_polar)
    phi = 2.0 * np.pi * np.arange(grid.n_azimuth) / grid.n_azimuth
    pts = _sphere(x3[:, None], phi[None, :])
    pts.setflags(write=False)
    return x3, phi, pts


def _sphere(x3, phi) -> np.ndarray:
    x3, phi = np.broadcast_arrays(np.asarray(x3, dtype=float), np.asarray(phi, dtype=float))
    r = np.sqrt(np.clip(1.0 - x3 * x3, 0.0, None))
    return np.stack([r * np.cos(phi), r * np.sin(phi), x3], axis=-1)


def _golden_max(f, a: float, b: float, passes: int) -> tuple[float, float]:
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(passes):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    candidates = [(fc, c), (fd, d), (f(a), a), (f(b), b)]
    best = max(candidates, key=lambda t: t[0])
    return best[1], best[0]


def _search(objective, grid: GridSpec, maximize: bool, values=None) -> tuple[float, np.ndarray]:
    """Optimise ``objective(points[..., 3]) -> values[...]`` over pure states.

    ``values`` may carry the objective already evaluated on the grid.
    Ties on the grid go to the smallest row-major index (numpy's argmax).
    """
    sign = 1.0 if maximize else -1.0
    x3, phi, pts = _grid_points(grid)
    if values is None:
        values = objective(pts)
    flat = int(np.argmax(values) if maximize else np.argmin(values))
    i, j = divmod(flat, grid.n_azimuth)
    best_val = sign * float(values[i, j])
    best_arg = pts[i, j].copy()
    if grid.refinement > 0:
        lo, hi = x3[max(i - 1, 0)], x3[min(i + 1, grid.n_polar - 1)]
        az = phi[j]

        def line(t):
            return sign * float(objective(_sphere(t, az)))

        t, val = _golden_max(line, lo, hi, grid.refinement)
        if val > best_val:
            best_val, best_arg = val, _sphere(t, az)
    return sign * best_val, best_arg


def _fidelity(params: ChannelParams):
    def f(x):
        return 0.5 * (1.0 + np.sum(x * apply_bloch(params, x), axis=-1))

    return f


def _schatten(params: ChannelParams, p: float):
    def f(x):
        s = np.linalg.norm(apply_bloch(params, x), axis=-1)
        hi, lo = 0.5 * (1 + s), np.clip(0.5 * (1 - s), 0.0, None)
        if math.isinf(p):
            return hi
        return (hi**p + lo**p) ** (1.0 / p)

    return f


def _bilinear_best_q(params: ChannelParams):
    # inner max over Q: y parallel to the output Bloch vector
    l1, l3, ls = params.as_tuple()

    def f(x):
        out = apply_bloch(params, x)
        n = np.linalg.norm(out, axis=-1, keepdims=True)
        y = np.divide(out, n, out=np.zeros_like(out), where=n > 0)
        return 0.5 * (
            1
            + ls * y[..., 2]
            + l1 * x[..., 0] * y[..., 0]
            + l1 * x[..., 1] * y[..., 1]
            + l3 * x[..., 2] * y[..., 2]
        )

    return f


def brute_fidelity_extrema(
    params: ChannelParams, grid: GridSpec = DEFAULT_GRID
) -> tuple[OracleReport, OracleReport]:
    require_cp(params)
    obj = _fidelity(params)
    lo, lo_arg = _search(obj, grid, maximize=False)
    hi, hi_arg = _search(obj, grid, maximize=True)
    return (
        OracleReport(lo, lo_arg, f_min_closed(params)[0]),
        OracleReport(hi, hi_arg, f_max_closed(params)[0]),
    )


def brute_output_norm(params: ChannelParams, p: float, grid: GridSpec = DEFAULT_GRID) -> OracleReport:
    """Maximal output Schatten p-norm over pure inputs (``p = math.inf`` allowed).

    The reported value is the norm itself, not its square.
    """
    require_cp(params)
    p = float(p)
    if not p >= 1:
        raise ValueError(f"p must be >= 1, got {p!r}")
    value, arg = _search(_schatten(params, p), grid, maximize=True)
    return OracleReport(value, arg, nu_p_general(params, p))


def brute_inf_double_max(params: ChannelParams, grid: GridSpec = DEFAULT_GRID) -> OracleReport:
    """``max_P max_Q Tr(Q L[P])`` with the inner maximum taken analytically."""
    require_cp(params)
    value, arg = _search(_bilinear_best_q(params), grid, maximize=True)
    return OracleReport(value, arg, nu_p_general(params, math.inf))


def brute_fixed_point(params: ChannelParams, tol: float = 1e-14, max_iter: int = 10_000) -> OracleReport:
    """Iterate the channel from the maximally mixed state.

    ``value`` is the distance from the last iterate to ``invariant_state``.
    """
    require_cp(params)
    if abs(params.lambda3) >= 1.0 - 1e-12:
        raise NoConvergence(f"|lambda3| = {abs(params.lambda3)!r}: no contraction towards a fixed point")
    v = np.zeros(3)
    n = 0
    for n in range(1, max_iter + 1):
        nxt = apply_bloch(params, v)
        step = float(np.linalg.norm(nxt - v))
        v = nxt
        if step < tol:
            break
    target = invariant_state(params).bloch
    return OracleReport(float(np.linalg.norm(v - target)), v, 0.0, iterations=n)


AUDIT_KEYS = ("f_min", "f_max", "nu2_squared", "nu_inf_bloch", "nu_inf_double_max", "nu_inf_paper")


def audit_channel(params: ChannelParams, grid: GridSpec = DEFAULT_GRID) -> dict[str, float]:
    """Absolute gaps between every closed form and its brute-force value.

    ``nu_inf_paper`` is a diagnostic: it is expected to differ where the
    output norm peaks off the poles.
    """
    from .measures import nu2_squared_closed, nu_inf_paper

    require_cp(params)
    _, _, pts = _grid_points(grid)
    out = apply_bloch(params, pts)
    norm = np.linalg.norm(out, axis=-1)
    fid = _fidelity(params)
    two, inf, dbl = _schatten(params, 2.0), _schatten(params, math.inf), _bilinear_best_q(params)
    fid_vals = 0.5 * (1.0 + np.einsum("...k,...k->...", pts, out))
    lo, _ = _search(fid, grid, False, fid_vals)
    hi, _ = _search(fid, grid, True, fid_vals)
    lo_norm = np.clip(0.5 * (1 - norm), 0.0, None)
    nu2, _ = _search(two, grid, True, np.sqrt((0.5 * (1 + norm)) ** 2 + lo_norm**2))
    nu_inf, _ = _search(inf, grid, True, 0.5 * (1 + norm))
    nu_dbl, _ = _search(dbl, grid, True, dbl(pts))
    return {
        "f_min": abs(lo - f_min_closed(params)[0]),
        "f_max": abs(hi - f_max_closed(params)[0]),
        "nu2_squared": abs(nu2**2 - nu2_squared_closed(params)[0]),
        "nu_inf_bloch": abs(nu_inf - nu_p_general(params, math.inf)),
        "nu_inf_double_max": max(abs(nu_dbl - nu_p_general(params, math.inf)), abs(nu_dbl - nu_inf)),
        "nu_inf_paper": abs(nu_inf - nu_inf_paper(params)),
    }
