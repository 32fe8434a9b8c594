"""Numerical studies: convergence order, KdV regime, homogenization, linear oracle."""
from dataclasses import dataclass, field

import numpy as np

from . import spectral
from .errors import GridMismatch, InsufficientPoints, InvalidParam
from .model import (Bathymetry, PhysicalParams, WaveState, make_bathymetry,
                    make_initial, soliton_profile)
from .spectral import Grid
from .stepping import StepConfig, cfl_dt, lie_step, run, step_sizes_to


@dataclass
class ErrorTable:
    dts: np.ndarray
    errors: np.ndarray
    slope: float = float("nan")
    residual: float = float("nan")

    def __post_init__(self):
        self.dts = np.asarray(self.dts, dtype=float)
        self.errors = np.asarray(self.errors, dtype=float)
        if self.dts.shape != self.errors.shape:
            raise ValueError("dts and errors must have the same length")
        if np.any(np.diff(self.dts) >= 0):
            raise ValueError("dts must be strictly decreasing")
        if np.any(self.errors < 0):
            raise ValueError("errors must be non-negative")

    def __len__(self):
        return len(self.dts)

    def rows(self):
        return list(zip(self.dts.tolist(), self.errors.tolist()))


@dataclass
class QuotientTable:
    name: str
    parameters: np.ndarray
    quotients: np.ndarray

    def __post_init__(self):
        self.parameters = np.asarray(self.parameters, dtype=float)
        self.quotients = np.asarray(self.quotients, dtype=float)

    def rows(self):
        return list(zip(self.parameters.tolist(), self.quotients.tolist()))


@dataclass
class Scenario:
    """Everything needed to run one simulation except the time step."""

    grid: Grid
    params: PhysicalParams
    bathymetry: Bathymetry
    initial: WaveState
    t_final: float
    label: str = ""

    def run_fixed(self, dt):
        snaps, _ = run(self.initial, self.params, self.bathymetry,
                       StepConfig("fixed", dt_fixed=dt), self.t_final, record=False)
        return snaps[-1]


def example1(bottom="bump_cos", t_final=10.0, n_points=256, half_length=30.0):
    """Sech pulse over ``cos(x)`` (bump) or the compact parabola (ripple)."""
    grid = Grid(half_length, n_points)
    return Scenario(grid, PhysicalParams(0.1, 1.0, 0.5), make_bathymetry(bottom, grid),
                    make_initial("sech_pulse", grid), t_final, f"example1-{bottom}")


def example2(t_final=12.0, n_points=256, half_length=20.0):
    """Gaussian hump over the steep smoothed step."""
    grid = Grid(half_length, n_points)
    params = PhysicalParams(0.1, 1.0, 0.5)
    return Scenario(grid, params, make_bathymetry("smoothed_step", grid, beta=params.beta),
                    make_initial("gaussian", grid), t_final, "example2")


def linear_scenario(t_final=1.0, n_points=256, half_length=30.0, mu=1.0):
    grid = Grid(half_length, n_points)
    return Scenario(grid, PhysicalParams(0.0, mu, 0.0), Bathymetry.flat(grid),
                    make_initial("sech_pulse", grid), t_final, "linear")


def state_error(a, b):
    """Distance in H^1 x L^2 between two states."""
    if a.grid != b.grid:
        raise GridMismatch(f"cannot compare states on {a.grid} and {b.grid}")
    ez = spectral.sobolev_norm(a.zeta - b.zeta, a.grid, 1.0)
    ev = spectral.sobolev_norm(a.v - b.v, a.grid, 0.0)
    return float(np.hypot(ez, ev))


def _distinct_decreasing(dt_list):
    dts = sorted({float(dt) for dt in dt_list}, reverse=True)
    if any(not dt > 0 for dt in dts):
        raise InvalidParam("time steps must be positive")
    if len(dts) < 2:
        raise InsufficientPoints(f"need at least 2 distinct time steps, got {len(dts)}")
    return dts


def estimate_order(table):
    """Least-squares slope of log(error) against log(dt).

    Returns the slope; the RMS residual of the fit is stored on the table.
    """
    if len(table) < 2:
        raise InsufficientPoints(f"need at least 2 rows, got {len(table)}")
    if np.any(table.errors <= 0):
        raise InvalidParam("errors must be positive to fit an order")
    x, y = np.log(table.dts), np.log(table.errors)
    slope, intercept = np.polyfit(x, y, 1)
    table.slope = float(slope)
    table.residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return table.slope


def _fitted(dts, errors):
    table = ErrorTable(dts, errors)
    if np.all(table.errors > 0):
        estimate_order(table)
    return table


def convergence_study(scenario, dt_list, dt_ref=None):
    """Self-convergence errors at ``t_final`` against a finer reference run."""
    dts = _distinct_decreasing(dt_list)
    if dt_ref is None:
        dt_ref = dts[-1] / 4.0
    if dt_ref > dts[-1] / 4.0:
        raise InvalidParam("dt_ref must be at most min(dt_list)/4")
    reference = scenario.run_fixed(dt_ref)
    errors = [state_error(scenario.run_fixed(dt), reference) for dt in dts]
    return _fitted(dts, errors)


def kdv_soliton(alpha, t, grid):
    """KdV soliton ``alpha sech(sqrt(3 alpha/4)(x - alpha t/2))**2``, periodised."""
    if not alpha > 0:
        raise InvalidParam(f"alpha must be positive, got {alpha!r}")
    L = grid.half_length
    x = np.mod(np.asarray(grid.nodes) - 0.5 * alpha * t + L, 2.0 * L) - L
    return soliton_profile(x, alpha)


def kdv_comparison(eps_list, grid, t_final=10.0, alpha=1.0, step_config=None):
    """Max deviation from the shifted KdV soliton after ``t_final``, over ``alpha``.

    For each epsilon the model runs with ``mu = epsilon`` and a flat bottom
    from the soliton pair; the target is ``f0(x - (1 + epsilon*alpha/2) T)``.
    """
    cfg = step_config or StepConfig()
    L = grid.half_length
    quotients = []
    for eps in eps_list:
        eps = float(eps)
        # mu = epsilon; epsilon = 0 falls back to the linear deep-water case mu = 1
        params = PhysicalParams(eps, eps if eps > 0 else 1.0, 0.0)
        initial = make_initial("kdv", grid, alpha=alpha)
        snaps, _ = run(initial, params, Bathymetry.flat(grid), cfg, t_final, record=False)
        shift = (1.0 + 0.5 * eps * alpha) * t_final
        x = np.mod(np.asarray(grid.nodes) - shift + L, 2.0 * L) - L
        target = soliton_profile(x, alpha)
        quotients.append(float(np.max(np.abs(snaps[-1].zeta - target)) / alpha))
    return QuotientTable("epsilon", list(map(float, eps_list)), quotients)


def run_paired(initial, params, bathy_a, bathy_b, t_final, step_config=None):
    """Advance two bottoms from the same data on one shared step sequence.

    Each step uses the smaller of the two CFL choices.
    """
    cfg = step_config or StepConfig()
    a, b = initial.copy(), initial.copy()
    while a.time < t_final:
        dt = min(cfl_dt(a, params, a.grid, cfg), cfl_dt(b, params, b.grid, cfg))
        dt, lands = step_sizes_to(a.time, t_final, dt)
        a = lie_step(a, params, bathy_a, dt)
        b = lie_step(b, params, bathy_b, dt)
        if lands:
            a.time = b.time = t_final
    return a, b


def homogenization_sweep(alpha_list, params=None, grid=None, t_final=10.0,
                         step_config=None):
    """Difference between ``b = cos(alpha x)`` and flat-bottom runs at ``t_final``.

    The difference is normalised by ``max|zeta0|``.
    """
    params = params or PhysicalParams(0.05, 1.0, 0.5)
    grid = grid or Grid(30.0, 512)
    initial = make_initial("sech2", grid)
    scale = float(np.max(np.abs(initial.zeta)))
    flat = Bathymetry.flat(grid)
    quotients = []
    for alpha in alpha_list:
        rough = make_bathymetry("cos_alpha", grid, alpha=float(alpha))
        a, b = run_paired(initial, params, rough, flat, t_final, step_config)
        quotients.append(float(np.max(np.abs(a.zeta - b.zeta)) / scale))
    return QuotientTable("alpha", list(map(float, alpha_list)), quotients)


def exact_linear_propagator(initial, mu, t):
    """Exact flow of ``zeta_t = H_mu v, v_t = -zeta_x`` over time ``t``.

    Each mode rotates with frequency ``omega = sqrt(xi tanh(sqrt(mu) xi))``:
    ``exp(tM) = cos(omega t) I + sin(omega t)/omega M`` with
    ``M = [[0, h], [d, 0]]``, ``h = -i tanh(sqrt(mu) xi)``, ``d = i xi``
    (the same discrete symbols as the solver, so Nyquist stays frozen).
    """
    if not mu > 0:
        raise InvalidParam(f"mu must be positive, got {mu!r}")
    grid = initial.grid
    h = spectral.h_mu_symbol(grid, mu)
    d = -spectral.derivative_symbol(grid)
    omega = np.sqrt(-np.real(h * d))
    c = np.cos(omega * t)
    # sin(omega t)/omega -> t as omega -> 0
    s = np.where(omega > 0, np.sin(omega * t) / np.where(omega > 0, omega, 1.0), t)
    z_hat = spectral.forward_transform(initial.zeta)
    v_hat = spectral.forward_transform(initial.v)
    z_new = c * z_hat + s * h * v_hat
    v_new = c * v_hat + s * d * z_hat
    # roundoff scales with the input spectrum, not the (possibly cancelled) output
    gain = max(1.0, float(np.max(np.abs(s * h))), float(np.max(np.abs(s * d))))
    scale = gain * max(float(np.max(np.abs(z_hat))), float(np.max(np.abs(v_hat))))
    return WaveState(grid, spectral.inverse_transform(z_new, scale),
                     spectral.inverse_transform(v_new, scale), initial.time + t)


def linear_oracle_check(grid=None, mu=1.0, dt_list=(0.01, 0.005, 0.0025, 0.00125),
                        t_final=1.0):
    """Errors of the full splitting solver against the exact linear flow."""
    grid = grid or Grid(30.0, 256)
    dts = _distinct_decreasing(dt_list)
    scenario = Scenario(grid, PhysicalParams(0.0, mu, 0.0), Bathymetry.flat(grid),
                        make_initial("sech_pulse", grid), t_final, "linear")
    if t_final == 0:
        return ErrorTable(dts, np.zeros(len(dts)))
    exact = exact_linear_propagator(scenario.initial, mu, t_final)
    errors = [state_error(scenario.run_fixed(dt), exact) for dt in dts]
    return _fitted(dts, errors)
