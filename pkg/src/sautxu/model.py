"""Deep-water Saut-Xu system with a variable bottom.

Unknowns are the surface elevation ``zeta`` and the surface velocity ``v``;
the bottom is ``-1 + beta*b``. The right-hand sides here are the dispersive
half of the split system; the transport half lives in ``stepping``.
"""
from dataclasses import dataclass

import numpy as np

from . import spectral
from .errors import GridMismatch, InvalidParam, NoConvergence, UnknownKind
from .spectral import Grid


@dataclass(frozen=True)
class PhysicalParams:
    """Nonlinearity ``epsilon``, shallowness ``mu`` and bathymetry ``beta``."""

    epsilon: float
    mu: float
    beta: float

    def __post_init__(self):
        for name in ("epsilon", "beta"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise InvalidParam(f"{name} must lie in [0, 1], got {value!r}")
        if not (self.mu > 0 and np.isfinite(self.mu)):
            raise InvalidParam(f"mu must be positive, got {self.mu!r}")

    @property
    def delta(self):
        return max(self.epsilon, self.beta)

    @property
    def eps_sqrt_mu(self):
        return self.epsilon * np.sqrt(self.mu)


@dataclass
class Bathymetry:
    grid: Grid
    samples: np.ndarray
    kind: str = "custom"

    def __post_init__(self):
        self.samples = self.grid.check(self.samples, "bathymetry")
        if not np.all(np.isfinite(self.samples)):
            raise InvalidParam("bathymetry samples must be finite")

    @property
    def sup_norm(self):
        return float(np.max(np.abs(self.samples)))

    @classmethod
    def flat(cls, grid):
        return cls(grid, np.zeros(grid.n_points), "flat")


@dataclass
class WaveState:
    grid: Grid
    zeta: np.ndarray
    v: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        self.zeta = self.grid.check(self.zeta, "zeta")
        self.v = self.grid.check(self.v, "v")

    def copy(self):
        return WaveState(self.grid, self.zeta.copy(), self.v.copy(), self.time)

    def is_finite(self):
        return bool(np.all(np.isfinite(self.zeta)) and np.all(np.isfinite(self.v)))

    @classmethod
    def zeros(cls, grid, time=0.0):
        return cls(grid, np.zeros(grid.n_points), np.zeros(grid.n_points), time)


@dataclass
class Tendency:
    d_zeta: np.ndarray
    d_v: np.ndarray


def _same_grid(state, bathy):
    if bathy is not None and bathy.grid != state.grid:
        raise GridMismatch(f"bathymetry grid {bathy.grid} != state grid {state.grid}")


def dispersive_rhs(state, params, bathy=None):
    """Time derivative of (zeta, v) under the dispersive subsystem.

    Products are taken pointwise on the collocation grid, multipliers are
    spectral, and nothing is dealiased.
    """
    _same_grid(state, bathy)
    grid, mu = state.grid, params.mu
    zeta, v = state.zeta, state.v
    em = params.eps_sqrt_mu
    h = spectral.h_mu_symbol(grid, mu)
    d = spectral.derivative_symbol(grid)

    def mult(f_hat, symbol):
        scale = np.max(np.abs(f_hat)) * np.max(np.abs(symbol))
        return spectral.inverse_transform(symbol * f_hat, scale)

    z_hat = spectral.forward_transform(zeta)
    v_hat = spectral.forward_transform(v)

    h_v = mult(v_hat, h)
    dx_zeta = mult(z_hat, d)
    d_v = -dx_zeta
    d_zeta = h_v

    if em != 0.0:
        dx_v = mult(v_hat, d)
        dx_h_zeta = mult(z_hat, d * h)
        dx_h_v = mult(v_hat, d * h)
        h2_v = mult(v_hat, h * h)
        h2_dx_v = mult(v_hat, h * h * d)
        nonlinear = (
            0.5 * spectral.apply_multiplier(v * dx_h_zeta, h, grid)
            + spectral.apply_multiplier(zeta * dx_h_v, h, grid)
            + zeta * dx_v
            - 0.5 * dx_zeta * h2_v
        )
        d_zeta = d_zeta - em * nonlinear
        d_v = d_v + 0.5 * em * (dx_zeta * dx_h_zeta + v * h2_dx_v)

    if params.beta != 0.0 and bathy is not None:
        b_v = spectral.apply_b_mu(v, bathy.samples, grid, mu)
        d_zeta = d_zeta + params.beta * np.sqrt(mu) * spectral.derivative(b_v, grid)

    return Tendency(d_zeta, d_v)


def transport_speeds(state, params):
    """Advection speeds ``(w, v)`` with ``w = (H_mu**2 + 1) v``."""
    w = spectral.apply_smoothing(state.v, state.grid, params.mu)
    return w, state.v


def _h_dx_zeta(state, params):
    grid = state.grid
    symbol = spectral.h_mu_symbol(grid, params.mu) * spectral.derivative_symbol(grid)
    return spectral.apply_multiplier(state.zeta, symbol, grid)


def to_tilde(state, params):
    """Near-identity change of variables used in the model derivation."""
    em = params.eps_sqrt_mu
    v = state.v + 0.5 * em * state.v * _h_dx_zeta(state, params)
    zeta = state.zeta - 0.25 * em * state.v ** 2
    return WaveState(state.grid, zeta, v, state.time)


def from_tilde(state, params, tol=1e-12, max_iter=100):
    """Invert ``to_tilde`` by fixed-point iteration."""
    em = params.eps_sqrt_mu
    if em == 0.0 or not np.any(state.v):
        return state.copy()
    size = max(np.max(np.abs(state.zeta)), np.max(np.abs(state.v)))
    if em * (1.0 + size) >= 0.5:
        raise InvalidParam(
            f"eps*sqrt(mu)*(1+|U|_inf) = {em * (1.0 + size):.3g} too large for the inversion")
    current = state.copy()
    for _ in range(max_iter):
        h_dx_zeta = _h_dx_zeta(current, params)
        zeta = state.zeta + 0.25 * em * current.v ** 2
        v = state.v - 0.5 * em * current.v * h_dx_zeta
        change = max(np.max(np.abs(zeta - current.zeta)), np.max(np.abs(v - current.v)))
        current = WaveState(state.grid, zeta, v, state.time)
        if change < tol:
            return current
    raise NoConvergence(f"from_tilde did not converge in {max_iter} iterations")


BATHYMETRY_KINDS = ("flat", "bump_cos", "ripple", "smoothed_step", "cos_alpha")
INITIAL_KINDS = ("sech_pulse", "gaussian", "sech2", "kdv")


def make_bathymetry(kind, grid, *, alpha=None, beta=None):
    """Evaluate one of the catalogued bottom profiles at the grid nodes.

    ``smoothed_step`` needs ``beta`` (it is part of the profile formula) and
    ``cos_alpha`` needs ``alpha``.
    """
    x = np.asarray(grid.nodes)
    if kind == "flat":
        b = np.zeros_like(x)
    elif kind == "bump_cos":
        b = np.cos(x)
    elif kind == "ripple":
        b = np.where((x >= 5.0) & (x <= 11.0), 0.5 - (x - 8.0) ** 2 / 18.0, 0.0)
    elif kind == "smoothed_step":
        if beta is None:
            raise InvalidParam("smoothed_step bathymetry needs beta")
        b = beta / 4.0 * (1.0 + np.tanh(100.0 * (x - 2.0))) * (1.0 - np.tanh(100.0 * (x - 8.0)))
    elif kind == "cos_alpha":
        if alpha is None or not alpha > 0:
            raise InvalidParam(f"cos_alpha bathymetry needs alpha > 0, got {alpha!r}")
        b = np.cos(alpha * x)
    else:
        raise UnknownKind(f"unknown bathymetry kind {kind!r}")
    return Bathymetry(grid, b, kind)


def soliton_profile(x, alpha):
    """``alpha * sech(sqrt(3 alpha / 4) x)**2``."""
    return alpha * spectral.sech(np.sqrt(0.75 * alpha) * x) ** 2


def make_initial(kind, grid, *, alpha=1.0):
    """Initial states with ``v0 = zeta0``.

    sech_pulse: sech(sqrt(3)/2 x); gaussian: exp(-x**2);
    sech2: sech(sqrt(3)/2 x)**2; kdv: alpha sech(sqrt(3 alpha/4) x)**2.
    """
    x = np.asarray(grid.nodes)
    if kind == "sech_pulse":
        zeta = spectral.sech(np.sqrt(3.0) / 2.0 * x)
    elif kind == "gaussian":
        zeta = np.exp(-x ** 2)
    elif kind == "sech2":
        zeta = spectral.sech(np.sqrt(3.0) / 2.0 * x) ** 2
    elif kind == "kdv":
        if not alpha > 0:
            raise InvalidParam(f"kdv initial data needs alpha > 0, got {alpha!r}")
        zeta = soliton_profile(x, alpha)
    else:
        raise UnknownKind(f"unknown initial kind {kind!r}")
    return WaveState(grid, zeta, zeta.copy(), 0.0)
