"""Lie splitting: forward-Euler dispersive substep, Lax-Wendroff transport substep."""
from dataclasses import asdict, dataclass, field

import numpy as np

from . import spectral
from .errors import CflViolation, InvalidParam, NonFinite
from .model import WaveState, dispersive_rhs, transport_speeds


# Allowed growth rate, per unit time, of the stiffest mode under forward Euler.
DISPERSIVE_GROWTH_RATE = 0.1


def default_dt_max(grid, mu):
    """Largest step keeping forward Euler tame on the stiffest dispersive mode.

    Euler multiplies a mode of frequency omega by ``sqrt(1 + (omega dt)**2)``
    per step, i.e. ``exp(omega**2 dt / 2)`` per unit time. The step is capped
    so this rate stays below ``DISPERSIVE_GROWTH_RATE`` and ``omega dt <= 0.5``.
    """
    xi = grid.max_wavenumber
    omega = np.sqrt(xi * np.tanh(np.sqrt(mu) * xi))
    return min(0.5 / omega, 2.0 * DISPERSIVE_GROWTH_RATE / omega ** 2)


@dataclass
class StepConfig:
    dt_mode: str = "cfl"
    dt_fixed: float = None
    cfl_sigma: float = 0.5
    dt_max: float = None

    def __post_init__(self):
        if self.dt_mode not in ("fixed", "cfl"):
            raise InvalidParam(f"dt_mode must be 'fixed' or 'cfl', got {self.dt_mode!r}")
        if self.dt_mode == "fixed" and not (self.dt_fixed is not None and self.dt_fixed > 0):
            raise InvalidParam("fixed dt_mode needs dt_fixed > 0")
        if not (0.0 < self.cfl_sigma < 1.0):
            raise InvalidParam(f"cfl_sigma must lie in (0, 1), got {self.cfl_sigma!r}")
        if self.dt_max is not None and not self.dt_max > 0:
            raise InvalidParam(f"dt_max must be positive, got {self.dt_max!r}")

    def resolved_dt_max(self, grid, mu):
        return self.dt_max if self.dt_max is not None else default_dt_max(grid, mu)


@dataclass
class StepRecord:
    t: float
    dt: float
    energy0: float
    max_zeta: float
    max_v: float
    mass: float
    momentum: float


@dataclass
class Diagnostics:
    records: list = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def column(self, name):
        return np.array([getattr(r, name) for r in self.records])

    def as_dicts(self):
        return [asdict(r) for r in self.records]


def record_for(state, dt, params):
    dx = state.grid.dx
    return StepRecord(
        t=float(state.time),
        dt=float(dt),
        energy0=float(spectral.energy(state, 0, params.mu)),
        max_zeta=float(np.max(np.abs(state.zeta))),
        max_v=float(np.max(np.abs(state.v))),
        mass=float(np.sum(state.zeta) * dx),
        momentum=float(np.sum(state.v) * dx),
    )


def _check_dt(dt):
    if not (dt > 0 and np.isfinite(dt)):
        raise InvalidParam(f"dt must be positive, got {dt!r}")


def dispersive_step(state, params, bathy, dt):
    """One explicit Euler step of the dispersive subsystem."""
    _check_dt(dt)
    rhs = dispersive_rhs(state, params, bathy)
    out = WaveState(state.grid, state.zeta + dt * rhs.d_zeta,
                    state.v + dt * rhs.d_v, state.time + dt)
    if not out.is_finite():
        raise NonFinite(f"non-finite values after dispersive step at t={out.time:g}",
                        state=state)
    return out


def lax_wendroff_advect(u, speed, dt, dx):
    """Lax-Wendroff step for ``u_t + a(x) u_x = 0`` with the speed frozen at nodes."""
    up = np.roll(u, -1)
    um = np.roll(u, 1)
    c = speed * dt / dx
    return u - 0.5 * c * (up - um) + 0.5 * c * c * (up - 2.0 * u + um)


def lax_wendroff_conservative(u, coeff, dt, dx):
    """Conservative Lax-Wendroff step for ``u_t + (coeff/2 u**2)_x = 0``.

    The Jacobian at half points uses the average ``(u_j + u_{j+1}) / 2``.
    Fluxes telescope, so ``sum(u)`` is preserved.
    """
    up = np.roll(u, -1)
    f = 0.5 * coeff * u * u
    fp = np.roll(f, -1)
    a_half = coeff * 0.5 * (u + up)
    flux = 0.5 * (f + fp) - 0.5 * dt / dx * a_half * (fp - f)
    return u - dt / dx * (flux - np.roll(flux, 1))


def transport_cfl_number(state, params, dt, w=None):
    if w is None:
        w, _ = transport_speeds(state, params)
    s = 0.5 * params.eps_sqrt_mu
    speed = s * np.max(np.maximum(np.abs(w), 3.0 * np.abs(state.v)))
    return speed * dt / state.grid.dx


def transport_step(state, params, dt):
    """One Lax-Wendroff step of the transport subsystem.

    zeta is advected by the frozen speed ``(eps sqrt(mu)/2) w`` and v solves
    the Burgers-type law with flux ``(3 eps sqrt(mu)/4) v**2``.
    """
    _check_dt(dt)
    s = 0.5 * params.eps_sqrt_mu
    if s == 0.0:
        return WaveState(state.grid, state.zeta.copy(), state.v.copy(), state.time + dt)
    w, _ = transport_speeds(state, params)
    lam = transport_cfl_number(state, params, dt, w)
    if not lam < 1.0:
        raise CflViolation(f"transport CFL number {lam:.4g} >= 1 at t={state.time:g}")
    dx = state.grid.dx
    zeta = lax_wendroff_advect(state.zeta, s * w, dt, dx)
    v = lax_wendroff_conservative(state.v, 3.0 * s, dt, dx)
    out = WaveState(state.grid, zeta, v, state.time + dt)
    if not out.is_finite():
        raise NonFinite(f"non-finite values after transport step at t={out.time:g}",
                        state=state)
    return out


def lie_step(state, params, bathy, dt):
    """Dispersive substep followed by the transport substep."""
    out = transport_step(dispersive_step(state, params, bathy, dt), params, dt)
    out.time = state.time + dt
    return out


def max_transport_speed(state, params):
    w, v = transport_speeds(state, params)
    s = 0.5 * params.eps_sqrt_mu
    return float(np.max(np.maximum(s * np.abs(w), 3.0 * s * np.abs(v))))


def cfl_dt(state, params, grid, cfg):
    """Time step for the next Lie step under ``cfg``."""
    s_max = max_transport_speed(state, params)
    if cfg.dt_mode == "fixed":
        lam = s_max * cfg.dt_fixed / grid.dx
        if not lam < 1.0:
            raise CflViolation(f"dt_fixed={cfg.dt_fixed:g} gives CFL number {lam:.4g} >= 1")
        return cfg.dt_fixed
    dt_max = cfg.resolved_dt_max(grid, params.mu)
    if s_max == 0.0:
        return dt_max
    return min(cfg.cfl_sigma * grid.dx / s_max, dt_max)


# Remaining intervals shorter than this fraction of a step are merged into it.
_MERGE_FRACTION = 1e-6


def step_sizes_to(t, target, dt):
    """Clip ``dt`` so the step from ``t`` lands on ``target`` when close."""
    remaining = target - t
    if dt >= remaining * (1.0 - _MERGE_FRACTION):
        return remaining, True
    return dt, False


def run(initial, params, bathy, cfg, t_final, snapshot_times=None, record=True):
    """Integrate from ``initial`` to ``t_final`` with Lie steps.

    Steps are clipped to land exactly on every snapshot time and on
    ``t_final``. Returns ``(snapshots, diagnostics)``; snapshots are deep
    copies, one per requested time (default: ``[t_final]``).
    """
    t0 = initial.time
    if t_final < t0:
        raise InvalidParam(f"t_final={t_final!r} precedes initial time {t0!r}")
    if snapshot_times is None:
        snapshot_times = [t_final]
    snapshot_times = [float(t) for t in snapshot_times]
    if any(b < a for a, b in zip(snapshot_times, snapshot_times[1:])):
        raise InvalidParam("snapshot_times must be sorted")
    if snapshot_times and (snapshot_times[0] < min(0.0, t0) or snapshot_times[-1] > t_final):
        raise InvalidParam("snapshot_times must lie within [0, t_final]")

    diag = Diagnostics()
    snapshots = []
    state = initial.copy()
    pending = [t for t in snapshot_times if t > t0]
    for _ in range(len(snapshot_times) - len(pending)):
        snapshots.append(state.copy())
    targets = sorted(set(pending) | ({t_final} if t_final > t0 else set()))

    for target in targets:
        while state.time < target:
            dt = cfl_dt(state, params, state.grid, cfg)
            dt, lands = step_sizes_to(state.time, target, dt)
            try:
                new = lie_step(state, params, bathy, dt)
            except NonFinite as exc:
                raise NonFinite(str(exc), state=state) from exc
            if lands:
                new.time = target
            state = new
            if record:
                diag.records.append(record_for(state, dt, params))
        while pending and pending[0] <= state.time:
            pending.pop(0)
            snapshots.append(state.copy())
    return snapshots, diag
