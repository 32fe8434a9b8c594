"""Periodic grid, discrete Fourier transforms and Fourier multipliers.

Fields are plain 1-d float64 arrays sampled at ``Grid.nodes``; spectra are
complex arrays in numpy's FFT ordering, aligned with ``Grid.wavenumbers``.

The multipliers used by the model are

* ``derivative``      : i*xi
* ``apply_h_mu``      : -i*tanh(sqrt(mu)*xi)
* ``apply_smoothing`` : sech(sqrt(mu)*xi)**2   (equals H_mu**2 + 1)
* ``apply_b_mu``      : sech(sqrt(mu) D) (b * sech(sqrt(mu) D) u)

Odd symbols are zeroed at the Nyquist mode, even symbols are kept there.
"""
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GridMismatch, InvalidParam, SymmetryViolation

# Imaginary residue allowed by inverse_transform, relative to max|U|/N.
IMAG_TOLERANCE = 1e-10


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid on [-half_length, half_length)."""

    half_length: float
    n_points: int

    def __post_init__(self):
        n = self.n_points
        if isinstance(n, bool) or int(n) != n or n < 2 or (int(n) & (int(n) - 1)):
            raise InvalidParam(f"n_points must be a power of two >= 2, got {n!r}")
        if not (np.isfinite(self.half_length) and self.half_length > 0):
            raise InvalidParam(f"half_length must be positive, got {self.half_length!r}")
        object.__setattr__(self, "n_points", int(n))
        object.__setattr__(self, "half_length", float(self.half_length))

    @property
    def length(self):
        return 2.0 * self.half_length

    @property
    def dx(self):
        return self.length / self.n_points

    @cached_property
    def nodes(self):
        x = -self.half_length + np.arange(self.n_points) * self.dx
        x.flags.writeable = False
        return x

    @cached_property
    def wavenumbers(self):
        # pi*j/L for j in {-N/2, ..., N/2-1}, FFT ordering
        j = np.fft.fftfreq(self.n_points, d=1.0 / self.n_points)
        xi = np.pi * j / self.half_length
        xi.flags.writeable = False
        return xi

    @property
    def nyquist_index(self):
        return self.n_points // 2

    @property
    def max_wavenumber(self):
        return np.pi * (self.n_points // 2) / self.half_length

    def check(self, u, name="field"):
        """Return ``u`` as a float array, raising GridMismatch on a wrong length."""
        arr = np.asarray(u, dtype=float)
        if arr.shape != (self.n_points,):
            raise GridMismatch(
                f"{name} has shape {arr.shape}, grid expects ({self.n_points},)")
        return arr


def forward_transform(u):
    """DFT: ``U_k = sum_j u_j exp(-2 pi i j k / N)``."""
    return np.fft.fft(np.asarray(u, dtype=float))


def inverse_transform(U, scale=0.0):
    """Inverse DFT returning a real field.

    Raises SymmetryViolation when the imaginary part exceeds
    ``1e-10 * max(max|U|, scale) / N``, which means the coefficients were not
    Hermitian. ``scale`` lets callers account for roundoff inherited from a
    larger spectrum that a multiplier has since attenuated.
    """
    U = np.asarray(U)
    n = U.shape[-1]
    u = np.fft.ifft(U)
    residue = np.max(np.abs(u.imag)) if n else 0.0
    bound = IMAG_TOLERANCE * max(np.max(np.abs(U)), scale) / n if n else 0.0
    if residue > bound:
        raise SymmetryViolation(
            f"imaginary residue {residue:.3e} exceeds bound {bound:.3e}")
    return np.ascontiguousarray(u.real)


def _symbol_values(symbol, grid):
    if callable(symbol):
        values = symbol(np.asarray(grid.wavenumbers))
    else:
        values = symbol
    values = np.broadcast_to(np.asarray(values, dtype=complex), (grid.n_points,))
    return values


def apply_multiplier(u, symbol, grid):
    """Apply the Fourier multiplier ``symbol`` to the real field ``u``.

    ``symbol`` is either a callable evaluated on ``grid.wavenumbers`` or an
    array (or scalar) already aligned with them.
    """
    u = grid.check(u)
    values = _symbol_values(symbol, grid)
    u_hat = forward_transform(u)
    scale = np.max(np.abs(u_hat)) * np.max(np.abs(values))
    return inverse_transform(values * u_hat, scale)


def _check_mu(mu):
    if not (mu > 0 and np.isfinite(mu)):
        raise InvalidParam(f"mu must be positive, got {mu!r}")


def sech(x):
    """Overflow-free sech."""
    a = np.exp(-np.abs(x))
    return 2.0 * a / (1.0 + a * a)


def derivative_symbol(grid):
    s = 1j * np.asarray(grid.wavenumbers)
    s[grid.nyquist_index] = 0.0
    return s


def h_mu_symbol(grid, mu):
    _check_mu(mu)
    s = -1j * np.tanh(np.sqrt(mu) * np.asarray(grid.wavenumbers))
    s[grid.nyquist_index] = 0.0
    return s


def sech_symbol(grid, mu):
    _check_mu(mu)
    return sech(np.sqrt(mu) * np.asarray(grid.wavenumbers))


def smoothing_symbol(grid, mu):
    return sech_symbol(grid, mu) ** 2


def derivative(u, grid):
    return apply_multiplier(u, derivative_symbol(grid), grid)


def apply_h_mu(u, grid, mu):
    return apply_multiplier(u, h_mu_symbol(grid, mu), grid)


def apply_smoothing(u, grid, mu):
    """Apply ``H_mu**2 + 1``, i.e. the sech**2 low-pass multiplier."""
    return apply_multiplier(u, smoothing_symbol(grid, mu), grid)


def apply_b_mu(u, b, grid, mu):
    """Bathymetry operator ``S(b * S(u))`` with ``S = sech(sqrt(mu) D)``."""
    b = grid.check(b, "bathymetry")
    s = sech_symbol(grid, mu)
    return apply_multiplier(b * apply_multiplier(u, s, grid), s, grid)


def _weighted_norm(u, grid, weight):
    u = grid.check(u)
    U = forward_transform(u)
    total = np.sum(weight * (U.real ** 2 + U.imag ** 2))
    return float(np.sqrt(grid.length / grid.n_points ** 2 * total))


def sobolev_norm(u, grid, s=0.0):
    """Discrete H^s norm, Parseval quadrature of ``||(1 - d_xx)^(s/2) u||_2``."""
    if s < 0:
        raise InvalidParam(f"Sobolev index must be >= 0, got {s!r}")
    return _weighted_norm(u, grid, (1.0 + np.asarray(grid.wavenumbers) ** 2) ** s)


def half_derivative_norm(u, grid):
    """Discrete L2 norm of ``|D|^(1/2) u``."""
    return _weighted_norm(u, grid, np.abs(grid.wavenumbers))


def energy(state, order, mu):
    """Energy of a (zeta, v) state at Sobolev order ``order``.

    ``(1/sqrt(mu)) |L^N zeta|^2 + ||D|^(1/2) L^N zeta|^2 + |v|_{H^N}^2``
    with ``L = (1 - d_xx)^(1/2)``.
    """
    _check_mu(mu)
    if int(order) != order or order < 0:
        raise InvalidParam(f"order must be a non-negative integer, got {order!r}")
    grid = state.grid
    xi = np.asarray(grid.wavenumbers)
    lam = (1.0 + xi ** 2) ** order
    zeta_l2 = _weighted_norm(state.zeta, grid, lam) ** 2
    zeta_half = _weighted_norm(state.zeta, grid, lam * np.abs(xi)) ** 2
    v_norm = _weighted_norm(state.v, grid, lam) ** 2
    return zeta_l2 / np.sqrt(mu) + zeta_half + v_norm
