import numpy as np
import pytest

from sautxu import model, spectral
from sautxu.errors import GridMismatch, InvalidParam, UnknownKind
from sautxu.model import (Bathymetry, PhysicalParams, WaveState, dispersive_rhs,
                          from_tilde, make_bathymetry, make_initial, to_tilde,
                          transport_speeds)
from sautxu.spectral import Grid

from conftest import smooth_random_field


def dense_multiplier(grid, symbol):
    """Matrix of a Fourier multiplier built from explicit DFT matrices."""
    n = grid.n_points
    j = np.arange(n)
    F = np.exp(-2j * np.pi * np.outer(j, j) / n)
    Finv = np.conj(F) / n
    return (Finv @ np.diag(symbol) @ F).real


def rhs_oracle(state, params, b):
    """Dispersive right-hand side evaluated with dense operator matrices."""
    g, mu, em = state.grid, params.mu, params.eps_sqrt_mu
    xi = np.asarray(g.wavenumbers)
    ny = g.nyquist_index
    h = -1j * np.tanh(np.sqrt(mu) * xi)
    d = 1j * xi
    h[ny] = d[ny] = 0
    H, D = dense_multiplier(g, h), dense_multiplier(g, d)
    S = dense_multiplier(g, 1 / np.cosh(np.sqrt(mu) * xi))
    z, v = state.zeta, state.v
    dz = (H @ v
          - em * (0.5 * H @ (v * (D @ H @ z)) + H @ (z * (D @ H @ v)) + z * (D @ v)
                  - 0.5 * (D @ z) * (H @ H @ v))
          + params.beta * np.sqrt(mu) * D @ S @ (b * (S @ v)))
    dv = -(D @ z) + 0.5 * em * (D @ z) * (H @ D @ z) + 0.5 * em * v * (H @ H @ D @ v)
    return dz, dv


class TestParams:
    def test_valid(self):
        p = PhysicalParams(0.1, 1.0, 0.5)
        assert p.delta == 0.5
        assert p.eps_sqrt_mu == pytest.approx(0.1)

    @pytest.mark.parametrize("kw", [dict(epsilon=1.5), dict(epsilon=-0.1), dict(beta=2.0),
                                    dict(mu=0.0), dict(mu=-1.0)])
    def test_invalid(self, kw):
        args = dict(epsilon=0.1, mu=1.0, beta=0.5) | kw
        with pytest.raises(InvalidParam):
            PhysicalParams(**args)


class TestDispersiveRhs:
    def test_zero_state(self, unit_grid):
        p = PhysicalParams(0.3, 1.0, 0.5)
        bathy = make_bathymetry("bump_cos", unit_grid)
        rhs = dispersive_rhs(WaveState.zeros(unit_grid), p, bathy)
        assert np.all(rhs.d_zeta == 0) and np.all(rhs.d_v == 0)

    def test_linear_elevation_mode(self, unit_grid):
        x, xi0 = unit_grid.nodes, 2.0
        state = WaveState(unit_grid, np.cos(xi0 * x), np.zeros(64))
        rhs = dispersive_rhs(state, PhysicalParams(0, 1.0, 0), None)
        assert np.max(np.abs(rhs.d_zeta)) < 1e-13
        np.testing.assert_allclose(rhs.d_v, xi0 * np.sin(xi0 * x), atol=1e-12)

    def test_linear_velocity_mode(self, unit_grid):
        x, xi0 = unit_grid.nodes, 3.0
        state = WaveState(unit_grid, np.zeros(64), np.cos(xi0 * x))
        rhs = dispersive_rhs(state, PhysicalParams(0, 1.0, 0), None)
        np.testing.assert_allclose(rhs.d_zeta, np.tanh(xi0) * np.sin(xi0 * x), atol=1e-12)
        assert np.max(np.abs(rhs.d_v)) < 1e-13

    @pytest.mark.parametrize("eps,mu,beta", [(0.1, 1.0, 0.5), (0.7, 0.2, 0.0), (0.0, 2.0, 1.0)])
    def test_matches_dense_oracle(self, eps, mu, beta, rng):
        g = Grid(6.0, 32)
        state = WaveState(g, smooth_random_field(g, rng), smooth_random_field(g, rng))
        b = np.cos(g.nodes) + 0.3 * np.sin(2 * g.nodes)
        params = PhysicalParams(eps, mu, beta)
        rhs = dispersive_rhs(state, params, Bathymetry(g, b))
        dz, dv = rhs_oracle(state, params, b)
        np.testing.assert_allclose(rhs.d_zeta, dz, atol=1e-11)
        np.testing.assert_allclose(rhs.d_v, dv, atol=1e-11)

    def test_linear_superposition(self, unit_grid, rng):
        p = PhysicalParams(0.0, 0.5, 0.0)
        a = WaveState(unit_grid, smooth_random_field(unit_grid, rng), smooth_random_field(unit_grid, rng))
        b = WaveState(unit_grid, smooth_random_field(unit_grid, rng), smooth_random_field(unit_grid, rng))
        ab = WaveState(unit_grid, 2 * a.zeta - b.zeta, 2 * a.v - b.v)
        ra, rb, rab = (dispersive_rhs(s, p) for s in (a, b, ab))
        np.testing.assert_allclose(rab.d_zeta, 2 * ra.d_zeta - rb.d_zeta, atol=1e-12)
        np.testing.assert_allclose(rab.d_v, 2 * ra.d_v - rb.d_v, atol=1e-12)

    def test_gradient_term_has_no_mean(self, unit_grid, rng):
        zeta = smooth_random_field(unit_grid, rng) + 4.0
        dx_zeta = spectral.derivative(zeta, unit_grid)
        assert spectral.forward_transform(-dx_zeta)[0] == pytest.approx(0, abs=1e-12)

    def test_grid_mismatch(self, unit_grid):
        other = Grid(1.0, 64)
        with pytest.raises(GridMismatch):
            dispersive_rhs(WaveState.zeros(unit_grid), PhysicalParams(0.1, 1, 0.1),
                           Bathymetry.flat(other))


class TestTransportSpeeds:
    def test_zero_and_constant(self, unit_grid):
        p = PhysicalParams(0.1, 1.0, 0.0)
        w, v = transport_speeds(WaveState.zeros(unit_grid), p)
        assert np.all(w == 0) and np.all(v == 0)
        w, _ = transport_speeds(WaveState(unit_grid, np.zeros(64), np.full(64, 0.7)), p)
        np.testing.assert_allclose(w, 0.7, atol=1e-15)

    def test_single_mode(self, unit_grid):
        x = unit_grid.nodes
        p = PhysicalParams(0.1, 0.5, 0.0)
        state = WaveState(unit_grid, np.zeros(64), np.sin(2 * x))
        w, v = transport_speeds(state, p)
        np.testing.assert_allclose(w, np.sin(2 * x) / np.cosh(np.sqrt(0.5) * 2) ** 2, atol=1e-13)
        assert v is state.v


class TestChangeOfVariables:
    def test_identity_cases(self, unit_grid, rng):
        s = WaveState(unit_grid, smooth_random_field(unit_grid, rng), smooth_random_field(unit_grid, rng))
        t = to_tilde(s, PhysicalParams(0.0, 1.0, 0.0))
        assert np.array_equal(t.zeta, s.zeta) and np.array_equal(t.v, s.v)
        s0 = WaveState(unit_grid, s.zeta, np.zeros(64))
        t0 = to_tilde(s0, PhysicalParams(0.3, 1.0, 0.0))
        assert np.array_equal(t0.zeta, s0.zeta) and np.array_equal(t0.v, s0.v)

    def test_single_mode(self, unit_grid):
        eps, xi0, x = 0.2, 2.0, unit_grid.nodes
        s = WaveState(unit_grid, np.cos(xi0 * x), np.ones(64))
        t = to_tilde(s, PhysicalParams(eps, 1.0, 0.0))
        # H d/dx cos(k x) = k tanh(k) cos(k x)
        np.testing.assert_allclose(t.v, 1 + eps / 2 * xi0 * np.tanh(xi0) * np.cos(xi0 * x),
                                   atol=1e-13)
        np.testing.assert_allclose(t.zeta, np.cos(xi0 * x) - eps / 4, atol=1e-15)

    def test_round_trip(self, unit_grid, rng):
        p = PhysicalParams(0.1, 1.0, 0.0)
        s = WaveState(unit_grid, 0.3 * smooth_random_field(unit_grid, rng, 4),
                      0.3 * smooth_random_field(unit_grid, rng, 4))
        back = from_tilde(to_tilde(s, p), p)
        np.testing.assert_allclose(back.zeta, s.zeta, atol=1e-10)
        np.testing.assert_allclose(back.v, s.v, atol=1e-10)

    def test_inverse_trivial_cases(self, unit_grid, rng):
        zeta = smooth_random_field(unit_grid, rng)
        s = WaveState(unit_grid, zeta, np.zeros(64))
        out = from_tilde(s, PhysicalParams(0.1, 1.0, 0.0))
        assert np.array_equal(out.zeta, zeta) and np.all(out.v == 0)
        s = WaveState(unit_grid, zeta, zeta)
        out = from_tilde(s, PhysicalParams(0.0, 1.0, 0.0))
        assert np.array_equal(out.zeta, zeta) and np.array_equal(out.v, zeta)

    def test_guard(self, unit_grid):
        s = WaveState(unit_grid, np.full(64, 3.0), np.full(64, 3.0))
        with pytest.raises(InvalidParam):
            from_tilde(s, PhysicalParams(0.5, 1.0, 0.0))


class TestBathymetry:
    def test_ripple_values(self):
        g = Grid(16.0, 64)  # dx = 0.5, so 5, 8 and 11 are nodes
        b = make_bathymetry("ripple", g)
        x = np.asarray(g.nodes)
        assert b.samples[x == 8.0][0] == 0.5
        assert b.samples[x == 5.0][0] == 0.0
        assert b.samples[x == 11.0][0] == 0.0
        assert b.sup_norm == 0.5

    @pytest.mark.parametrize("kind,kw,formula", [
        ("flat", {}, lambda x: 0 * x),
        ("bump_cos", {}, np.cos),
        ("ripple", {}, lambda x: np.array([0.5 - (t - 8) ** 2 / 18 if 5 <= t <= 11 else 0.0
                                           for t in x])),
        ("smoothed_step", {"beta": 0.5}, lambda x: 0.5 / 4 * (1 + np.tanh(100 * (x - 2)))
         * (1 - np.tanh(100 * (x - 8)))),
        ("cos_alpha", {"alpha": 7.0}, lambda x: np.cos(7.0 * x)),
    ])
    def test_formulas(self, example_grid, kind, kw, formula):
        b = make_bathymetry(kind, example_grid, **kw)
        x = np.asarray(example_grid.nodes)
        np.testing.assert_allclose(b.samples, formula(x), atol=1e-15, rtol=0)
        assert b.sup_norm == np.max(np.abs(b.samples))

    def test_flat_sup_norm(self, example_grid):
        assert make_bathymetry("flat", example_grid).sup_norm == 0

    def test_errors(self, example_grid):
        with pytest.raises(UnknownKind):
            make_bathymetry("staircase", example_grid)
        with pytest.raises(InvalidParam):
            make_bathymetry("cos_alpha", example_grid, alpha=-1.0)
        with pytest.raises(InvalidParam):
            make_bathymetry("smoothed_step", example_grid)


class TestInitial:
    def test_sech_pulse(self, example_grid):
        s = make_initial("sech_pulse", example_grid)
        i0 = np.flatnonzero(example_grid.nodes == 0.0)[0]
        assert s.zeta[i0] == 1.0 and s.time == 0.0
        x = np.asarray(example_grid.nodes)
        np.testing.assert_allclose(s.zeta, 1 / np.cosh(np.sqrt(3) / 2 * x), rtol=1e-14)
        np.testing.assert_array_equal(s.v, s.zeta)

    def test_gaussian(self, example_grid):
        s = make_initial("gaussian", example_grid)
        x = np.asarray(example_grid.nodes)
        assert s.zeta[x == 0.0][0] == 1.0
        assert np.all(s.zeta[np.abs(x) > 4.3] < 1e-8)

    def test_kdv_pair(self, example_grid):
        s = make_initial("kdv", example_grid, alpha=1.0)
        assert np.max(s.zeta) == 1.0 and np.max(s.v) == 1.0
        np.testing.assert_allclose(s.zeta, make_initial("sech2", example_grid).zeta, rtol=1e-15)

    def test_unknown(self, example_grid):
        with pytest.raises(UnknownKind):
            make_initial("tsunami", example_grid)


def test_wave_state_checks_lengths(unit_grid):
    with pytest.raises(GridMismatch):
        WaveState(unit_grid, np.zeros(64), np.zeros(63))
