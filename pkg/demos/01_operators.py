"""Fourier multipliers on a periodic grid.

Builds a grid, applies the derivative, H_mu and the sech^2 smoothing to a
single cosine mode, and checks that each one only rescales or rotates it.
"""
import numpy as np

from sautxu import spectral
from sautxu.spectral import Grid

grid = Grid(half_length=30.0, n_points=256)
mu = 1.0
k = 5
xi = grid.wavenumbers[k]
u = np.cos(xi * grid.nodes)
print(f"grid: dx={grid.dx:.4f}, mode k={k} has xi={xi:.4f}")

du = spectral.derivative(u, grid)
print("d/dx cos     -> -xi sin      error", np.max(np.abs(du + xi * np.sin(xi * grid.nodes))))

hu = spectral.apply_h_mu(u, grid, mu)
t = np.tanh(np.sqrt(mu) * xi)
print("H_mu cos     -> tanh * sin   error", np.max(np.abs(hu - t * np.sin(xi * grid.nodes))))

su = spectral.apply_smoothing(u, grid, mu)
s2 = spectral.sech(np.sqrt(mu) * xi) ** 2
print("sech^2 cos   -> sech^2 * cos error", np.max(np.abs(su - s2 * u)))

rng = np.random.default_rng(0)
noise = rng.normal(size=grid.n_points)
ratio = spectral.sobolev_norm(spectral.apply_h_mu(noise, grid, mu), grid) / \
    spectral.sobolev_norm(noise, grid)
print(f"|H_mu u| / |u| for white noise: {ratio:.4f} (never above 1)")
