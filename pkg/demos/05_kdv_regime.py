"""Comparing long waves with the KdV soliton.

For epsilon = mu the model runs from a KdV soliton and is compared with that
soliton translated at its KdV speed. The deep-water system propagates long
waves at speed mu**0.25 rather than 1, so the crests lag and the quotient
stays near 1. The printout shows where the crest actually ends up.
"""
import numpy as np

from sautxu.experiments import kdv_comparison
from sautxu.model import Bathymetry, PhysicalParams, make_initial
from sautxu.spectral import Grid
from sautxu.stepping import StepConfig, run

grid = Grid(30.0, 512)
eps_list = [0.1, 0.05, 0.01]
table = kdv_comparison(eps_list, grid, t_final=10.0)
for eps, q in table.rows():
    params = PhysicalParams(eps, eps, 0.0)
    snaps, _ = run(make_initial("kdv", grid), params, Bathymetry.flat(grid), StepConfig(),
                   10.0, record=False)
    crest = grid.nodes[np.argmax(snaps[-1].zeta)]
    print(f"eps={eps:<5g} quotient={q:.4f}  crest x={crest:6.2f}  "
          f"KdV target x={(1 + eps / 2) * 10:6.2f}  mu^(1/4)*T={eps ** 0.25 * 10:6.2f}")
