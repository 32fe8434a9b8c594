"""A sech pulse travelling over a cosine bottom.

Runs the first example scenario to t = 10 with CFL-controlled steps and
prints a few diagnostics along the way. Snapshots land on the requested
times exactly.
"""
import numpy as np

from sautxu.experiments import example1
from sautxu.stepping import StepConfig, run

scenario = example1("bump_cos", t_final=10.0)
snaps, diag = run(scenario.initial, scenario.params, scenario.bathymetry, StepConfig(),
                  scenario.t_final, snapshot_times=[2.5, 5.0, 7.5, 10.0])

print(f"{len(diag)} steps, dt between {diag.column('dt').min():.4g} "
      f"and {diag.column('dt').max():.4g}")
for s in snaps:
    crest = scenario.grid.nodes[np.argmax(s.zeta)]
    print(f"t={s.time:5.2f}  max zeta={s.zeta.max():.4f}  crest at x={crest:7.2f}")
energy = diag.column("energy0")
print(f"E0 ranges over [{energy.min():.4f}, {energy.max():.4f}]")
