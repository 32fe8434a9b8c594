"""A gaussian hump over a steep smoothed step.

The bottom's gradient is large, and no low-pass filter is used. The run
stays finite, and the energy E0 stays close to its initial value.
"""
import numpy as np

from sautxu import spectral
from sautxu.experiments import example2
from sautxu.stepping import StepConfig, run

s = example2()
snaps, diag = run(s.initial, s.params, s.bathymetry, StepConfig(), s.t_final,
                  snapshot_times=[3.0, 6.0, 9.0, 12.0])
e0 = spectral.energy(s.initial, 0, s.params.mu)
print(f"E0(0)={e0:.4f}")
for snap in snaps:
    print(f"t={snap.time:5.1f}  E0={spectral.energy(snap, 0, s.params.mu):.4f}  "
          f"max|zeta|={np.max(np.abs(snap.zeta)):.4f}")
print(f"{len(diag)} steps, max E0 over the run {diag.column('energy0').max():.4f}")
