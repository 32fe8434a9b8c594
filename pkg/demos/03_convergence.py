"""Time-step convergence of the Lie splitting.

Each run is compared with a reference at a quarter of the finest step.
The fitted slope of log(error) against log(dt) should be near 1.
"""
from sautxu.experiments import convergence_study, example1

T = 2.5
for bottom in ("bump_cos", "ripple"):
    table = convergence_study(example1(bottom, t_final=T), [T / n for n in (100, 200, 400, 800)])
    print(bottom)
    for dt, err in table.rows():
        print(f"  dt={dt:.5f}  error={err:.3e}")
    print(f"  slope={table.slope:.3f}")
