"""The full solver against an exact solution.

With epsilon = beta = 0 the system is linear and each Fourier mode rotates
at omega = sqrt(xi tanh(sqrt(mu) xi)). That closed form gives a true error,
not a self-convergence estimate.
"""
from sautxu.experiments import linear_oracle_check

table = linear_oracle_check(dt_list=(0.02, 0.01, 0.005, 0.0025), t_final=1.0)
prev = None
for dt, err in table.rows():
    note = "" if prev is None else f"  ratio {prev / err:.3f}"
    print(f"dt={dt:.4f}  error={err:.3e}{note}")
    prev = err
print(f"slope={table.slope:.3f}")
