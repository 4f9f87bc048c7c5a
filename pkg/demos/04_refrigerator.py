#!/usr/bin/env python3
"""The four-stroke refrigerator run by a demon watching the ancilla.

Stroke (i) applies the switch at the cold temperature and keeps the cycle
only on the |-> outcome (the substance ends hotter than both reservoirs);
strokes (ii)/(iii) are isochoric thermal contacts that move the gained energy
into the hot reservoir; stroke (iv) erases the demon's one-bit record at
Landauer cost W = T_R * S(P-, P+).  Efficiency charges W every attempt but
credits heat only on success: eta = Q_C / (W / P-).
"""

import numpy as np

from icotherm import CycleParams, monte_carlo, run_cycle, sweep

print("Single cycle at T_H = T_C = T_R = 1 (delta = 1, natural-log entropy):")
rep = run_cycle(CycleParams())
print(f"  success probability P-      : {rep.p_minus:.6f}")
print(f"  conditional state populations: "
      f"{np.diag(rep.rho_minus.mat).real.round(6)}")
print(f"  effective temperature       : {rep.t_eff_minus:.4f} "
      f"(hotter than the reservoirs)")
print(f"  heat to hot reservoir Q_C   : {rep.q_c:.6f}")
print(f"  erasure work W              : {rep.w:.6f}")
print(f"  efficiency eta = Q_C P- / W : {rep.eta:.6f}")

print("\nSweep with T_H = T_C (equal reservoirs -- a classical refrigerator")
print("would diverge here; this one stays bounded):")
print(f"{'T_C':>5} {'P-':>9} {'W':>9} {'Q_C':>9} {'eta':>9}")
reports = sweep(CycleParams(), 0.2, 3.0, 15)
for r in reports:
    print(f"{r.t_cold:5.2f} {r.p_minus:9.4f} {r.w:9.4f} {r.q_c:9.4f} "
          f"{r.eta:9.4f}")

dense = sweep(CycleParams(), 0.2, 3.0, 57)
best = max(dense, key=lambda r: r.eta)
print(f"\nEfficiency peaks at T_C = {best.t_cold:.2f} "
      f"with eta = {best.eta:.4f}; with base-2 erasure entropy the same")
base2 = max(sweep(CycleParams(entropy_base=2.0), 0.2, 3.0, 57),
            key=lambda r: r.eta)
print(f"cycle gives eta = {base2.eta:.4f} at T_C = {base2.t_cold:.2f} "
      f"(entropy convention rescales W by 1/ln 2).")

print("\nStochastic demon, 100000 trials, seed 0 (numpy-pcg64):")
s = monte_carlo(CycleParams(), 100000, seed=0)
print(f"  successes        : {s.successes}")
print(f"  empirical P-     : {s.p_minus_emp:.5f} (exact {s.p_minus_exact:.5f})")
print(f"  total work paid  : {s.w_total:.2f}")
print(f"  total heat moved : {s.q_c_total:.2f}")
print(f"  heat per attempt : {s.mean_heat_per_trial:.5f}")
