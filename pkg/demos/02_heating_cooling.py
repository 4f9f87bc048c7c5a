#!/usr/bin/env python3
"""Post-selected heating and cooling with reservoirs of one temperature.

Sweeps the reservoir temperature and tabulates the probability of each
ancilla outcome and the conditional heat exchanged, with the substance
starting at the same temperature as both reservoirs.  The |-> outcome heats
the substance, the |+> outcome cools it; at phi = 0 (classical control) every
effect vanishes.
"""

import math

from icotherm import TwoLevelHamiltonian, effective_temperature, ico_sweep

h = TwoLevelHamiltonian(delta=1.0)

print("Balanced control (phi = pi/2), measurement in the |+>/|-> basis")
print(f"{'T':>5} {'P+':>9} {'P-':>9} {'dQ+':>10} {'dQ-':>10} "
      f"{'T_eff(+)':>9} {'T_eff(-)':>9}")
for pt in ico_sweep(h, math.pi / 2, 0.2, 3.0, 15):
    t_plus = effective_temperature(pt.plus.state, h)
    t_minus = effective_temperature(pt.minus.state, h)
    print(f"{pt.t:5.2f} {pt.plus.probability:9.4f} {pt.minus.probability:9.4f}"
          f" {pt.dq_plus:10.5f} {pt.dq_minus:10.5f}"
          f" {t_plus:9.4f} {t_minus:9.4f}")

print("\nNotes:")
print(" * dQ+ + dQ- = 0 at every temperature (energy conservation).")
print(" * T_eff(+) < T < T_eff(-): the substance is cooled or heated even")
print("   though it only ever touched reservoirs at its own temperature.")

asym = ico_sweep(h, math.pi / 2, 100.0, 100.0, 1)[0]
print(f" * High-temperature asymptotes: P+ -> {asym.plus.probability:.4f}, "
      f"P- -> {asym.minus.probability:.4f} (5/8 and 3/8).")

peak = max(ico_sweep(h, math.pi / 2, 0.2, 3.0, 57), key=lambda p: p.dq_minus)
print(f" * Conditional heat peaks at T = {peak.t:.2f} "
      f"with dQ- = {peak.dq_minus:.5f}.")

print("\nClassical control (phi = 0): the interference term disappears")
print(f"{'T':>5} {'P+':>9} {'P-':>9} {'dQ+':>10} {'dQ-':>10}")
for pt in ico_sweep(h, 0.0, 0.5, 2.5, 5):
    print(f"{pt.t:5.2f} {pt.plus.probability:9.4f} {pt.minus.probability:9.4f}"
          f" {pt.dq_plus:10.2e} {pt.dq_minus:10.2e}")
