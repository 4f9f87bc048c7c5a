#!/usr/bin/env python3
"""Build thermalizing channels and put two of them in a quantum superposition
of orderings.

Walks through: Kraus operators of the replacement (thermalizing) channel,
CPTP validation, definite-order composition, and the coherent switch whose
ancilla controls which channel acts first.  Ends by checking the brute-force
16-operator switch output against its block closed form.
"""

import math

import numpy as np

from icotherm import (
    AncillaState,
    DensityMatrix,
    TwoLevelHamiltonian,
    apply_channel,
    compose,
    kron,
    make_quantum_switch,
    make_thermalizing_channel,
    random_density_matrix,
    switch_closed_form,
    thermal_state,
    validate_cptp,
)


def section(title):
    print(f"\n{'=' * 64}\n  {title}\n{'=' * 64}")


h = TwoLevelHamiltonian(delta=1.0)

section("Thermalizing (replacement) channel at T = 1")
ch = make_thermalizing_channel(h, 1.0)
print(f"Kraus operators: {len(ch.kraus)}")
for i, e in enumerate(ch.kraus):
    print(f"  E{i} =\n{np.round(e.real, 6)}")
report = validate_cptp(ch)
print(f"completeness deviation: {report.deviation:.3e}  passed: {report.passed}")

section("Every input thermalizes to the same state")
rng = np.random.default_rng(0)
target = thermal_state(h, 1.0)
print(f"thermal populations: {np.diag(target.mat).real}")
for name, rho in [("|e><e|", DensityMatrix(np.diag([0.0, 1.0]))),
                  ("random", random_density_matrix(2, rng))]:
    out = apply_channel(ch, rho)
    dist = np.max(np.abs(out.mat - target.mat))
    print(f"  input {name:8s} -> distance to thermal state {dist:.2e}")

section("Definite order: thermalizing twice is thermalizing once")
twice = compose(ch, ch)
rho = random_density_matrix(2, rng)
dist = np.max(np.abs(apply_channel(twice, rho).mat - target.mat))
print(f"|T(T(rho)) - rho_T| = {dist:.2e}   (order is classically irrelevant)")

section("The quantum switch of the two orderings")
sw = make_quantum_switch(ch, ch)
print(f"switch acts on ancilla (x) system, dim {sw.dim}, "
      f"{len(sw.kraus)} Kraus operators, CPTP: {validate_cptp(sw).passed}")

anc = AncillaState(math.pi / 2)   # balanced control (|0>+|1>)/sqrt(2)
joint_in = DensityMatrix(kron(anc.density().mat, target.mat), dims=(2, 2))
brute = apply_channel(sw, joint_in)
closed = switch_closed_form(anc, target, target)
print("\nbrute-force switch output (real part):")
print(np.round(brute.mat.real, 6))
print(f"\nclosed-form agreement: {np.max(np.abs(brute.mat - closed.mat)):.2e}")
print("The ancilla-diagonal blocks are the thermal state; the off-diagonal")
print("blocks carry rho_T^3 / 2 -- the interference of the two orderings.")
