"""Four-stroke refrigerator driven by the switched thermal process.

One cycle: (i) the switch of two thermalizing channels at the cold
temperature acts on the substance (initially thermal at the cold
temperature); a demon keeps the cycle only when the ancilla is measured in
|->.  (ii) isochoric contact with the hot reservoir rejects the gained heat;
(iii) isochoric contact with the cold reservoir re-prepares the substance;
(iv) the demon's one-bit memory is erased against a resetting reservoir at
Landauer cost W = T_R * S(P-, P+).

Strokes (ii)/(iii) are ideal full thermalizations (swap with a fresh
reservoir qubit), so the only work cost is the erasure and the heat delivered
to the hot reservoir per successful cycle is

    q_c = Tr(rho_- H) - Tr(rho_hot H),

which by energy conservation over strokes (i)-(iii) equals the net heat
extracted from the cold side.  The efficiency charges the erasure work every
attempt but credits heat only on success:  eta = q_c / (W / P-).

Units: temperatures in :class:`CycleParams` are dimensionless multiples of
delta/k_B (so populations depend only on them); energies (w, q_c) carry the
factor delta.  Reported effective temperatures use the same dimensionless
units.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .linalg import DensityMatrix
from .channels import AncillaState, switch_closed_form
from .thermo import (
    PROB_FLOOR,
    PostSelection,
    TwoLevelHamiltonian,
    effective_temperature,
    internal_energy,
    post_select,
    shannon_entropy,
    thermal_state,
)

__all__ = [
    "CycleParams",
    "CycleReport",
    "IcoPoint",
    "MonteCarloStats",
    "DegenerateCycleError",
    "RNG_ALGORITHM",
    "work_of_erasure",
    "ico_point",
    "ico_sweep",
    "run_cycle",
    "sweep",
    "monte_carlo",
]

# Generator used by monte_carlo; recorded in the stats so runs are
# reproducible across implementations of the same algorithm.
RNG_ALGORITHM = "numpy-pcg64"


class DegenerateCycleError(ValueError):
    """The demon's success probability vanished; the cycle is undefined."""


@dataclass(frozen=True)
class CycleParams:
    """Refrigerator cycle parameters.

    Temperatures (t_hot, t_cold, t_reset) are in units of delta/k_B; phi is
    the ancilla angle in radians; entropy_base selects the logarithm base of
    the erasure entropy (natural log by default, base 2 rescales w and eta by
    1/ln 2).
    """

    delta: float = 1.0
    t_hot: float = 1.0
    t_cold: float = 1.0
    t_reset: float = 1.0
    phi: float = math.pi / 2
    entropy_base: float = math.e

    def __post_init__(self):
        if not (self.delta > 0.0 and math.isfinite(self.delta)):
            raise ValueError(f"delta must be positive, got {self.delta}")
        for name in ("t_hot", "t_cold", "t_reset"):
            t = getattr(self, name)
            if not t > 0.0 or math.isnan(t):
                raise ValueError(f"{name} must be positive, got {t}")
        if not (0.0 <= self.phi <= math.pi):
            raise ValueError(f"phi must lie in [0, pi], got {self.phi}")
        if not self.entropy_base > 1.0:
            raise ValueError(f"entropy_base must exceed 1, got {self.entropy_base}")

    def hamiltonian(self) -> TwoLevelHamiltonian:
        return TwoLevelHamiltonian(self.delta)


@dataclass(frozen=True)
class CycleReport:
    """Per-cycle record.  Energies in units of delta; t_* in delta/k_B units.

    q_ico_minus is the post-selection-weighted heat of stroke (i) relative to
    the cold thermal state; it equals p_minus * q_c whenever t_hot == t_cold.
    """

    t_cold: float
    p_minus: float
    rho_minus: DensityMatrix
    w: float
    q_c: float
    q_ico_minus: float
    eta: float
    t_eff_minus: float
    e_minus: float
    e_hot: float


@dataclass(frozen=True)
class IcoPoint:
    """Outcome probabilities, conditional states, and heats at one temperature.

    For basis "pm" the two outcomes are |+> / |->; for "computational" they
    are |0> / |1> and are reported in the plus/minus slots in that order.
    """

    t: float
    phi: float
    basis: str
    plus: PostSelection
    minus: PostSelection
    dq_plus: float
    dq_minus: float


@dataclass(frozen=True)
class MonteCarloStats:
    """Seeded demon simulation summary; deterministic given (trials, seed)."""

    trials: int
    seed: int
    successes: int
    p_minus_emp: float
    p_minus_exact: float
    w_total: float
    q_c_total: float
    mean_heat_per_trial: float
    rng: str = RNG_ALGORITHM


def work_of_erasure(p_minus: float, t_reset: float,
                    base: float = math.e) -> float:
    """Landauer cost T_R * S(p, 1-p) of resetting the demon's one-bit memory.

    ``t_reset`` is an absolute temperature (k_B = 1), so the result is an
    energy.  Zero exactly when p_minus is 0 or 1.
    """
    if not (-PROB_FLOOR <= p_minus <= 1.0 + PROB_FLOOR):
        raise ValueError(f"p_minus must lie in [0, 1], got {p_minus}")
    if not t_reset > 0.0 or math.isnan(t_reset):
        raise ValueError(f"t_reset must be positive, got {t_reset}")
    p = min(max(p_minus, 0.0), 1.0)
    return t_reset * shannon_entropy((p, 1.0 - p), base=base)


def ico_point(h: TwoLevelHamiltonian, temperature: float, phi: float,
              basis: str = "pm") -> IcoPoint:
    """Switched-process outcome data at one (absolute) temperature.

    The substance starts in the thermal state of the same temperature as the
    two reservoirs, the switch output is taken in closed form, and the
    ancilla is projected in the requested basis.
    """
    if basis not in ("pm", "computational"):
        raise ValueError(f"basis must be 'pm' or 'computational', got {basis!r}")
    rho_t = thermal_state(h, temperature)
    joint = switch_closed_form(AncillaState(phi), rho_t, rho_t)
    first, second = ("plus", "minus") if basis == "pm" else ("zero", "one")
    ps_plus = post_select(joint, first)
    ps_minus = post_select(joint, second)
    e_t = internal_energy(rho_t, h)

    def heat(ps: PostSelection) -> float:
        if ps.state is None:
            return 0.0
        return ps.probability * (internal_energy(ps.state, h) - e_t)

    return IcoPoint(t=temperature / h.delta, phi=phi, basis=basis,
                    plus=ps_plus, minus=ps_minus,
                    dq_plus=heat(ps_plus), dq_minus=heat(ps_minus))


def ico_sweep(h: TwoLevelHamiltonian, phi: float, t_min: float, t_max: float,
              steps: int, basis: str = "pm") -> list[IcoPoint]:
    """Uniform temperature grid of :func:`ico_point` records.

    Temperatures are in delta/k_B units.  A single-point grid (steps == 1)
    requires t_min == t_max.
    """
    _check_grid(t_min, t_max, steps, min_steps=1)
    return [ico_point(h, float(t) * h.delta, phi, basis)
            for t in np.linspace(t_min, t_max, steps)]


def _check_grid(t_min: float, t_max: float, steps: int, min_steps: int):
    if steps < min_steps:
        raise ValueError(f"steps must be >= {min_steps}, got {steps}")
    if not (0.0 < t_min <= t_max) or math.isnan(t_max):
        raise ValueError(f"need 0 < t_min <= t_max, got [{t_min}, {t_max}]")
    if steps == 1 and t_min != t_max:
        raise ValueError("a single-point grid requires t_min == t_max")
    if steps > 1 and t_min == t_max:
        raise ValueError("t_min must be strictly below t_max for steps > 1")


def run_cycle(p: CycleParams) -> CycleReport:
    """Evaluate one refrigerator cycle in closed form."""
    h = p.hamiltonian()
    point = ico_point(h, p.t_cold * p.delta, p.phi)
    p_minus = point.minus.probability
    if p_minus <= PROB_FLOOR or point.minus.state is None:
        raise DegenerateCycleError(
            f"success probability {p_minus!r} at t_cold={p.t_cold}"
        )
    rho_minus = point.minus.state
    rho_hot = thermal_state(h, p.t_hot * p.delta)
    e_minus = internal_energy(rho_minus, h)
    e_hot = internal_energy(rho_hot, h)
    q_c = e_minus - e_hot
    w = work_of_erasure(p_minus, p.t_reset * p.delta, base=p.entropy_base)
    eta = q_c * p_minus / w
    t_eff = effective_temperature(rho_minus, h) / p.delta
    return CycleReport(t_cold=p.t_cold, p_minus=p_minus, rho_minus=rho_minus,
                       w=w, q_c=q_c, q_ico_minus=point.dq_minus, eta=eta,
                       t_eff_minus=t_eff, e_minus=e_minus, e_hot=e_hot)


def sweep(p_template: CycleParams, t_min: float, t_max: float,
          steps: int) -> list[CycleReport]:
    """Cycle reports over a uniform grid with t_hot = t_cold = T.

    This is the equal-reservoir scenario; the template's other fields
    (delta, t_reset, phi, entropy base) are kept.
    """
    _check_grid(t_min, t_max, steps, min_steps=2)
    return [run_cycle(replace(p_template, t_hot=float(t), t_cold=float(t)))
            for t in np.linspace(t_min, t_max, steps)]


def monte_carlo(p: CycleParams, trials: int, seed: int) -> MonteCarloStats:
    """Stochastic demon: sample the ancilla outcome per trial.

    Erasure work is charged on every trial; heat is credited only on
    successful (|-> measured) trials.  Draws come from one numpy PCG64
    generator seeded with ``seed``; batched parallel runs must derive
    per-batch seeds via ``np.random.SeedSequence(seed).spawn`` to stay
    reproducible regardless of batch count.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    report = run_cycle(p)
    rng = np.random.Generator(np.random.PCG64(seed))
    successes = int(np.count_nonzero(rng.random(trials) < report.p_minus))
    w_total = trials * report.w
    q_c_total = successes * report.q_c
    return MonteCarloStats(
        trials=trials,
        seed=seed,
        successes=successes,
        p_minus_emp=successes / trials,
        p_minus_exact=report.p_minus,
        w_total=w_total,
        q_c_total=q_c_total,
        mean_heat_per_trial=q_c_total / trials,
    )
