"""Gate-level density-matrix simulation of the 4-qubit switch realization.

Register layout: qubit 0 = ancilla, qubit 1 = working substance, qubits 2 and
3 = reservoir qubits (each prepared in the thermal state).  Qubit 0 is the
leftmost tensor factor / most significant bit of a basis index.

The switch is realized by routing the substance through the two reservoir
qubits with four controlled-SWAP gates: on ancilla |0> the substance swaps
with reservoir 1 first and reservoir 2 second, on ancilla |1> in the opposite
order.  Each controlled-SWAP can be expanded into three Toffoli gates (plus X
conjugation of the control for control value 0); the expansion is exact.

Thermal preparation uses a y-rotation by theta = arccos(p_g - p_e) followed by
a coherence crusher (ideal dephasing of the target qubit, modeling a gradient
field pulse).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    DensityMatrix,
    Tolerances,
    ValidationError,
    dagger,
    partial_trace,
    symmetrize,
)
from .channels import AncillaState, switch_closed_form
from .thermo import TwoLevelHamiltonian, thermal_state

__all__ = [
    "Gate",
    "QubitRegister",
    "ry",
    "x_gate",
    "swap",
    "cswap",
    "toffoli",
    "crush",
    "gate_unitary",
    "embed_unitary",
    "fresh_register",
    "apply_gate",
    "cswap_to_toffoli",
    "thermal_prep_angle",
    "build_switch_circuit",
    "verify_against_kraus",
]

DEFAULT_LABELS = ("ancilla", "substance", "reservoir1", "reservoir2")


@dataclass(frozen=True)
class Gate:
    """One circuit element.  ``kind`` is one of ry/x/swap/cswap/toffoli/crush.

    ``targets`` are register qubit indices; for cswap the first target is the
    control and ``control_value`` selects which control state activates the
    swap.  crush is the only non-unitary kind (it dephases its target).
    """

    kind: str
    targets: tuple[int, ...]
    angle: float | None = None
    control_value: int = 1

    def __post_init__(self):
        if len(set(self.targets)) != len(self.targets):
            raise ValueError(f"gate targets must be distinct, got {self.targets}")
        if self.control_value not in (0, 1):
            raise ValueError(f"control_value must be 0 or 1, got {self.control_value}")


def ry(target: int, angle: float) -> Gate:
    """Rotation exp(-i sigma_y angle / 2) on one qubit."""
    return Gate(kind="ry", targets=(target,), angle=float(angle))


def x_gate(target: int) -> Gate:
    return Gate(kind="x", targets=(target,))


def swap(a: int, b: int) -> Gate:
    return Gate(kind="swap", targets=(a, b))


def cswap(control: int, a: int, b: int, control_value: int = 1) -> Gate:
    """Swap qubits a and b when the control qubit equals ``control_value``."""
    return Gate(kind="cswap", targets=(control, a, b), control_value=control_value)


def toffoli(c1: int, c2: int, target: int) -> Gate:
    """Flip ``target`` when both controls are |1>."""
    return Gate(kind="toffoli", targets=(c1, c2, target))


def crush(target: int) -> Gate:
    """Coherence crusher: zero all coherences of the target qubit."""
    return Gate(kind="crush", targets=(target,))


def _check_unitary(u: np.ndarray, tol: float) -> np.ndarray:
    defect = float(np.max(np.abs(dagger(u) @ u - np.eye(u.shape[0]))))
    if defect > tol:
        raise ValidationError(f"gate matrix not unitary: defect {defect:.3e}")
    return u


def gate_unitary(g: Gate, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Local unitary of a gate on its own targets (crush has none)."""
    if g.kind == "ry":
        c, s = math.cos(g.angle / 2), math.sin(g.angle / 2)
        u = np.array([[c, -s], [s, c]], dtype=complex)
    elif g.kind == "x":
        u = np.array([[0, 1], [1, 0]], dtype=complex)
    elif g.kind == "swap":
        u = np.eye(4, dtype=complex)[[0, 2, 1, 3]]
    elif g.kind == "cswap":
        u = np.eye(8, dtype=complex)
        # local order (control, a, b); swap the a/b bits on the active branch
        base = 0 if g.control_value == 0 else 4
        u[[base + 1, base + 2]] = u[[base + 2, base + 1]]
    elif g.kind == "toffoli":
        u = np.eye(8, dtype=complex)
        u[[6, 7]] = u[[7, 6]]
    elif g.kind == "crush":
        raise ValueError("crush is not unitary")
    else:
        raise ValueError(f"unknown gate kind {g.kind!r}")
    return _check_unitary(u, tol.validation)


def embed_unitary(u: np.ndarray, targets: tuple[int, ...], n: int) -> np.ndarray:
    """Lift a k-qubit operator onto the given register qubits of an n-qubit space.

    Qubit 0 is the most significant bit; ``targets[m]`` carries local bit m.
    """
    k = len(targets)
    if u.shape != (1 << k, 1 << k):
        raise ValueError(f"operator shape {u.shape} does not match {k} targets")
    if any(t < 0 or t >= n for t in targets):
        raise ValueError(f"targets {targets} out of range for {n} qubits")
    dim = 1 << n
    full = np.zeros((dim, dim), dtype=complex)
    shifts = [n - 1 - t for t in targets]
    for col in range(dim):
        v = 0
        for sh in shifts:
            v = (v << 1) | ((col >> sh) & 1)
        for row_local in range(1 << k):
            amp = u[row_local, v]
            if amp == 0:
                continue
            row = col
            for m, sh in enumerate(shifts):
                bit = (row_local >> (k - 1 - m)) & 1
                row = (row & ~(1 << sh)) | (bit << sh)
            full[row, col] += amp
    return full


@dataclass(frozen=True)
class QubitRegister:
    """Immutable snapshot of an n-qubit register state with role labels."""

    state: DensityMatrix
    labels: tuple[str, ...] = DEFAULT_LABELS

    def __post_init__(self):
        if self.state.dims != (2,) * len(self.labels):
            raise ValueError(
                f"state dims {self.state.dims} do not match {len(self.labels)} qubits"
            )

    @property
    def n(self) -> int:
        return len(self.labels)


def fresh_register(n: int = 4,
                   labels: tuple[str, ...] | None = None) -> QubitRegister:
    """All-|0> register."""
    if labels is None:
        labels = DEFAULT_LABELS[:n] if n <= 4 else tuple(f"q{i}" for i in range(n))
    if len(labels) != n:
        raise ValueError(f"{len(labels)} labels for {n} qubits")
    m = np.zeros((1 << n, 1 << n), dtype=complex)
    m[0, 0] = 1.0
    return QubitRegister(state=DensityMatrix(m, dims=(2,) * n), labels=labels)


def apply_gate(reg: QubitRegister, g: Gate,
               tol: Tolerances = DEFAULT_TOL) -> QubitRegister:
    """Apply one gate and return a new validated register."""
    n = reg.n
    if any(t < 0 or t >= n for t in g.targets):
        raise ValueError(f"gate targets {g.targets} out of range for {n} qubits")
    rho = reg.state.mat
    if g.kind == "crush":
        t = g.targets[0]
        p0 = embed_unitary(np.diag([1.0, 0.0]).astype(complex), (t,), n)
        p1 = embed_unitary(np.diag([0.0, 1.0]).astype(complex), (t,), n)
        out = p0 @ rho @ p0 + p1 @ rho @ p1
    else:
        u = embed_unitary(gate_unitary(g, tol), g.targets, n)
        out = u @ rho @ dagger(u)
    state = DensityMatrix(symmetrize(out), dims=reg.state.dims, tol=tol)
    return QubitRegister(state=state, labels=reg.labels)


def cswap_to_toffoli(g: Gate) -> list[Gate]:
    """Exact expansion of a controlled-SWAP into three Toffoli gates.

    For control value 0 the control is conjugated with X gates.
    """
    if g.kind != "cswap":
        raise ValueError(f"expected a cswap gate, got {g.kind!r}")
    c, a, b = g.targets
    core = [toffoli(c, a, b), toffoli(c, b, a), toffoli(c, a, b)]
    if g.control_value == 0:
        return [x_gate(c), *core, x_gate(c)]
    return core


def thermal_prep_angle(rho_t: DensityMatrix,
                       tol: Tolerances = DEFAULT_TOL) -> float:
    """Rotation angle theta = arccos(p_g - p_e) preparing given populations.

    Applying ry(theta) to |0> and then a coherence crusher leaves the qubit in
    diag(p_g, p_e).  Requires a diagonal 2x2 input state.
    """
    if rho_t.dim != 2:
        raise ValueError(f"expected a 2x2 state, got dim {rho_t.dim}")
    off = abs(rho_t.mat[0, 1])
    if off > tol.validation:
        raise ValidationError(f"state not diagonal: |off-diagonal| = {off:.3e}")
    gap = float(rho_t.mat[0, 0].real - rho_t.mat[1, 1].real)
    return math.acos(min(max(gap, -1.0), 1.0))


def _routing_gates(decompose_cswap: bool) -> list[Gate]:
    # substance = 1, reservoir1 = 2, reservoir2 = 3, control = ancilla 0.
    # Ancilla |0>: swap with r1 then r2; ancilla |1>: swap with r2 then r1.
    seq = [
        cswap(0, 1, 2, control_value=0),
        cswap(0, 1, 3, control_value=1),
        cswap(0, 1, 3, control_value=0),
        cswap(0, 1, 2, control_value=1),
    ]
    if not decompose_cswap:
        return seq
    out: list[Gate] = []
    for g in seq:
        out.extend(cswap_to_toffoli(g))
    return out


def build_switch_circuit(h: TwoLevelHamiltonian, temperature: float,
                         phi: float, decompose_cswap: bool = False,
                         tol: Tolerances = DEFAULT_TOL) -> QubitRegister:
    """Run the full 4-qubit realization and return the final register.

    Pipeline: thermal preparation of substance and both reservoirs (ry(theta)
    + crusher each), ancilla rotation ry(phi), then the controlled-SWAP
    routing sequence (optionally expanded into Toffoli gates).
    """
    if not (0.0 <= phi <= math.pi):
        raise ValueError(f"phi must lie in [0, pi], got {phi}")
    rho_t = thermal_state(h, temperature, tol)
    theta = thermal_prep_angle(rho_t, tol)

    reg = fresh_register(4)
    for q in (1, 2, 3):
        reg = apply_gate(reg, ry(q, theta), tol)
        reg = apply_gate(reg, crush(q), tol)
    reg = apply_gate(reg, ry(0, phi), tol)
    for g in _routing_gates(decompose_cswap):
        reg = apply_gate(reg, g, tol)
    return reg


def verify_against_kraus(h: TwoLevelHamiltonian, temperature: float,
                         phi: float, decompose_cswap: bool = False,
                         tol: Tolerances = DEFAULT_TOL) -> float:
    """Max entry distance between the circuit marginal and the block closed form.

    Traces the reservoir qubits out of the circuit output and compares the
    ancilla + substance state against :func:`switch_closed_form` computed for
    the same temperature and control angle.  The two paths share no code.
    """
    reg = build_switch_circuit(h, temperature, phi, decompose_cswap, tol)
    marginal = partial_trace(reg.state, keep={0, 1})
    rho_t = thermal_state(h, temperature, tol)
    expected = switch_closed_form(AncillaState(phi), rho_t, rho_t, tol)
    return float(np.max(np.abs(marginal.mat - expected.mat)))
