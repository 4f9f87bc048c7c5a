"""Independent reference implementations used as test oracles.

Everything here is built from first principles with explicit index loops and
only numpy, on purpose: these functions must not share code with the package
they check.
"""

import numpy as np


def boltzmann(delta, t):
    """(p_g, p_e) from direct Boltzmann weights exp(-E/T)/Z."""
    w = np.array([1.0, np.exp(-delta / t)])
    return w / w.sum()


def thermal_rho(delta, t):
    return np.diag(boltzmann(delta, t)).astype(complex)


def replacement_kraus(delta, t):
    """The 4 operators sqrt(p_i)|i><j|, written out one entry at a time."""
    p = boltzmann(delta, t)
    ops = []
    for i in range(2):
        for j in range(2):
            e = np.zeros((2, 2), complex)
            e[i, j] = np.sqrt(p[i])
            ops.append(e)
    return ops


def switch_kraus(k1, k2):
    """All 16 switch operators, ancilla projectors written out explicitly."""
    p0 = np.zeros((2, 2), complex)
    p0[0, 0] = 1.0
    p1 = np.zeros((2, 2), complex)
    p1[1, 1] = 1.0
    out = []
    for e2 in k2:
        for e1 in k1:
            out.append(np.kron(p0, e2 @ e1) + np.kron(p1, e1 @ e2))
    return out


def apply_kraus(ops, rho):
    out = np.zeros_like(rho, dtype=complex)
    for e in ops:
        out += e @ rho @ e.conj().T
    return out


def kron_entry(a, b, i, j):
    """Tensor-product entry by index arithmetic: row i = i_a*dim(b)+i_b."""
    db = b.shape[0]
    return a[i // db, j // db] * b[i % db, j % db]


def kron_by_indices(a, b):
    d = a.shape[0] * b.shape[0]
    out = np.zeros((d, d), complex)
    for i in range(d):
        for j in range(d):
            out[i, j] = kron_entry(a, b, i, j)
    return out


def ptrace_second(rho4):
    """Keep factor 0 of a two-qubit state by explicit 2-index summation."""
    out = np.zeros((2, 2), complex)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out[i, j] += rho4[2 * i + k, 2 * j + k]
    return out


def ptrace_first(rho4):
    """Keep factor 1 by explicit summation."""
    out = np.zeros((2, 2), complex)
    for i in range(2):
        for j in range(2):
            for k in range(2):
                out[i, j] += rho4[2 * k + i, 2 * k + j]
    return out


OUTCOME_KETS = {
    "zero": np.array([1.0, 0.0]),
    "one": np.array([0.0, 1.0]),
    "plus": np.array([1.0, 1.0]) / np.sqrt(2.0),
    "minus": np.array([1.0, -1.0]) / np.sqrt(2.0),
}


def block_post_select(joint4, outcome):
    """2x2 block algebra: (prob, conditional state or None)."""
    b = OUTCOME_KETS[outcome]
    m = np.zeros((2, 2), complex)
    for i in range(2):
        for j in range(2):
            m += np.conj(b[i]) * b[j] * joint4[2 * i:2 * i + 2, 2 * j:2 * j + 2]
    prob = float(np.real(np.trace(m)))
    return prob, (m / prob if prob > 1e-12 else None)


def entropy_nats(ps):
    s = 0.0
    for p in ps:
        if p > 0.0:
            s -= p * np.log(p)
    return float(s)


def ancilla_density(phi):
    k = np.array([np.cos(phi / 2), np.sin(phi / 2)], complex)
    return np.outer(k, k.conj())


def ico_brute_force(delta, t, phi, rho=None):
    """Full pipeline: replacement Kraus -> 16 switch operators -> post-selection.

    ``rho`` defaults to the thermal state at ``t``.  Returns the joint output,
    both +/- post-selections, and the conditional heats.
    """
    k = replacement_kraus(delta, t)
    rho_t = thermal_rho(delta, t)
    if rho is None:
        rho = rho_t
    joint = apply_kraus(switch_kraus(k, k), np.kron(ancilla_density(phi), rho))
    p_minus, rho_m = block_post_select(joint, "minus")
    p_plus, rho_p = block_post_select(joint, "plus")
    e_t = delta * np.real(rho_t[1, 1])

    def heat(prob, state):
        if state is None:
            return 0.0
        return prob * (delta * np.real(state[1, 1]) - e_t)

    return {
        "joint": joint,
        "rho_t": rho_t,
        "p_plus": p_plus,
        "p_minus": p_minus,
        "rho_plus": rho_p,
        "rho_minus": rho_m,
        "dq_plus": heat(p_plus, rho_p),
        "dq_minus": heat(p_minus, rho_m),
    }


def random_rho(dim, rng):
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return m / np.trace(m).real
