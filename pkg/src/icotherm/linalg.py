"""Small dense complex linear algebra for multi-qubit density matrices.

Everything in this package runs on matrices of dimension <= 16, so the
routines here favor clarity and strict validation over speed.  States are
carried by :class:`DensityMatrix`, a validated, immutable wrapper around a
numpy array together with its tensor-factor dimensions.

Conventions
-----------
Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
basis index.  ``kron(a, b)`` therefore puts ``a`` on the high bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Tolerances",
    "DEFAULT_TOL",
    "ValidationError",
    "dagger",
    "symmetrize",
    "kron",
    "is_hermitian",
    "hermitian_eig",
    "psd_sqrt",
    "DensityMatrix",
    "partial_trace",
    "fidelity",
    "random_density_matrix",
]


@dataclass(frozen=True)
class Tolerances:
    """Numeric tolerance record shared by all validation and reconstruction checks.

    validation: bound on Hermiticity / trace / positivity / completeness defects.
    reconstruction: bound on round-trip identities (eigendecomposition, sqrt).
    """

    validation: float = 1e-10
    reconstruction: float = 1e-9


DEFAULT_TOL = Tolerances()


class ValidationError(Exception):
    """A numerical invariant (Hermiticity, positivity, CPTP, ...) was violated."""


def dagger(m: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def symmetrize(m: np.ndarray) -> np.ndarray:
    """(M + M†)/2 — suppresses Hermiticity drift after long operator products."""
    m = np.asarray(m)
    return (m + m.conj().T) / 2.0


def _as_square_complex(m, name: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ValueError(f"{name} contains non-finite entries")
    return a


def kron(a: np.ndarray, b: np.ndarray, *rest: np.ndarray) -> np.ndarray:
    """Tensor product with the standard row-major layout (left factor on high bits)."""
    out = np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))
    for m in rest:
        out = np.kron(out, np.asarray(m, dtype=complex))
    return out


def is_hermitian(m: np.ndarray, tol: float = DEFAULT_TOL.validation) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def hermitian_eig(
    m: np.ndarray, tol: Tolerances = DEFAULT_TOL
) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.

    Returns ``(w, v)`` with real eigenvalues ``w`` in descending order and
    unitary ``v`` whose columns are the matching eigenvectors, so that
    ``m @ v == v @ diag(w)`` up to the reconstruction tolerance.

    Raises
    ------
    ValidationError
        If ``m`` deviates from Hermiticity by more than ``tol.validation``.
    """
    a = _as_square_complex(m)
    if not is_hermitian(a, tol.validation):
        raise ValidationError(
            f"matrix is not Hermitian within {tol.validation:g}"
        )
    w, v = np.linalg.eigh(symmetrize(a))
    order = np.argsort(w)[::-1]
    return w[order].real, v[:, order]


def psd_sqrt(m: np.ndarray, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Hermitian square root R of a PSD matrix, R @ R == m.

    Eigenvalues in ``[-tol.validation, 0)`` are clamped to zero (floating-point
    noise, not physics); anything more negative raises :class:`ValidationError`.
    """
    w, v = hermitian_eig(m, tol)
    if w[-1] < -tol.validation:
        raise ValidationError(
            f"matrix has negative eigenvalue {w[-1]:.3e}, not PSD"
        )
    root = v @ np.diag(np.sqrt(np.clip(w, 0.0, None))) @ dagger(v)
    return symmetrize(root)


class DensityMatrix:
    """Validated quantum state: Hermitian, unit trace, positive semidefinite.

    Parameters
    ----------
    mat:
        Square complex matrix.  Stored symmetrized and read-only.
    dims:
        Ordered subsystem dimensions whose product equals the matrix dimension.
        Defaults to the all-qubit factorization ``(2, 2, ...)`` when the
        dimension is a power of two, else the single factor ``(dim,)``.
    tol:
        Tolerance record used for the validity checks.
    """

    __slots__ = ("mat", "dims")

    def __init__(self, mat, dims: Sequence[int] | None = None,
                 tol: Tolerances = DEFAULT_TOL):
        a = _as_square_complex(mat, "density matrix")
        dim = a.shape[0]
        if dims is None:
            n = dim.bit_length() - 1
            dims = (2,) * n if dim == (1 << n) else (dim,)
        dims = tuple(int(d) for d in dims)
        if any(d < 1 for d in dims) or math.prod(dims) != dim:
            raise ValueError(f"dims {dims} do not factor dimension {dim}")

        herm_defect = float(np.max(np.abs(a - a.conj().T)))
        if herm_defect > tol.validation:
            raise ValidationError(
                f"state not Hermitian: max|M - M†| = {herm_defect:.3e}"
            )
        a = symmetrize(a)
        trace_defect = abs(np.trace(a).real - 1.0)
        if trace_defect > tol.validation:
            raise ValidationError(f"state trace off by {trace_defect:.3e}")
        min_eig = float(np.linalg.eigvalsh(a)[0])
        if min_eig < -tol.validation:
            raise ValidationError(
                f"state has negative eigenvalue {min_eig:.3e}"
            )

        a.flags.writeable = False
        object.__setattr__(self, "mat", a)
        object.__setattr__(self, "dims", dims)

    def __setattr__(self, name, value):
        raise AttributeError("DensityMatrix is immutable")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def __repr__(self) -> str:
        return f"DensityMatrix(dim={self.dim}, dims={self.dims})"


def partial_trace(rho: DensityMatrix, keep: Iterable[int]) -> DensityMatrix:
    """Trace out all tensor factors not listed in ``keep``.

    ``keep`` is a nonempty set of factor indices into ``rho.dims``; the result
    keeps those factors in their original order and preserves the trace.
    """
    keep_sorted = sorted(set(int(k) for k in keep))
    n = len(rho.dims)
    if not keep_sorted:
        raise ValueError("keep must be a nonempty set of factor indices")
    if keep_sorted[0] < 0 or keep_sorted[-1] >= n:
        raise ValueError(f"keep {keep_sorted} out of range for {n} factors")

    dims = list(rho.dims)
    a = rho.mat.reshape(dims + dims)
    for idx in sorted(set(range(n)) - set(keep_sorted), reverse=True):
        a = np.trace(a, axis1=idx, axis2=idx + len(dims))
        dims.pop(idx)
    d = math.prod(dims)
    return DensityMatrix(a.reshape(d, d), dims=dims)


def fidelity(a: DensityMatrix, b: DensityMatrix,
             tol: Tolerances = DEFAULT_TOL) -> float:
    """Uhlmann fidelity (Tr sqrt(sqrt(a) b sqrt(a)))², clipped to [0, 1]."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    ra = psd_sqrt(a.mat, tol)
    inner = symmetrize(ra @ b.mat @ ra)
    f = float(np.trace(psd_sqrt(inner, tol)).real ** 2)
    return min(max(f, 0.0), 1.0)


def random_density_matrix(dim: int, rng: np.random.Generator,
                          dims: Sequence[int] | None = None) -> DensityMatrix:
    """Random full-rank state from the Ginibre ensemble (AA†, normalized)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return DensityMatrix(m / np.trace(m).real, dims=dims)
