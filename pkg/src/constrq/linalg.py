"""Finite-dimensional operator-algebra primitives.

Jordan and scaled Lie products on Hermitian matrices, the associator and
JB-inequality defects, and the spectral norm.  Everything is dense numpy;
target sizes are a few thousand square at most, so no sparse paths.

Conventions pinned here and used repo-wide:

* ``jordan(A, B) = (AB + BA)/2``
* ``lie_bracket(A, B, hbar) = i(AB - BA)/hbar`` with ``hbar > 0``
* inner products are antilinear in the first slot, linear in the second
"""

from __future__ import annotations

import numpy as np

from .errors import InvariantViolation

# relative tolerance for hermiticity / unitarity validation (Frobenius norm)
HERMITICITY_TOL = 1e-9

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)


def as_complex_matrix(m) -> np.ndarray:
    """Coerce input to a 2-d complex array, rejecting NaN/Inf entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise InvariantViolation(f"expected a matrix, got array of ndim={a.ndim}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise InvariantViolation("matrix has non-finite entries")
    return a


def require_square(m) -> np.ndarray:
    a = as_complex_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise InvariantViolation(f"matrix must be square, got shape {a.shape}")
    return a


def hermiticity_defect(m) -> float:
    """Relative Frobenius distance of ``m`` from its adjoint."""
    a = require_square(m)
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return 0.0
    return float(np.linalg.norm(a - a.conj().T) / scale)


def require_hermitian(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    a = require_square(m)
    d = hermiticity_defect(a)
    if d > tol:
        raise InvariantViolation(f"matrix is not Hermitian (relative defect {d:.3e} > {tol:.1e})")
    return a


def _require_same_dim(*mats) -> tuple[np.ndarray, ...]:
    arrs = tuple(require_square(m) for m in mats)
    dims = {a.shape[0] for a in arrs}
    if len(dims) != 1:
        raise InvariantViolation(f"dimension mismatch between operands: {sorted(dims)}")
    return arrs


def _require_hbar(hbar: float) -> float:
    hbar = float(hbar)
    if not (hbar > 0.0) or not np.isfinite(hbar):
        raise InvariantViolation(f"hbar must be a positive real number, got {hbar}")
    return hbar


def operator_norm(m) -> float:
    """Spectral norm: largest singular value.

    Computed from a Hermitian eigensolve of M^dagger M, which for Hermitian
    M reduces to the largest |eigenvalue|.
    """
    a = as_complex_matrix(m)
    if a.size == 0:
        return 0.0
    evals = np.linalg.eigvalsh(a.conj().T @ a)
    return float(np.sqrt(max(evals[-1], 0.0)))


def hermitian_eigensystem(m, tol: float = HERMITICITY_TOL):
    """Eigenvalues (ascending) and eigenvectors of a Hermitian matrix.

    Thin wrapper around the deterministic dense LAPACK solver so every
    module uses one eigensolve path.
    """
    a = require_hermitian(m, tol)
    return np.linalg.eigh(a)


def jordan(a, b, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Symmetrized product (AB + BA)/2 of two Hermitian matrices."""
    a, b = _require_same_dim(a, b)
    require_hermitian(a, tol)
    require_hermitian(b, tol)
    return (a @ b + b @ a) / 2.0


def lie_bracket(a, b, hbar: float, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Scaled commutator i(AB - BA)/hbar; Hermitian for Hermitian inputs."""
    hbar = _require_hbar(hbar)
    a, b = _require_same_dim(a, b)
    require_hermitian(a, tol)
    require_hermitian(b, tol)
    return 1j * (a @ b - b @ a) / hbar


def associator_defect(a, b, c, hbar: float) -> float:
    """Norm of (A∘B)∘C - A∘(B∘C) - (hbar^2/4)·{{A,C},B}.

    The combination is an algebraic identity of the symmetrized product and
    the scaled commutator, so the return value is pure floating-point error:
    it must stay below 1e-10 · max(1, ||A||·||B||·||C||).
    """
    hbar = _require_hbar(hbar)
    a, b, c = _require_same_dim(a, b, c)
    lhs = jordan(jordan(a, b), c) - jordan(a, jordan(b, c))
    rhs = (hbar**2 / 4.0) * lie_bracket(lie_bracket(a, c, hbar), b, hbar)
    return operator_norm(lhs - rhs)


def derivation_defect(a, b, c, hbar: float) -> float:
    """Norm of {A, B∘C} - {A,B}∘C - B∘{A,C} (Leibniz rule residual)."""
    hbar = _require_hbar(hbar)
    a, b, c = _require_same_dim(a, b, c)
    lhs = lie_bracket(a, jordan(b, c), hbar)
    rhs = jordan(lie_bracket(a, b, hbar), c) + jordan(b, lie_bracket(a, c, hbar))
    return operator_norm(lhs - rhs)


def jb_inequality_defect(a, b) -> float:
    """||A^2 + B^2|| - ||A||^2; nonnegative (up to roundoff) for Hermitian A, B."""
    a, b = _require_same_dim(a, b)
    require_hermitian(a)
    require_hermitian(b)
    return operator_norm(a @ a + b @ b) - operator_norm(a) ** 2


def random_hermitian(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Hermitian matrix with Gaussian entries; used by property sweeps."""
    m = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (m + m.conj().T) / 2.0
