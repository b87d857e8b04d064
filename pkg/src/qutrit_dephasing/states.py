"""Two-qutrit basis conventions and the bound entangled initial states.

Product basis |m1 m2>, m1, m2 in {0, 1, 2}, flattened with the first
qutrit major: index = 3*m1 + m2. Every basis state is an eigenstate of
the collective spin-z operator S1z + S2z with eigenvalue m1 + m2 - 2,
so the flattened index also fixes the dephasing sector labels used by
the bath and dynamics modules.
"""

from __future__ import annotations

import numpy as np

from .errors import InvariantViolation
from .linalg import hermitian_eigenvalues

DIM = 3
N_STATES = DIM * DIM

# Collective spin-z eigenvalue of each flattened basis state, in {-2..2}.
SZ_BY_INDEX = np.array([m1 + m2 - 2 for m1 in range(DIM) for m2 in range(DIM)])


def basis_index(m1: int, m2: int) -> int:
    """Flattened index of |m1 m2>."""
    return DIM * m1 + m2


def sz_value(m1: int, m2: int) -> int:
    """Collective spin-z eigenvalue of |m1 m2>."""
    return m1 + m2 - 2


def check_density_matrix(
    rho: np.ndarray,
    *,
    herm_tol: float = 1e-10,
    trace_tol: float = 1e-10,
    psd_tol: float = 1e-10,
) -> np.ndarray:
    """Validate Hermiticity, unit trace, and positivity; return rho.

    Raises InvariantViolation on the first failed check.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (N_STATES, N_STATES):
        raise InvariantViolation(f"density matrix must be 9x9, got {rho.shape}")
    drift = float(np.max(np.abs(rho - rho.conj().T)))
    if drift > herm_tol:
        raise InvariantViolation(f"not Hermitian: max |rho - rho^H| = {drift:.3e}")
    trace_err = abs(np.trace(rho).real - 1.0) + abs(np.trace(rho).imag)
    if trace_err > trace_tol:
        raise InvariantViolation(f"trace differs from 1 by {trace_err:.3e}")
    smallest = float(hermitian_eigenvalues(rho, tol=herm_tol)[0])
    if smallest < -psd_tol:
        raise InvariantViolation(f"not positive semidefinite: min eigenvalue {smallest:.3e}")
    return rho


def psi_plus() -> np.ndarray:
    """Maximally entangled vector (|00> + |11> + |22>)/sqrt(3)."""
    v = np.zeros(N_STATES, dtype=complex)
    for m in range(DIM):
        v[basis_index(m, m)] = 1.0
    return v / np.sqrt(3.0)


def cyclic_mixture(shift: int) -> np.ndarray:
    """Uniform mixture of the three product states |m, (m + shift) mod 3>.

    shift = 1 mixes |01>, |12>, |20>; shift = 2 mixes |02>, |10>, |21>.
    Both are diagonal, hence separable.
    """
    if shift not in (1, 2):
        raise ValueError(f"shift must be 1 or 2, got {shift}")
    rho = np.zeros((N_STATES, N_STATES), dtype=complex)
    for m in range(DIM):
        k = basis_index(m, (m + shift) % DIM)
        rho[k, k] = 1.0 / 3.0
    return rho


def horodecki_state(a: float) -> np.ndarray:
    """One-parameter 9x9 family mixing the maximally entangled projector
    with the two cyclic product mixtures, weights (2, a, 5-a)/7.

    Separable for a <= 3, bound entangled for 3 < a <= 4, and free
    entangled for a > 4.
    """
    if not 2.0 <= a <= 5.0:
        raise ValueError(f"parameter a must lie in [2, 5], got {a}")
    v = psi_plus()
    rho = (
        (2.0 / 7.0) * np.outer(v, v.conj())
        + (a / 7.0) * cyclic_mixture(1)
        + ((5.0 - a) / 7.0) * cyclic_mixture(2)
    )
    return check_density_matrix(rho)


def unextendible_product_basis() -> np.ndarray:
    """The five orthonormal product vectors whose complement carries the
    second bound entangled state, as rows of a (5, 9) array."""
    k0, k1, k2 = np.eye(DIM, dtype=complex)
    s2 = np.sqrt(2.0)
    return np.array(
        [
            np.kron(k0, k0 - k1) / s2,
            np.kron(k0 - k1, k2) / s2,
            np.kron(k2, k1 - k2) / s2,
            np.kron(k1 - k2, k0) / s2,
            np.kron(k0 + k1 + k2, k0 + k1 + k2) / 3.0,
        ]
    )


def upb_state() -> np.ndarray:
    """Bound entangled state on the orthogonal complement of the
    unextendible product basis: (I - sum_j |phi_j><phi_j|)/4."""
    vecs = unextendible_product_basis()
    projector = vecs.T @ vecs.conj()
    rho = (np.eye(N_STATES, dtype=complex) - projector) / 4.0
    return check_density_matrix(rho)
