"""Dense complex linear algebra for small matrices.

Matrices are plain complex numpy arrays (value semantics: nothing here
mutates its input). Everything the rest of the package needs fits in three
operations on at-most-9x9 matrices: Hermitian eigenvalues, singular values,
and the trace norm built from them.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_TOL = 1e-10


def _as_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got array of shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix has non-finite entries")
    return a


def hermitian_eigenvalues(m, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted ascending.

    Raises ValueError if the matrix is not square or if any entry of
    m - m^dagger exceeds `tol` in absolute value; inputs here are built
    analytically, so larger drift means a bug upstream. A failure of the
    iterative solver surfaces as numpy.linalg.LinAlgError.
    """
    a = _as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"matrix is not square: shape {a.shape}")
    drift = float(np.max(np.abs(a - a.conj().T))) if a.size else 0.0
    if drift > tol:
        raise ValueError(
            f"matrix is not Hermitian: max |m - m^H| = {drift:.3e} exceeds {tol:.1e}"
        )
    return np.linalg.eigvalsh(a)


def singular_values(m) -> np.ndarray:
    """Singular values of a complex matrix, sorted descending (all >= 0)."""
    return np.linalg.svd(_as_matrix(m), compute_uv=False)


def trace_norm(m) -> float:
    """Trace norm ||m||_1, the sum of all singular values."""
    return float(np.sum(singular_values(m)))
