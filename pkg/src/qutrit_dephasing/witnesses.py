"""Entanglement criteria for two-qutrit states.

Two complementary witnesses:

* negativity -- (||rho^T1||_1 - 1)/2, positive exactly when the partial
  transpose has a negative eigenvalue (free, i.e. distillable,
  entanglement);
* realignment_witness -- max(0, ||rho^R||_1 - 1) where rho^R reshuffles
  row/column indices pairwise. Separable states never exceed 1, and the
  witness also fires on some states with positive partial transpose,
  which is what makes bound entanglement visible.

A state is flagged bound entangled when the realignment witness is
positive while the negativity vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvariantViolation
from .linalg import trace_norm
from .states import DIM, N_STATES

# Negative values larger than this (in magnitude) are real violations, not
# round-off; smaller ones are clamped to zero.
NOISE_FLOOR = 1e-10


def partial_transpose(rho: np.ndarray, subsystem: int) -> np.ndarray:
    """Transpose the indices of one qutrit only.

    Output entry ((m1,m2),(n1,n2)) equals input ((n1,m2),(m1,n2)) for
    subsystem 1 and input ((m1,n2),(n1,m2)) for subsystem 2.
    """
    if subsystem not in (1, 2):
        raise ValueError(f"subsystem must be 1 or 2, got {subsystem}")
    t = np.asarray(rho, dtype=complex).reshape(DIM, DIM, DIM, DIM)
    axes = (2, 1, 0, 3) if subsystem == 1 else (0, 3, 2, 1)
    return t.transpose(axes).reshape(N_STATES, N_STATES)


def realign(rho: np.ndarray) -> np.ndarray:
    """Reshuffle matrix indices: output ((i,j),(k,l)) = rho((i,k),(j,l)).

    An involution that preserves the Frobenius norm; only the singular
    values (hence the trace norm) change.
    """
    t = np.asarray(rho, dtype=complex).reshape(DIM, DIM, DIM, DIM)
    return t.transpose(0, 2, 1, 3).reshape(N_STATES, N_STATES)


def negativity(rho: np.ndarray) -> float:
    """(||rho^T1||_1 - 1)/2, clamped to zero within numerical noise."""
    value = (trace_norm(partial_transpose(rho, 1)) - 1.0) / 2.0
    if value < -NOISE_FLOOR:
        raise InvariantViolation(
            f"negativity {value:.3e} below the noise floor; input is not a density matrix"
        )
    return max(0.0, value)


def realignment_witness(rho: np.ndarray) -> float:
    """max(0, ||rho^R||_1 - 1)."""
    return max(0.0, trace_norm(realign(rho)) - 1.0)


@dataclass(frozen=True)
class WitnessPair:
    """Both witness values for one state."""

    negativity: float
    realignment: float

    def __post_init__(self):
        for name, value in (("negativity", self.negativity), ("realignment", self.realignment)):
            if not np.isfinite(value) or value < 0.0:
                raise InvariantViolation(f"{name} must be finite and nonnegative, got {value}")

    @property
    def bound_entangled(self) -> bool:
        """True when only the realignment witness fires."""
        return self.realignment > NOISE_FLOOR and self.negativity <= NOISE_FLOOR

    @property
    def classification(self) -> str:
        """'free' | 'bound' | 'separable-compatible' (criteria prove nothing more)."""
        if self.negativity > NOISE_FLOOR:
            return "free"
        if self.bound_entangled:
            return "bound"
        return "separable-compatible"


def witness_pair(rho: np.ndarray) -> WitnessPair:
    """Evaluate both witnesses on one state."""
    return WitnessPair(negativity=negativity(rho), realignment=realignment_witness(rho))
