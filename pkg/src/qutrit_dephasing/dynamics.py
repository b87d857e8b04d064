"""Collective dephasing of two-qutrit states, plus closed forms for the
evolved Horodecki family.

The channel multiplies each coherence by its sector factor; because the
coupling commutes with the total spin-z, this entrywise product is the
exact reduced dynamics (no system-bath matrix is ever built). For the
Horodecki family the two witness quantities reduce to closed forms in the
three participating factor moduli, which the generic matrix pipeline must
reproduce -- that cross-check is wired into the scenario runner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.optimize import brentq

from .baths import BathSpec, FactorTable, factor_table
from .states import SZ_BY_INDEX, check_density_matrix

# The channel is exactly completely positive for any consistent factor
# table, so a dephased state may dip below zero only by round-off.
DEPHASED_PSD_TOL = 1e-9

_SQRT7 = math.sqrt(7.0)


def sector_factor_matrix(factors: FactorTable) -> np.ndarray:
    """Expand a 5x5 factor table to the 9x9 entrywise multiplier."""
    idx = SZ_BY_INDEX + 2
    return factors.values[np.ix_(idx, idx)]


def dephase(rho0: np.ndarray, factors: FactorTable) -> np.ndarray:
    """Apply the collective dephasing channel to a state.

    Entry ((m1,m2),(n1,n2)) is multiplied by F[M, N] with M = m1+m2-2 and
    N = n1+n2-2; populations and intra-sector coherences are preserved
    exactly. Raises InvariantViolation if the output fails the density
    matrix checks, which signals an inconsistent factor table.
    """
    out = np.asarray(rho0, dtype=complex) * sector_factor_matrix(factors)
    return check_density_matrix(out, psd_tol=DEPHASED_PSD_TOL)


@dataclass(frozen=True)
class EvolvedState:
    """A dephased state together with the factor table that produced it."""

    time: float
    rho: np.ndarray
    factors: FactorTable


def evolve(rho0: np.ndarray, bath: BathSpec, t: float) -> EvolvedState:
    """Dephase `rho0` under `bath` for time t."""
    table = factor_table(bath, t)
    return EvolvedState(time=float(t), rho=dephase(rho0, table), factors=table)


def _check_parameter(a: float) -> None:
    if not 2.0 <= a <= 5.0:
        raise ValueError(f"parameter a must lie in [2, 5], got {a}")


def _clip_modulus(f: float, name: str) -> float:
    if not -1e-9 <= f <= 1.0 + 1e-9:
        raise ValueError(f"{name} must lie in [0, 1], got {f}")
    return min(max(f, 0.0), 1.0)


def horodecki_R_closed(a: float, f1: float, f2: float, f3: float) -> float:
    """Realignment witness of the dephased Horodecki state:
    (2/21) max(0, sqrt(3a^2 - 15a + 19) + 2(f1 + f2 + f3) - 7),
    where the f_k are the moduli of the three participating factors."""
    _check_parameter(a)
    f1, f2, f3 = (_clip_modulus(f, n) for f, n in ((f1, "f1"), (f2, "f2"), (f3, "f3")))
    root = math.sqrt(3.0 * a * a - 15.0 * a + 19.0)
    return (2.0 / 21.0) * max(0.0, root + 2.0 * (f1 + f2 + f3) - 7.0)


def horodecki_N_closed(a: float, f1: float, f2: float, f3: float) -> float:
    """Negativity of the dephased Horodecki state:
    (1/42) sum_k max(0, sqrt((2a-5)^2 + 16 f_k^2) - 5). Identically zero
    for a <= 4 because every modulus is at most 1."""
    _check_parameter(a)
    fs = [_clip_modulus(f, n) for f, n in ((f1, "f1"), (f2, "f2"), (f3, "f3"))]
    base = (2.0 * a - 5.0) ** 2
    return sum(max(0.0, math.sqrt(base + 16.0 * f * f) - 5.0) for f in fs) / 42.0


@lru_cache(maxsize=1)
def f1_threshold() -> float:
    """Sector-distance-2 modulus below which the a = 4 witness quantity
    vanishes: the unique root of 2(2x + x^4) + sqrt(7) - 7 in (0, 1)."""
    return float(brentq(lambda x: 2.0 * (2.0 * x + x**4) + _SQRT7 - 7.0, 0.0, 1.0, xtol=1e-12))


def death_time_gaussian(gamma: float) -> float:
    """Time at which the a = 4 witness quantity reaches zero under the
    Gaussian analytic model: sqrt(-ln(threshold)/gamma)."""
    if gamma <= 0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    return math.sqrt(-math.log(f1_threshold()) / gamma)
