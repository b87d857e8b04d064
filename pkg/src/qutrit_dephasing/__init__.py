"""Two qutrits under collective pure dephasing by a common thermal bath.

The package builds the two standard 3x3-system bound entangled states,
evolves them through the exact dephasing channel induced by bosonic,
spin-1/2, or analytic environments, and quantifies free entanglement
(negativity) and bound entanglement (realignment witness), including the
closed forms, thresholds, and death times of the Horodecki family.
"""

from ._version import __version__
from .errors import ConfigError, InvariantViolation
from .linalg import hermitian_eigenvalues, singular_values, trace_norm
from .states import (
    DIM,
    N_STATES,
    SZ_BY_INDEX,
    basis_index,
    check_density_matrix,
    cyclic_mixture,
    horodecki_state,
    psi_plus,
    sz_value,
    unextendible_product_basis,
    upb_state,
)
from .witnesses import (
    WitnessPair,
    negativity,
    partial_transpose,
    realign,
    realignment_witness,
    witness_pair,
)
from .baths import (
    ANALYTIC_EXPONENTIAL,
    ANALYTIC_GAUSSIAN,
    BATH_KINDS,
    BOSONIC,
    PRNG_NAME,
    SPIN,
    BathSpec,
    FactorTable,
    analytic_factor,
    bosonic_factor,
    factor_table,
    gaussian_rate,
    interval_bound,
    sample_frequencies,
    spin_factor,
    table_from_moduli,
    thermal_occupation,
)
from .dynamics import (
    EvolvedState,
    death_time_gaussian,
    dephase,
    evolve,
    f1_threshold,
    horodecki_N_closed,
    horodecki_R_closed,
    sector_factor_matrix,
)
from .experiments import (
    ResultRow,
    ScenarioConfig,
    SweepAxis,
    emit_csv,
    figure_preset,
    load_config,
    parse_config,
    preset_names,
    read_density_csv,
    run_scenario,
    scenario_metadata,
    write_density_csv,
)

__all__ = [
    "__version__",
    "ConfigError",
    "InvariantViolation",
    "hermitian_eigenvalues",
    "singular_values",
    "trace_norm",
    "DIM",
    "N_STATES",
    "SZ_BY_INDEX",
    "basis_index",
    "check_density_matrix",
    "cyclic_mixture",
    "horodecki_state",
    "psi_plus",
    "sz_value",
    "unextendible_product_basis",
    "upb_state",
    "WitnessPair",
    "negativity",
    "partial_transpose",
    "realign",
    "realignment_witness",
    "witness_pair",
    "ANALYTIC_EXPONENTIAL",
    "ANALYTIC_GAUSSIAN",
    "BATH_KINDS",
    "BOSONIC",
    "PRNG_NAME",
    "SPIN",
    "BathSpec",
    "FactorTable",
    "analytic_factor",
    "bosonic_factor",
    "factor_table",
    "gaussian_rate",
    "interval_bound",
    "sample_frequencies",
    "spin_factor",
    "table_from_moduli",
    "thermal_occupation",
    "EvolvedState",
    "death_time_gaussian",
    "dephase",
    "evolve",
    "f1_threshold",
    "horodecki_N_closed",
    "horodecki_R_closed",
    "sector_factor_matrix",
    "ResultRow",
    "ScenarioConfig",
    "SweepAxis",
    "emit_csv",
    "figure_preset",
    "load_config",
    "parse_config",
    "preset_names",
    "read_density_csv",
    "run_scenario",
    "scenario_metadata",
    "write_density_csv",
]
