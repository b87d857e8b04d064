"""Declarative scenario runner: parameter sweeps with CSV output.

A scenario pairs an initial state (Horodecki family or the UPB state)
with a bath and one or two sweep axes over time, temperature, coupling,
frequency width, bath size, or the Horodecki parameter. Each grid point
evolves the state, evaluates both entanglement witnesses, and -- for
Horodecki inputs -- cross-checks the generic matrix pipeline against the
closed forms before anything is emitted.

Configs are flat key = value text files (see parse_config); results are
long-format CSV with a '#'-prefixed metadata block so a run can be
reproduced from its output alone.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, replace

import numpy as np

from ._version import __version__
from .baths import (
    ANALYTIC_KINDS,
    BATH_KINDS,
    PRNG_NAME,
    SPIN,
    BathSpec,
    factor_table,
    sample_frequencies,
)
from .dynamics import dephase, horodecki_N_closed, horodecki_R_closed
from .errors import ConfigError, InvariantViolation
from .states import N_STATES, horodecki_state, upb_state
from .witnesses import negativity, realignment_witness

SWEEP_VARIABLES = ("t", "T", "g", "delta", "L", "a")
OUTPUT_QUANTITIES = ("R", "N", "absF1", "absF3", "rho_dump")
INITIAL_STATES = ("horodecki", "upb")

# Closed forms and the matrix pipeline must agree this well at every
# Horodecki grid point; a spin-dephased UPB state must stay PPT this well.
EQUIVALENCE_TOL = 1e-9
UPB_SPIN_PPT_TOL = 1e-10

DEFAULT_PRESET_SEED = 12345


@dataclass(frozen=True)
class SweepAxis:
    """One sweep dimension: a variable name and its grid values."""

    variable: str
    values: tuple[float, ...]

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise ConfigError(
                f"unknown sweep variable {self.variable!r}; expected one of {SWEEP_VARIABLES}"
            )
        values = tuple(float(v) for v in self.values)
        if len(values) < 2:
            raise ConfigError(f"axis {self.variable!r} needs at least 2 values")
        if not all(np.isfinite(values)):
            raise ConfigError(f"axis {self.variable!r} has non-finite values")
        if any(b <= a for a, b in zip(values, values[1:])):
            raise ConfigError(f"axis {self.variable!r} values must be strictly increasing")
        object.__setattr__(self, "values", values)

    @classmethod
    def linspace(cls, variable: str, lo: float, hi: float, steps: int) -> "SweepAxis":
        """Evenly spaced grid with both endpoints included."""
        if steps < 2:
            raise ConfigError(f"axis {variable!r} needs steps >= 2, got {steps}")
        if not lo < hi:
            raise ConfigError(f"axis {variable!r} needs lo < hi, got [{lo}, {hi}]")
        return cls(variable, tuple(np.linspace(lo, hi, steps)))

    @classmethod
    def explicit(cls, variable: str, values) -> "SweepAxis":
        """Grid from an explicit ascending list of values."""
        return cls(variable, tuple(values))


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything needed to run one sweep deterministically."""

    initial_state: str
    bath: BathSpec
    axes: tuple[SweepAxis, ...]
    outputs: tuple[str, ...]
    output_path: str | None = None
    a: float = 4.0
    time: float = 0.0
    seed: int = DEFAULT_PRESET_SEED

    def __post_init__(self):
        if self.initial_state not in INITIAL_STATES:
            raise ConfigError(
                f"initial_state must be one of {INITIAL_STATES}, got {self.initial_state!r}"
            )
        axes = tuple(self.axes)
        object.__setattr__(self, "axes", axes)
        if not 1 <= len(axes) <= 2:
            raise ConfigError(f"need 1 or 2 sweep axes, got {len(axes)}")
        names = [ax.variable for ax in axes]
        if len(set(names)) != len(names):
            raise ConfigError(f"duplicate sweep variable in {names}")
        outputs = tuple(self.outputs)
        object.__setattr__(self, "outputs", outputs)
        if not outputs:
            raise ConfigError("outputs must not be empty")
        for q in outputs:
            if q not in OUTPUT_QUANTITIES:
                raise ConfigError(f"unknown output {q!r}; expected one of {OUTPUT_QUANTITIES}")
        if len(set(outputs)) != len(outputs):
            raise ConfigError(f"duplicate output in {outputs}")
        if self.time < 0:
            raise ConfigError(f"time must be >= 0, got {self.time}")
        if self.initial_state == "horodecki" and not 2.0 <= self.a <= 5.0:
            raise ConfigError(f"Horodecki parameter a must lie in [2, 5], got {self.a}")
        for ax in axes:
            self._check_axis(ax)

    def _check_axis(self, ax: SweepAxis) -> None:
        var, values = ax.variable, ax.values
        if var == "a":
            if self.initial_state != "horodecki":
                raise ConfigError("sweeping 'a' requires the horodecki initial state")
            if values[0] < 2.0 or values[-1] > 5.0:
                raise ConfigError(f"'a' axis must stay within [2, 5], got {values}")
        if var in ("T", "g", "delta", "L") and self.bath.kind in ANALYTIC_KINDS:
            raise ConfigError(f"axis {var!r} is meaningless for a {self.bath.kind} bath")
        if var in ("delta", "L") and self.bath.frequencies is not None:
            raise ConfigError(f"axis {var!r} conflicts with an explicit frequency list")
        if var == "t" and values[0] < 0:
            raise ConfigError("'t' axis values must be >= 0")
        if var == "T" and values[0] < 0:
            raise ConfigError("'T' axis values must be >= 0")
        if var == "g" and values[0] <= 0:
            raise ConfigError("'g' axis values must be > 0")
        if var == "L":
            if any(v != int(v) or v < 1 for v in values):
                raise ConfigError(f"'L' axis values must be positive integers, got {values}")
        if var == "delta":
            if values[0] < 0:
                raise ConfigError("'delta' axis values must be >= 0")
            if self.bath.kind not in ANALYTIC_KINDS and self.bath.freq_lo == 0 and values[0] == 0:
                raise ConfigError("'delta' = 0 with freq_lo = 0 gives an empty frequency range")


@dataclass(frozen=True)
class ResultRow:
    """One grid point: axis values followed by the requested quantities."""

    axes: tuple[tuple[str, float], ...]
    quantities: tuple[tuple[str, float], ...]

    @property
    def columns(self) -> tuple[str, ...]:
        return tuple(k for k, _ in self.axes) + tuple(k for k, _ in self.quantities)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(v for _, v in self.axes) + tuple(v for _, v in self.quantities)

    def __getitem__(self, column: str) -> float:
        for k, v in self.axes + self.quantities:
            if k == column:
                return v
        raise KeyError(column)


def run_scenario(cfg: ScenarioConfig) -> list[ResultRow]:
    """Evaluate every grid point of a scenario, in lexicographic axis order.

    Frequencies are drawn once per (size, lo, delta, seed) combination and
    reused across the rest of the sweep. Raises InvariantViolation (with
    the offending grid point) if the closed-form cross-check or the
    UPB-under-spin positivity check fails.
    """
    state_cache: dict[float | None, np.ndarray] = {}

    def initial_state(a: float) -> np.ndarray:
        key = float(a) if cfg.initial_state == "horodecki" else None
        if key not in state_cache:
            state_cache[key] = (
                horodecki_state(a) if cfg.initial_state == "horodecki" else upb_state()
            )
        return state_cache[key]

    freq_cache: dict[tuple, np.ndarray] = {}

    def frequencies_for(size: int, delta: float | None) -> np.ndarray:
        if cfg.bath.frequencies is not None:
            return np.asarray(cfg.bath.frequencies, dtype=float)
        seed = cfg.bath.seed if cfg.bath.seed is not None else cfg.seed
        key = (size, cfg.bath.freq_lo, delta, seed)
        if key not in freq_cache:
            freq_cache[key] = sample_frequencies(cfg.bath.freq_lo, delta, size, seed)
        return freq_cache[key]

    rows = []
    names = [ax.variable for ax in cfg.axes]
    for combo in itertools.product(*(ax.values for ax in cfg.axes)):
        assign = dict(zip(names, combo))
        rows.append(_evaluate_point(cfg, assign, initial_state, frequencies_for))
    return rows


def _evaluate_point(cfg, assign, initial_state, frequencies_for) -> ResultRow:
    t = float(assign.get("t", cfg.time))
    a = float(assign.get("a", cfg.a))
    bath = cfg.bath
    if bath.kind in ANALYTIC_KINDS:
        table = factor_table(bath, t)
    else:
        size = int(assign.get("L", bath.size))
        delta = assign.get("delta", bath.freq_delta)
        omegas = frequencies_for(size, delta)
        bath = replace(
            bath,
            size=size,
            coupling=float(assign.get("g", bath.coupling)),
            temperature=float(assign.get("T", bath.temperature)),
            freq_delta=delta,
        )
        table = factor_table(bath, t, frequencies=omegas)

    absf1 = min(abs(table.factor(-2, 0)), 1.0)
    absf2 = min(abs(table.factor(2, 0)), 1.0)
    absf3 = min(abs(table.factor(-2, 2)), 1.0)
    try:
        rho_t = dephase(initial_state(a), table)
    except InvariantViolation as exc:
        raise InvariantViolation(f"{exc} at grid point {assign}") from exc

    r_val = n_val = None
    if cfg.initial_state == "horodecki":
        r_val = realignment_witness(rho_t)
        n_val = negativity(rho_t)
        r_closed = horodecki_R_closed(a, absf1, absf2, absf3)
        n_closed = horodecki_N_closed(a, absf1, absf2, absf3)
        if abs(r_val - r_closed) > EQUIVALENCE_TOL or abs(n_val - n_closed) > EQUIVALENCE_TOL:
            raise InvariantViolation(
                f"closed forms disagree with the matrix pipeline at {assign}: "
                f"R {r_val} vs {r_closed}, N {n_val} vs {n_closed}"
            )
    else:
        if "R" in cfg.outputs:
            r_val = realignment_witness(rho_t)
        if "N" in cfg.outputs or cfg.bath.kind == SPIN:
            n_val = negativity(rho_t)
        if cfg.bath.kind == SPIN and n_val > UPB_SPIN_PPT_TOL:
            raise InvariantViolation(
                f"spin-dephased UPB state acquired negativity {n_val:.3e} at {assign}"
            )

    quantities: list[tuple[str, float]] = []
    for name in cfg.outputs:
        if name == "R":
            quantities.append(("R", r_val))
        elif name == "N":
            quantities.append(("N", n_val))
        elif name == "absF1":
            quantities.append(("absF1", absf1))
        elif name == "absF3":
            quantities.append(("absF3", absf3))
        else:  # rho_dump
            for i in range(N_STATES):
                for j in range(N_STATES):
                    quantities.append((f"re_{i}_{j}", float(rho_t[i, j].real)))
                    quantities.append((f"im_{i}_{j}", float(rho_t[i, j].imag)))
    for name, value in quantities:
        if not np.isfinite(value):
            raise InvariantViolation(f"non-finite output {name} at {assign}")
    return ResultRow(
        axes=tuple((k, float(v)) for k, v in assign.items()),
        quantities=tuple(quantities),
    )


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def scenario_metadata(cfg: ScenarioConfig) -> dict[str, str]:
    """Key/value block describing a run, written as CSV comments."""
    meta: dict[str, str] = {
        "artifact": "qutrit-dephasing",
        "version": __version__,
        "prng": PRNG_NAME,
        "seed": str(cfg.seed),
        "initial_state": cfg.initial_state,
    }
    if cfg.initial_state == "horodecki":
        meta["a"] = _fmt(cfg.a)
    meta["time"] = _fmt(cfg.time)
    bath = cfg.bath
    meta["bath_kind"] = bath.kind
    if bath.kind in ANALYTIC_KINDS:
        meta["rate"] = _fmt(bath.rate)
    else:
        meta["bath_size"] = str(bath.size)
        meta["coupling"] = _fmt(bath.coupling)
        meta["temperature"] = _fmt(bath.temperature)
        if bath.frequencies is not None:
            meta["frequencies"] = " ".join(_fmt(w) for w in bath.frequencies)
        else:
            meta["freq_lo"] = _fmt(bath.freq_lo)
            meta["freq_delta"] = _fmt(bath.freq_delta)
        if bath.seed is not None:
            meta["bath_seed"] = str(bath.seed)
    for i, ax in enumerate(cfg.axes):
        meta[f"sweep{i + 1}"] = f"{ax.variable} values " + " ".join(_fmt(v) for v in ax.values)
    meta["outputs"] = ",".join(cfg.outputs)
    return meta


def emit_csv(rows: list[ResultRow], path: str, metadata: dict[str, str] | None = None) -> None:
    """Write rows as UTF-8 CSV: '#'-prefixed metadata, a header, then data
    rows with 17 significant digits. Deterministic byte-for-byte for a
    fixed input."""
    if not rows:
        raise ValueError("no rows to write")
    columns = rows[0].columns
    for row in rows:
        if row.columns != columns:
            raise ValueError("rows have inconsistent columns")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        for key, value in (metadata or {}).items():
            fh.write(f"# {key} = {value}\n")
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_fmt(v) for v in row.values])


def write_density_csv(rho: np.ndarray, stream: io.TextIOBase, metadata: dict[str, str] | None = None) -> None:
    """Write a 9x9 complex matrix as 9 CSV rows of interleaved re, im pairs."""
    for key, value in (metadata or {}).items():
        stream.write(f"# {key} = {value}\n")
    writer = csv.writer(stream, lineterminator="\n")
    for i in range(N_STATES):
        cells = []
        for j in range(N_STATES):
            cells.append(_fmt(float(rho[i, j].real)))
            cells.append(_fmt(float(rho[i, j].imag)))
        writer.writerow(cells)


def read_density_csv(path: str) -> np.ndarray:
    """Read a matrix written by write_density_csv ('#' lines are skipped)."""
    rows = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            cells = [float(c) for c in line.split(",")]
            if len(cells) != 2 * N_STATES:
                raise ValueError(f"expected {2 * N_STATES} columns, got {len(cells)}")
            rows.append([complex(cells[2 * j], cells[2 * j + 1]) for j in range(N_STATES)])
    if len(rows) != N_STATES:
        raise ValueError(f"expected {N_STATES} data rows, got {len(rows)}")
    return np.array(rows, dtype=complex)


# ---------------------------------------------------------------------------
# Config files
# ---------------------------------------------------------------------------

_CONFIG_KEYS = (
    "initial_state",
    "a",
    "bath_kind",
    "bath_size",
    "coupling",
    "temperature",
    "freq_lo",
    "freq_delta",
    "frequencies",
    "rate",
    "time",
    "seed",
    "sweep",
    "sweep2",
    "outputs",
    "output_path",
)


def _parse_axis_text(text: str) -> SweepAxis:
    tokens = text.split()
    if len(tokens) < 2:
        raise ConfigError(f"bad sweep spec {text!r}")
    variable = tokens[0]
    if tokens[1] == "values":
        if len(tokens) < 4:
            raise ConfigError(f"sweep {variable!r} needs at least 2 explicit values")
        return SweepAxis.explicit(variable, [float(tok) for tok in tokens[2:]])
    if len(tokens) != 4:
        raise ConfigError(
            f"bad sweep spec {text!r}: expected '<var> <lo> <hi> <steps>' or '<var> values v1 v2 ...'"
        )
    return SweepAxis.linspace(variable, float(tokens[1]), float(tokens[2]), int(tokens[3]))


def parse_config(text: str) -> ScenarioConfig:
    """Parse a flat key = value scenario description.

    Recognized keys: initial_state, a, bath_kind, bath_size, coupling,
    temperature, freq_lo, freq_delta, frequencies (space-separated list),
    rate, time, seed, sweep, sweep2, outputs (comma-separated), output_path.
    Blank lines and lines starting with '#' are ignored.
    """
    data: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in data:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        data[key] = value

    for required in ("initial_state", "bath_kind", "sweep", "outputs"):
        if required not in data:
            raise ConfigError(f"missing required key {required!r}")

    kind = data["bath_kind"]
    if kind not in BATH_KINDS:
        raise ConfigError(f"unknown bath_kind {kind!r}; expected one of {BATH_KINDS}")
    try:
        if kind in ANALYTIC_KINDS:
            bath = BathSpec(kind=kind, rate=float(data.get("rate", "0")))
        else:
            frequencies = None
            if "frequencies" in data:
                frequencies = tuple(float(tok) for tok in data["frequencies"].split())
            bath = BathSpec(
                kind=kind,
                size=int(data.get("bath_size", len(frequencies) if frequencies else 1)),
                coupling=float(data.get("coupling", "1")),
                temperature=float(data.get("temperature", "0")),
                freq_lo=float(data["freq_lo"]) if "freq_lo" in data else None,
                freq_delta=float(data["freq_delta"]) if "freq_delta" in data else None,
                frequencies=frequencies,
            )
    except ValueError as exc:
        raise ConfigError(f"bad bath description: {exc}") from exc

    axes = [_parse_axis_text(data["sweep"])]
    if "sweep2" in data:
        axes.append(_parse_axis_text(data["sweep2"]))
    outputs = tuple(tok.strip() for tok in data["outputs"].split(",") if tok.strip())

    try:
        return ScenarioConfig(
            initial_state=data["initial_state"],
            bath=bath,
            axes=tuple(axes),
            outputs=outputs,
            output_path=data.get("output_path"),
            a=float(data.get("a", "4")),
            time=float(data.get("time", "0")),
            seed=int(data.get("seed", str(DEFAULT_PRESET_SEED))),
        )
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc


def load_config(path: str) -> ScenarioConfig:
    """parse_config on the contents of a file."""
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())


# ---------------------------------------------------------------------------
# Figure presets
# ---------------------------------------------------------------------------


def _bosonic(size, coupling, temperature, lo, delta) -> BathSpec:
    return BathSpec(
        kind="bosonic", size=size, coupling=coupling, temperature=temperature,
        freq_lo=lo, freq_delta=delta,
    )


def _spin(size, coupling, temperature, lo, delta) -> BathSpec:
    return BathSpec(
        kind="spin", size=size, coupling=coupling, temperature=temperature,
        freq_lo=lo, freq_delta=delta,
    )


def _preset_fig1() -> ScenarioConfig:
    # modulus of the distance-2 factor oscillating through the bound-
    # entanglement threshold: narrow high-frequency band
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 2.0, 1.0, 50.0, 5.0),
        axes=(SweepAxis.linspace("t", 0.0, 0.5, 1001),),
        outputs=("absF1", "R"),
        output_path="fig1.csv",
    )


def _preset_fig2() -> ScenarioConfig:
    # low-frequency band: monotone Gaussian-like decay, faster for larger g
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 1.0, 1.0, 0.0, 5.0),
        axes=(
            SweepAxis.explicit("g", (1.0, 2.0, 3.0)),
            SweepAxis.linspace("t", 0.0, 0.02, 201),
        ),
        outputs=("R",),
        output_path="fig2.csv",
    )


def _preset_fig3a() -> ScenarioConfig:
    # high-frequency band: collapse and revival, no revival for strong g
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 1.0, 1.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("g", (0.5, 2.0, 8.0)),
            SweepAxis.linspace("t", 0.0, 0.5, 501),
        ),
        outputs=("R",),
        output_path="fig3a.csv",
    )


def _preset_fig3b() -> ScenarioConfig:
    # band width controls the revival amplitude; delta = 0 revives fully
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 2.0, 1.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("delta", (0.0, 2.0, 5.0)),
            SweepAxis.linspace("t", 0.0, 0.5, 501),
        ),
        outputs=("R",),
        output_path="fig3b.csv",
    )


def _preset_fig4a() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 3.0, 1.0, 50.0, 8.0),
        axes=(
            SweepAxis.linspace("t", 0.0, 0.1, 101),
            SweepAxis.linspace("T", 1.0, 100.0, 34),
        ),
        outputs=("R",),
        output_path="fig4a.csv",
    )


def _preset_fig4b() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 3.0, 1.0, 50.0, 8.0),
        axes=(
            SweepAxis.explicit("T", (1.0, 10.0, 40.0)),
            SweepAxis.linspace("t", 0.0, 0.1, 501),
        ),
        outputs=("R",),
        output_path="fig4b.csv",
    )


def _preset_fig4c() -> ScenarioConfig:
    # witness vs temperature at a fixed early time, for growing bath sizes
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_bosonic(200, 3.0, 1.0, 50.0, 8.0),
        axes=(
            SweepAxis.explicit("L", (200, 1000, 5000)),
            SweepAxis.linspace("T", 1.0, 100.0, 100),
        ),
        outputs=("R",),
        time=0.003,
        output_path="fig4c.csv",
    )


def _preset_fig5a() -> ScenarioConfig:
    # UPB state in a bosonic bath: free entanglement can appear transiently
    return ScenarioConfig(
        initial_state="upb",
        bath=_bosonic(300, 1.0, 10.0, 50.0, 5.0),
        axes=(SweepAxis.linspace("t", 0.0, 0.5, 501),),
        outputs=("R", "N"),
        output_path="fig5a.csv",
    )


def _preset_fig5b() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="upb",
        bath=_bosonic(300, 5.0, 10.0, 50.0, 5.0),
        axes=(SweepAxis.linspace("t", 0.0, 0.5, 501),),
        outputs=("R", "N"),
        output_path="fig5b.csv",
    )


def _preset_fig5c() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="upb",
        bath=_bosonic(300, 5.0, 10.0, 50.0, 9.0),
        axes=(SweepAxis.linspace("t", 0.0, 0.5, 501),),
        outputs=("R", "N"),
        output_path="fig5c.csv",
    )


def _preset_fig5d() -> ScenarioConfig:
    # both witnesses against temperature, at one early and one later time
    return ScenarioConfig(
        initial_state="upb",
        bath=_bosonic(300, 1.0, 10.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("t", (0.005, 0.115)),
            SweepAxis.linspace("T", 1.0, 100.0, 100),
        ),
        outputs=("R", "N"),
        output_path="fig5d.csv",
    )


def _preset_fig6a() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_spin(300, 0.5, 15.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("g", (0.1, 0.5, 2.0)),
            SweepAxis.linspace("t", 0.0, 0.5, 501),
        ),
        outputs=("R",),
        output_path="fig6a.csv",
    )


def _preset_fig6b() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_spin(300, 0.5, 15.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("delta", (0.0, 5.0, 20.0)),
            SweepAxis.linspace("t", 0.0, 0.5, 501),
        ),
        outputs=("R",),
        output_path="fig6b.csv",
    )


def _preset_fig7a() -> ScenarioConfig:
    # spin bath: stable witness at low temperature, sharp decay at high
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_spin(300, 0.5, 15.0, 50.0, 5.0),
        axes=(
            SweepAxis.linspace("t", 0.0, 0.5, 101),
            SweepAxis.linspace("T", 1.0, 40.0, 14),
        ),
        outputs=("R",),
        output_path="fig7a.csv",
    )


def _preset_fig7b() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_spin(300, 0.5, 15.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("T", (1.0, 10.0, 40.0)),
            SweepAxis.linspace("t", 0.0, 0.5, 501),
        ),
        outputs=("R",),
        output_path="fig7b.csv",
    )


def _preset_fig7c() -> ScenarioConfig:
    return ScenarioConfig(
        initial_state="horodecki",
        bath=_spin(300, 0.5, 15.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("L", (300, 1000, 5000)),
            SweepAxis.linspace("T", 1.0, 100.0, 100),
        ),
        outputs=("R",),
        time=0.005,
        output_path="fig7c.csv",
    )


def _preset_fig8() -> ScenarioConfig:
    # UPB state in a spin bath: the witness oscillates or decays with
    # temperature while the negativity stays identically zero
    return ScenarioConfig(
        initial_state="upb",
        bath=_spin(300, 0.5, 10.0, 50.0, 5.0),
        axes=(
            SweepAxis.explicit("T", (10.0, 15.0, 35.0)),
            SweepAxis.linspace("t", 0.0, 0.5, 301),
        ),
        outputs=("R", "N"),
        output_path="fig8.csv",
    )


_PRESETS = {
    "fig1": _preset_fig1,
    "fig2": _preset_fig2,
    "fig3a": _preset_fig3a,
    "fig3b": _preset_fig3b,
    "fig4a": _preset_fig4a,
    "fig4b": _preset_fig4b,
    "fig4c": _preset_fig4c,
    "fig5a": _preset_fig5a,
    "fig5b": _preset_fig5b,
    "fig5c": _preset_fig5c,
    "fig5d": _preset_fig5d,
    "fig6a": _preset_fig6a,
    "fig6b": _preset_fig6b,
    "fig7a": _preset_fig7a,
    "fig7b": _preset_fig7b,
    "fig7c": _preset_fig7c,
    "fig8": _preset_fig8,
}

_PRESET_ALIASES = {"fig3": "fig3a", "fig4": "fig4a", "fig5": "fig5a", "fig6": "fig6a", "fig7": "fig7a"}


def preset_names() -> tuple[str, ...]:
    """All canonical preset names."""
    return tuple(_PRESETS)


def figure_preset(name: str) -> ScenarioConfig:
    """Scenario reproducing one of the survey figures, with the default
    seed; override the seed or output path with dataclasses.replace."""
    key = _PRESET_ALIASES.get(name, name)
    if key not in _PRESETS:
        known = ", ".join(sorted(set(_PRESETS) | set(_PRESET_ALIASES)))
        raise ConfigError(f"unknown preset {name!r}; known presets: {known}")
    return _PRESETS[key]()
