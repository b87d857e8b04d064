"""Environment models and the decoherence factors they induce.

A collective pure-dephasing environment couples only to the total spin-z
of the two qutrits, so its entire effect on the 9x9 density matrix is a
table of complex factors F[M, N] indexed by pairs of sector labels
M, N in {-2..2}: the coherence between sectors M and N is multiplied by
F[M, N], while populations and intra-sector coherences (M == N) are
untouched.

Four environment kinds are supported:

* bosonic -- L harmonic modes in a thermal state. The factor modulus is
  exp(-(M-N)^2 * sum_j (2<n_j>+1) (2 g^2/w_j^2) sin^2(w_j t/2)) and the
  phase is (M^2-N^2) * sum_j (g^2/w_j^2)(w_j t - sin w_j t).
* spin -- L spin-1/2 modes in a thermal state. Each mode contributes
  cos(theta_k) + i tanh(w_k/T) sin(theta_k) with
  theta_k = (g/2)(N-M) w_k t.
* analytic_gaussian / analytic_exponential -- modulus-only models
  exp(-gamma t^2 (M-N)^2/4) and exp(-gamma t (M-N)^2/4) standing in for
  a dense low-frequency spectrum and a flat continuous spectrum.

Units: hbar = k_B = 1 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvariantViolation

BOSONIC = "bosonic"
SPIN = "spin"
ANALYTIC_GAUSSIAN = "analytic_gaussian"
ANALYTIC_EXPONENTIAL = "analytic_exponential"
SAMPLED_KINDS = (BOSONIC, SPIN)
ANALYTIC_KINDS = (ANALYTIC_GAUSSIAN, ANALYTIC_EXPONENTIAL)
BATH_KINDS = SAMPLED_KINDS + ANALYTIC_KINDS

SZ_VALUES = (-2, -1, 0, 1, 2)

# Recorded in output metadata; frequency draws must be reproducible across
# platforms for a fixed seed.
PRNG_NAME = "numpy.random.Generator(PCG64)"


def sample_frequencies(lo: float, delta: float, count: int, seed: int) -> np.ndarray:
    """Draw `count` frequencies i.i.d. uniform on [lo, lo + delta].

    Deterministic for a fixed seed. delta = 0 returns `count` copies of
    lo. Exact zeros (possible only when lo = 0) are rejected and redrawn,
    since a zero-frequency mode has no finite thermal occupation.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if delta < 0:
        raise ValueError(f"delta must be >= 0, got {delta}")
    if lo < 0 or (lo == 0 and delta == 0):
        raise ValueError(f"need lo > 0, or lo = 0 with delta > 0; got lo={lo}, delta={delta}")
    if delta == 0:
        return np.full(count, float(lo))
    rng = np.random.default_rng(seed)
    out = rng.uniform(lo, lo + delta, size=count)
    while True:
        zeros = out == 0.0
        if not zeros.any():
            return out
        out[zeros] = rng.uniform(lo, lo + delta, size=int(zeros.sum()))


def thermal_occupation(omega, temperature: float):
    """Mean excitation 1/(exp(omega/T) - 1) of a bosonic mode; 0 at T = 0.

    Accepts a scalar or an array of frequencies.
    """
    om = np.asarray(omega, dtype=float)
    if temperature == 0.0:
        occ = np.zeros_like(om)
    else:
        x = om / temperature
        occ = np.exp(-x) / (-np.expm1(-x))
    return float(occ) if om.ndim == 0 else occ


@dataclass(frozen=True)
class BathSpec:
    """Immutable description of one environment.

    Sampled kinds (bosonic, spin) need size/coupling/temperature and
    either an explicit frequency tuple or a range [freq_lo, freq_lo +
    freq_delta] plus a seed. Analytic kinds need only `rate` (gamma).
    """

    kind: str
    size: int = 1
    coupling: float = 1.0
    temperature: float = 0.0
    freq_lo: float | None = None
    freq_delta: float | None = None
    frequencies: tuple[float, ...] | None = None
    seed: int | None = None
    rate: float | None = None

    def __post_init__(self):
        if self.kind not in BATH_KINDS:
            raise ValueError(f"unknown bath kind {self.kind!r}; expected one of {BATH_KINDS}")
        if self.kind in ANALYTIC_KINDS:
            if self.rate is None or self.rate <= 0:
                raise ValueError(f"analytic baths need rate > 0, got {self.rate}")
            return
        if self.size < 1:
            raise ValueError(f"bath size must be >= 1, got {self.size}")
        if self.coupling <= 0:
            raise ValueError(f"coupling must be > 0, got {self.coupling}")
        if self.temperature < 0:
            raise ValueError(f"temperature must be >= 0, got {self.temperature}")
        if self.frequencies is not None:
            freqs = tuple(float(w) for w in self.frequencies)
            if len(freqs) != self.size:
                raise ValueError(
                    f"{len(freqs)} frequencies given for a bath of size {self.size}"
                )
            if any(w <= 0 for w in freqs):
                raise ValueError("all frequencies must be > 0")
            object.__setattr__(self, "frequencies", freqs)
            return
        if self.freq_lo is None or self.freq_delta is None:
            raise ValueError("sampled baths need frequencies or a (freq_lo, freq_delta) range")
        if self.freq_lo < 0 or self.freq_delta < 0 or (self.freq_lo == 0 and self.freq_delta == 0):
            raise ValueError(
                f"bad frequency range [lo, lo+delta] with lo={self.freq_lo}, delta={self.freq_delta}"
            )

    def resolve_frequencies(self, seed: int | None = None) -> np.ndarray:
        """Explicit frequencies if given, otherwise a seeded uniform draw."""
        if self.kind in ANALYTIC_KINDS:
            raise ValueError(f"{self.kind} baths have no frequencies")
        if self.frequencies is not None:
            return np.asarray(self.frequencies, dtype=float)
        use = seed if seed is not None else self.seed
        if use is None:
            raise ValueError("no seed available to sample frequencies")
        return sample_frequencies(self.freq_lo, self.freq_delta, self.size, use)


@dataclass(frozen=True)
class FactorTable:
    """All decoherence factors of one environment at one time.

    values[M + 2, N + 2] multiplies the coherence between sectors M and N.
    The diagonal is exactly 1, values are conjugate-symmetric, moduli never
    exceed 1, and the modulus depends on M, N only through |M - N|.
    """

    time: float
    values: np.ndarray = field(repr=False)

    def factor(self, m: int, n: int) -> complex:
        """F[m, n] for sector labels m, n in {-2..2}."""
        return complex(self.values[m + 2, n + 2])

    def validate(self, tol: float = 1e-12) -> "FactorTable":
        """Check the table invariants; raise InvariantViolation on failure."""
        v = self.values
        if v.shape != (5, 5):
            raise InvariantViolation(f"factor table must be 5x5, got {v.shape}")
        if not np.all(v.diagonal() == 1.0):
            raise InvariantViolation("diagonal factors must equal 1 exactly")
        if np.max(np.abs(v - v.conj().T)) > tol:
            raise InvariantViolation("factor table is not conjugate-symmetric")
        mods = np.abs(v)
        if np.max(mods) > 1.0 + tol:
            raise InvariantViolation(f"factor modulus {np.max(mods)} exceeds 1")
        for dist in (1, 2, 3, 4):
            vals = [mods[m + 2, n + 2] for m in SZ_VALUES for n in SZ_VALUES if abs(m - n) == dist]
            if max(vals) - min(vals) > tol:
                raise InvariantViolation(
                    f"moduli at sector distance {dist} differ by {max(vals) - min(vals):.3e}"
                )
        return self


def table_from_moduli(time: float, modulus_by_distance: dict[int, float]) -> FactorTable:
    """Phase-free factor table from moduli keyed by the sector distance
    |M - N| in {1, 2, 3, 4}. Mostly useful for tests and what-if studies;
    nothing checks that the result is a completely positive channel."""
    values = np.ones((5, 5), dtype=complex)
    for m in SZ_VALUES:
        for n in SZ_VALUES:
            if m != n:
                values[m + 2, n + 2] = modulus_by_distance[abs(m - n)]
    return FactorTable(time=float(time), values=values)


def _bosonic_sums(omegas: np.ndarray, g: float, temperature: float, t: float) -> tuple[float, float]:
    """Per-mode sums (S, P): modulus = exp(-(M-N)^2 S), phase = (M^2-N^2) P."""
    occ = thermal_occupation(omegas, temperature)
    inv_w2 = 1.0 / (omegas * omegas)
    amp = (2.0 * g * g) * inv_w2 * (2.0 * occ + 1.0) * np.sin(omegas * t / 2.0) ** 2
    phase = (g * g) * inv_w2 * (omegas * t - np.sin(omegas * t))
    return float(np.sum(amp)), float(np.sum(phase))


def _spin_mode_factors(omegas: np.ndarray, g: float, temperature: float, t: float, step: int) -> complex:
    """Product over modes of cos(theta) + i tanh(w/T) sin(theta) with
    theta = (g/2) * step * w * t, where step = N - M."""
    theta = 0.5 * g * step * omegas * t
    th = np.tanh(omegas / temperature) if temperature > 0 else 1.0
    return complex(np.prod(np.cos(theta) + 1j * th * np.sin(theta)))


def bosonic_factor(bath: BathSpec, t: float, m: int, n: int) -> complex:
    """Decoherence factor of a thermal bosonic bath between sectors m, n."""
    if bath.kind != BOSONIC:
        raise ValueError(f"bosonic_factor needs a bosonic bath, got kind {bath.kind!r}")
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    if m == n:
        return 1.0 + 0.0j
    s, p = _bosonic_sums(bath.resolve_frequencies(), bath.coupling, bath.temperature, t)
    d = m - n
    return complex(np.exp(-(d * d) * s + 1j * (m * m - n * n) * p))


def spin_factor(bath: BathSpec, t: float, m: int, n: int) -> complex:
    """Decoherence factor of a thermal spin-1/2 bath between sectors m, n."""
    if bath.kind != SPIN:
        raise ValueError(f"spin_factor needs a spin bath, got kind {bath.kind!r}")
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    if m == n:
        return 1.0 + 0.0j
    return _spin_mode_factors(
        bath.resolve_frequencies(), bath.coupling, bath.temperature, t, n - m
    )


def analytic_factor(kind: str, gamma: float, t: float, m: int, n: int) -> float:
    """Modulus-only factor of the two analytic decay models (phase = 0).

    Gaussian: exp(-gamma t^2 (m-n)^2/4); exponential: exp(-gamma t (m-n)^2/4).
    Both give exp(-gamma t^2) resp. exp(-gamma t) at sector distance 2 and
    its fourth power at distance 4.
    """
    if kind not in ANALYTIC_KINDS:
        raise ValueError(f"analytic_factor needs one of {ANALYTIC_KINDS}, got {kind!r}")
    if gamma <= 0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    d2 = (m - n) ** 2
    if kind == ANALYTIC_GAUSSIAN:
        return float(np.exp(-gamma * t * t * d2 / 4.0))
    return float(np.exp(-gamma * t * d2 / 4.0))


def gaussian_rate(bath: BathSpec, cutoff_count: int) -> float:
    """Early-time Gaussian decay rate from the lowest-frequency modes.

    Bosonic: 2 g^2 sum (2<n_j>+1); spin: (g^2/2) sum w_k^2 sech^2(w_k/T),
    each over the `cutoff_count` smallest frequencies.
    """
    if bath.kind not in SAMPLED_KINDS:
        raise ValueError(f"gaussian_rate applies to {SAMPLED_KINDS}, got kind {bath.kind!r}")
    if not 1 <= cutoff_count <= bath.size:
        raise ValueError(f"cutoff_count must be in [1, {bath.size}], got {cutoff_count}")
    omegas = np.sort(bath.resolve_frequencies())[:cutoff_count]
    g = bath.coupling
    if bath.kind == BOSONIC:
        occ = thermal_occupation(omegas, bath.temperature)
        return float(2.0 * g * g * np.sum(2.0 * occ + 1.0))
    if bath.temperature == 0.0:
        return 0.0
    x = omegas / bath.temperature
    sech = 2.0 * np.exp(-x) / (1.0 + np.exp(-2.0 * x))  # no overflow for large x
    return float(0.5 * g * g * np.sum(omegas * omegas * sech * sech))


def interval_bound(coupling: float, n_modes: int, omega1: float, omega2: float, t: float) -> float:
    """Closed-form upper bound on ln|F[-2, 0]| for n_modes equally coupled
    modes spread homogeneously over [omega1, omega2].

    Returns (-2 G^2 N / w2^2) * [1 - 2 cos((w2+w1)t/2) sin((w2-w1)t/2) /
    ((w2-w1) t)], which vanishes at t = 0 and tends to -2 G^2 N / w2^2.
    """
    if not 0 < omega1 < omega2:
        raise ValueError(f"need 0 < omega1 < omega2, got {omega1}, {omega2}")
    if coupling <= 0:
        raise ValueError(f"coupling must be > 0, got {coupling}")
    if n_modes < 1:
        raise ValueError(f"n_modes must be >= 1, got {n_modes}")
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    half_sum = 0.5 * (omega2 + omega1) * t
    half_diff = 0.5 * (omega2 - omega1) * t
    # np.sinc(x/pi) = sin(x)/x with the t -> 0 limit built in
    bracket = 1.0 - np.cos(half_sum) * np.sinc(half_diff / np.pi)
    return float(-2.0 * coupling * coupling * n_modes / (omega2 * omega2) * bracket)


def factor_table(bath: BathSpec, t: float, frequencies: np.ndarray | None = None) -> FactorTable:
    """Evaluate all 25 decoherence factors of `bath` at time t.

    `frequencies` overrides the bath's own draw; sweep runners use it to
    reuse one draw across a whole time/temperature grid.
    """
    if t < 0:
        raise ValueError(f"time must be >= 0, got {t}")
    values = np.ones((5, 5), dtype=complex)
    if bath.kind in ANALYTIC_KINDS:
        for m in SZ_VALUES:
            for n in SZ_VALUES:
                if m != n:
                    values[m + 2, n + 2] = analytic_factor(bath.kind, bath.rate, t, m, n)
    elif bath.kind == BOSONIC:
        omegas = frequencies if frequencies is not None else bath.resolve_frequencies()
        s, p = _bosonic_sums(omegas, bath.coupling, bath.temperature, t)
        for m in SZ_VALUES:
            for n in SZ_VALUES:
                if m != n:
                    d = m - n
                    values[m + 2, n + 2] = np.exp(-(d * d) * s + 1j * (m * m - n * n) * p)
    else:
        omegas = frequencies if frequencies is not None else bath.resolve_frequencies()
        for step in (1, 2, 3, 4):
            f = _spin_mode_factors(omegas, bath.coupling, bath.temperature, t, step)
            for m in SZ_VALUES:
                for n in SZ_VALUES:
                    if n - m == step:
                        values[m + 2, n + 2] = f
                        values[n + 2, m + 2] = np.conj(f)
    return FactorTable(time=float(t), values=values)
