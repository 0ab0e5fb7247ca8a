"""Tunable defaults: resource caps, sweep depths, reproducibility seed."""

import os

# Environment variable overriding the default term cap for grown elements.
MAX_TERMS_ENV = "CUNTZ_MAX_TERMS"

DEFAULT_MAX_TERMS = 500_000

# Word-length bound used by the sampled condition sweeps.
DEFAULT_SWEEP_DEPTH = 2

# Largest order accepted by the closed-formula constructors.
DEFAULT_P_MAX_RFS = 6
DEFAULT_P_MAX_RPFS = 4

# Coordinate-space bound for exact rank computations.
DEFAULT_SPAN_BASIS_CAP = 65_536

# Seed for every randomized sweep; recorded here so runs are reproducible.
DEFAULT_RNG_SEED = 271828


def max_terms_cap():
    """Current term cap: environment override if set, else the default."""
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return DEFAULT_MAX_TERMS
    value = int(raw)
    if value <= 0:
        raise ValueError(f"{MAX_TERMS_ENV} must be positive, got {raw}")
    return value


def default_car_range(p):
    """Generator range for anticommutator sweeps: 8 for a single seed, 3p else."""
    return 8 if p <= 1 else 3 * p
