"""Different environment settings."""
import os

from bellkit.errors import ConfigurationError

SIEVE_BOUND_VARIABLE = "BELLKIT_SIEVE_BOUND"
DEFAULT_SIEVE_BOUND = 10 ** 6

# Significant digits of float output (log driver only)
FLOAT_DIGITS = 15

EXIT_CODES = {
    "ok": 0,
    "verdict_false": 1,
    "usage": 2,
    "io": 3,
    "mismatch": 4,
}

COEFFICIENT_PATHS = ("recurrence", "bellpoly", "product")

# Polynomial families: normalization of the t-variable and required parameters
FAMILY_MAP = {
    "bernoulli": {"normalization": "egf", "params": ()},
    "euler": {"normalization": "egf", "params": ()},
    "hermite": {"normalization": "egf", "params": ()},
    "touchard": {"normalization": "egf", "params": ()},
    "laguerre": {"normalization": "ogf", "params": ("alpha",)},
    "charlier": {"normalization": "egf", "params": ("a",)},
}


def sieve_bound():
    """Get bound of the smallest-prime-factor sieve.

    Reads ``BELLKIT_SIEVE_BOUND`` and falls back to ``DEFAULT_SIEVE_BOUND``.

    Returns:
        int: sieve bound (positive)

    Raises:
        ConfigurationError: if the variable is not a positive integer
    """
    raw = os.environ.get(SIEVE_BOUND_VARIABLE)
    if raw is None or not raw.strip():
        return DEFAULT_SIEVE_BOUND
    try:
        bound = int(raw)
    except ValueError:
        raise ConfigurationError(
            f"{SIEVE_BOUND_VARIABLE} must be a positive integer, got {raw!r}"
        ) from None
    if bound < 1:
        raise ConfigurationError(
            f"{SIEVE_BOUND_VARIABLE} must be a positive integer, got {raw!r}"
        )
    return bound
