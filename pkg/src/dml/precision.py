"""Working-precision policy for the reconstruction arithmetic."""

import math
import os

from mpmath.ctx_mp import MPContext

DEFAULT_DIGITS = 64
MIN_DIGITS = 16
ENV_VAR = "DML_PRECISION_DIGITS"


def default_digits(n_moments: int = 0) -> int:
    """Digits used when the caller does not choose.

    Long moment sequences get extra headroom, roughly one digit per fifty
    moments on top of 48.  The environment variable ``DML_PRECISION_DIGITS``
    overrides the policy.
    """
    env = os.environ.get(ENV_VAR)
    if env:
        return check_digits(int(env))
    if n_moments > 1000:
        return max(DEFAULT_DIGITS, math.ceil(n_moments / 50) + 48)
    return DEFAULT_DIGITS


def check_digits(digits: int) -> int:
    digits = int(digits)
    if digits < MIN_DIGITS:
        raise ValueError(f"precision must be at least {MIN_DIGITS} digits, got {digits}")
    return digits


def context(digits: int) -> MPContext:
    """A private mpmath context; global ``mpmath.mp`` state is never touched."""
    ctx = MPContext()
    ctx.dps = check_digits(digits)
    return ctx
