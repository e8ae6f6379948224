"""Linear recurrences modulo primes: periods, factorizations and the ring Z_p[lambda]."""

import json

from ._recurring import (
    RecurringError,
    companion_power,
    cyclotomic_core,
    discriminant,
    exact_period,
    factor,
    gfp,
    glp,
    idempotents,
    orbit,
    period,
    unit_group_order,
)


def analyze(t, p, max_state_space=100_000):
    """Full report for the core t at the prime p, as a dict."""
    from ._recurring import analyze_json

    return json.loads(analyze_json(list(t), p, max_state_space))


__all__ = [
    "RecurringError",
    "analyze",
    "companion_power",
    "cyclotomic_core",
    "discriminant",
    "exact_period",
    "factor",
    "gfp",
    "glp",
    "idempotents",
    "orbit",
    "period",
    "unit_group_order",
]
