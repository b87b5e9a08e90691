"""Numeric comparison helpers.

All approximate comparisons in the package go through these functions with a
single default tolerance, applied both absolutely and relative to the larger
magnitude. Integer-valued inputs stay exact: the formulas only add, subtract
and compare, so small integers never pick up rounding error and equality
checks on them are literal.
"""

from __future__ import annotations

import math

DEFAULT_TOLERANCE = 1e-9


def resolve_tol(tol: float | None) -> float:
    return DEFAULT_TOLERANCE if tol is None else tol


def close(a: float, b: float, tol: float | None = None) -> bool:
    """True when a and b agree within absolute-plus-relative tolerance."""
    t = resolve_tol(tol)
    if a == b:  # covers exact hits and matching infinities
        return True
    if math.isinf(a) or math.isinf(b):
        return False
    return abs(a - b) <= t + t * max(abs(a), abs(b))


def leq(a: float, b: float, tol: float | None = None) -> bool:
    """True when a <= b, give or take tolerance."""
    return a <= b or close(a, b, tol)
