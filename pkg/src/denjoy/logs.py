"""Log-domain helpers for tables whose values overflow or underflow floats."""

from __future__ import annotations

import math

import numpy as np

NEG_INF = float("-inf")


def log_sum_exp(log_values) -> float:
    """Stable log(sum(exp(v))) over a 1-d array; empty input gives -inf."""
    arr = np.asarray(log_values, dtype=float)
    if arr.size == 0:
        return NEG_INF
    top = float(np.max(arr))
    if top == NEG_INF:
        return NEG_INF
    return top + math.log(float(np.sum(np.exp(arr - top))))


def log_dot_exp(log_values, counts) -> float:
    """log(sum(counts * exp(log_values))) with nonnegative integer counts."""
    arr = np.asarray(log_values, dtype=float)
    cnt = np.asarray(counts, dtype=float)
    mask = cnt > 0
    if not np.any(mask):
        return NEG_INF
    return log_sum_exp(arr[mask] + np.log(cnt[mask]))


def log_ratio_minus_one(delta_log) -> np.ndarray:
    """|exp(delta) - 1| computed through expm1 for small deltas."""
    return np.abs(np.expm1(np.asarray(delta_log, dtype=float)))


def safe_exp(x):
    """exp clipped to the float range instead of overflowing to a warning."""
    return np.exp(np.clip(x, -745.0, 709.0))
