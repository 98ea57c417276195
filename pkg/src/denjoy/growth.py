"""Orbit growth tables and their slowly varying regularisation.

The regularised envelope of a non-decreasing table f >= 1 is

    F(n) = max over m >= n of f(m)^(n/m),

computed entirely in the log domain as n * suffix_max(log f(m) / m).  The
suffix maximum makes the computation O(N) and keeps F monotone with F >= f.
Values beyond the table's horizon are unknowable; entries whose maximum is
achieved by the last column carry a tail-sensitive flag instead of a guess.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import StateSpaceError
from .orbits import OrbitGraph, ball_profile


@dataclass
class GrowthProfile:
    """The table n -> |S^n x| together with where it was measured."""

    counts: list[int]
    source: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.counts:
            raise StateSpaceError("empty growth profile")
        if any(c <= 0 for c in self.counts):
            raise StateSpaceError("growth counts must be positive")
        if any(b > a for a, b in zip(self.counts[1:], self.counts)):
            raise StateSpaceError("growth counts must be non-decreasing")

    @property
    def horizon(self):
        return len(self.counts) - 1

    def log_counts(self):
        return np.log(np.array(self.counts, dtype=float))


def profile_from_graph(graph: OrbitGraph, basepoint=None, horizon=None) -> GrowthProfile:
    counts = ball_profile(graph, basepoint, horizon)
    x = graph.basepoints[0] if basepoint is None else basepoint
    return GrowthProfile(counts, {
        "family": graph.family.name,
        "basepoint": graph.family.state_str(x),
        "radius": graph.radius,
    })


@dataclass
class RegularizedGrowth:
    """A non-decreasing envelope stored as natural logs.

    ``attained_at[n]`` is the smallest column achieving the maximum (absent
    for formula-defined tables) and ``tail_sensitive[n]`` marks entries
    whose value would change if the horizon were extended.
    """

    log_values: np.ndarray
    attained_at: np.ndarray | None = None
    tail_sensitive: np.ndarray | None = None
    source: dict = field(default_factory=dict)

    @property
    def horizon(self):
        return len(self.log_values) - 1

    def log_value(self, n):
        return float(self.log_values[n])

    def value(self, n):
        return math.exp(self.log_value(n))

    def ratios(self):
        """F(n+1)/F(n) for n = 0..N-1."""
        return np.exp(np.diff(self.log_values))

    def log_ratios(self):
        return np.diff(self.log_values)


def regularize(table, horizon=None, source=None) -> RegularizedGrowth:
    """Regularise a growth table given as a GrowthProfile or positive counts."""
    if isinstance(table, GrowthProfile):
        logs = table.log_counts()
        source = source or dict(table.source)
    else:
        arr = np.asarray(table, dtype=float)
        if arr.size == 0:
            raise StateSpaceError("empty profile")
        if np.any(arr < 1):
            raise StateSpaceError("profile values must be >= 1")
        logs = np.log(arr)
    return regularize_logs(logs, horizon=horizon, source=source)


def regularize_logs(log_table, horizon=None, source=None) -> RegularizedGrowth:
    """Regularise a table already stored as natural logs of values >= 1."""
    logs = np.asarray(log_table, dtype=float)
    if logs.size == 0:
        raise StateSpaceError("empty profile")
    if horizon is not None:
        if horizon + 1 > len(logs):
            raise StateSpaceError("requested horizon exceeds the table")
        logs = logs[: horizon + 1]
    if np.any(logs < -1e-12):
        raise StateSpaceError("profile values must be >= 1")
    n_top = len(logs) - 1

    log_env = np.zeros(n_top + 1)
    attained = np.zeros(n_top + 1, dtype=np.int64)
    tail = np.zeros(n_top + 1, dtype=bool)
    log_env[0] = logs[0]
    if n_top >= 1:
        m = np.arange(1, n_top + 1, dtype=float)
        per = logs[1:] / m
        # suffix maximum of log f(m)/m; ties resolve to the smallest column
        suf = np.empty(n_top)
        arg = np.empty(n_top, dtype=np.int64)
        best = -np.inf
        best_at = n_top
        for i in range(n_top - 1, -1, -1):
            if per[i] >= best:
                best = per[i]
                best_at = i + 1
            suf[i] = best
            arg[i] = best_at
        ns = np.arange(1, n_top + 1, dtype=float)
        log_env[1:] = ns * suf
        attained[1:] = arg
        tail[1:] = per[-1] >= suf - 1e-15
    # rounding guard: the exact envelope is monotone
    log_env = np.maximum.accumulate(log_env)
    if np.any(log_env[1:] + 1e-12 < logs[1:]):
        raise StateSpaceError("internal error: envelope fails to dominate the table")
    return RegularizedGrowth(log_env, attained, tail, dict(source or {}))


def from_log_table(log_values, source=None) -> RegularizedGrowth:
    """Wrap an explicit log-domain envelope table, checking monotonicity."""
    logs = np.asarray(log_values, dtype=float)
    if np.any(np.diff(logs) < -1e-12):
        raise StateSpaceError("envelope table must be non-decreasing")
    return RegularizedGrowth(np.maximum.accumulate(logs), None, None,
                             dict(source or {}))


def dominating_envelope(balls, source=None) -> RegularizedGrowth:
    """Regularise n -> n^2 * |B(n)| so the result dominates it and varies slowly."""
    if isinstance(balls, GrowthProfile):
        source = source or dict(balls.source)
        balls = balls.counts
    balls = list(balls)
    if not balls:
        raise StateSpaceError("empty ball table")
    n = np.arange(len(balls), dtype=float)
    logs = np.log(np.array(balls, dtype=float))
    logf = np.where(n >= 1, 2.0 * np.log(np.maximum(n, 1.0)) + logs, 0.0)
    logf = np.maximum(logf, 0.0)
    env = regularize_logs(logf, source=source)
    env.source.setdefault("kind", "n2_ball_domination")
    if len(balls) == 2:
        env.source["degenerate_horizon"] = True
    return env


_VERDICT_SUBEXP = "consistent-with-subexponential"
_VERDICT_EXP = "consistent-with-exponential"
_VERDICT_NONE = "inconclusive"


@dataclass
class GrowthVerdict:
    verdict: str
    rate: float
    roots: np.ndarray
    root_slope: float
    band: tuple
    horizon: int

    @property
    def warning(self):
        return self.verdict != _VERDICT_SUBEXP


def growth_verdict(profile: GrowthProfile, band=(1.25, 1.40)) -> GrowthVerdict:
    """Finite-horizon growth classification; a heuristic, never a proof.

    The rate estimate is exp(slope of log f over the last half of the
    horizon); the band separates the verdict labels.
    """
    if profile.horizon < 7:
        raise StateSpaceError("diagnostic needs a profile of length >= 8")
    counts = np.array(profile.counts, dtype=float)
    n = np.arange(len(counts))
    roots = counts[1:] ** (1.0 / n[1:])
    lo = max(1, profile.horizon // 2)
    xs = n[lo:]
    rate = math.exp(np.polyfit(xs, np.log(counts[lo:]), 1)[0]) if len(xs) > 1 else 1.0
    root_slope = np.polyfit(xs, roots[lo - 1:], 1)[0] if len(xs) > 1 else 0.0
    low, high = band
    if rate <= low:
        verdict = _VERDICT_SUBEXP
    elif rate >= high and roots[-1] > 1.05:
        verdict = _VERDICT_EXP
    else:
        verdict = _VERDICT_NONE
    return GrowthVerdict(verdict, rate, roots, float(root_slope), band,
                         profile.horizon)


def write_growth_csv(path, profile: GrowthProfile | None,
                     envelope: RegularizedGrowth):
    ratios = envelope.ratios()
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "f", "logF", "ratio", "tail_flag"])
        for n in range(envelope.horizon + 1):
            f_val = profile.counts[n] if profile and n <= profile.horizon else ""
            ratio = repr(float(ratios[n])) if n < envelope.horizon else ""
            flag = ""
            if envelope.tail_sensitive is not None:
                flag = int(bool(envelope.tail_sensitive[n]))
            w.writerow([n, f_val, repr(float(envelope.log_values[n])), ratio, flag])


def read_growth_csv(path):
    """Read back (counts or None, log values) from write_growth_csv output."""
    counts, logs = [], []
    with open(path, newline="") as fh:
        r = csv.DictReader(fh)
        for row in r:
            logs.append(float(row["logF"]))
            counts.append(int(row["f"]) if row["f"] else None)
    if any(c is None for c in counts):
        counts = None
    return counts, np.array(logs)
