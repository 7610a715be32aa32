"""Exact combinatorics of labeled 2-regular simple graphs.

C_t counts the ways to arrange t labeled vertices into disjoint cycles
of length at least 3 (C_0 = 1, C_1 = C_2 = 0). Conditioning on the
cycle containing the lowest label gives the recurrence

    C_t = sum_{l=3..t} binom(t-1, l-1) * (l-1)!/2 * C_{t-l},

which also yields p_{l,t}, the chance a fixed vertex lies on an
l-cycle, an exactly uniform sequential sampler, and a longest-cycle
tail DP. Everything is maintained twice: arbitrary-precision integers
up to a configurable cap (factorials overflow doubles immediately) and
a log-space mirror for large t.

The same machinery prices the degree-2 mass split of a graph with m'
suppressible kernel edges: with s degree-2 vertices on kernel paths and
t in bare cycles, the number of completions is

    N(s, t, m') = binom(s+t, t) * (s+m'-1)!/(m'-1)! * C_t,

and q_t = N(n2'-t, t, m') / sum_s N(...) is the probability that
exactly t of the n2' unplaced degree-2 vertices land in cyclic
components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .rng import random_below, rng_stream

__all__ = [
    "CycleCountTable",
    "c_table",
    "p_cycle",
    "sample_2regular",
    "q_distribution",
    "longest_cycle_tail",
    "asymptotic_c",
]

EXACT_CAP = 300
NEG_INF = float("-inf")


@dataclass(frozen=True)
class CycleCountTable:
    exact: tuple        # C_0..C_exact_tmax as Python ints
    logc: np.ndarray    # log C_0..log C_tmax, -inf where C_t = 0
    tmax: int
    exact_tmax: int

    def c(self, t: int) -> int:
        if not (0 <= t <= self.exact_tmax):
            raise DomainError(f"exact C_{t} not stored (exact_tmax={self.exact_tmax})")
        return self.exact[t]

    def has_exact(self, t: int) -> bool:
        return 0 <= t <= self.exact_tmax


def _log_weights(t: int, ells: np.ndarray) -> np.ndarray:
    # log of binom(t-1, l-1)*(l-1)!/2 = (t-1)!/(2*(t-l)!)
    return math.lgamma(t) - np.array([math.lgamma(t - l + 1) for l in ells]) - math.log(2.0)


def c_table(tmax: int, exact_tmax: int | None = None) -> CycleCountTable:
    """Build C_0..C_tmax.

    Exact integers are computed up to exact_tmax (default
    min(tmax, 300)); the log mirror covers everything, continued past
    the exact range by a log-sum-exp version of the recurrence.
    """
    if tmax < 0:
        raise DomainError("tmax must be >= 0")
    if exact_tmax is None:
        exact_tmax = min(tmax, EXACT_CAP)
    exact_tmax = min(exact_tmax, tmax)

    exact = [1, 0, 0]
    for t in range(3, exact_tmax + 1):
        # doubled weight 2*(t-1)!/(2*(t-l)!) = (t-1)...(t-l+1), a falling factorial
        total = 0
        weight = (t - 1) * (t - 2)
        for l in range(3, t + 1):
            total += weight * exact[t - l]
            weight *= t - l
        exact.append(total // 2)
    exact = exact[: max(exact_tmax + 1, 0)]

    logc = np.full(tmax + 1, NEG_INF)
    for t in range(0, min(exact_tmax, tmax) + 1):
        if exact[t] > 0:
            logc[t] = _log_int(exact[t])
    for t in range(max(3, exact_tmax + 1), tmax + 1):
        ells = np.arange(3, t + 1)
        terms = _log_weights(t, ells) + logc[t - ells]
        logc[t] = _logsumexp(terms)
    return CycleCountTable(tuple(exact), logc, tmax, exact_tmax)


def _log_int(x: int) -> float:
    return math.log(x)


def _logsumexp(terms: np.ndarray) -> float:
    finite = terms[np.isfinite(terms)]
    if finite.size == 0:
        return NEG_INF
    peak = finite.max()
    return float(peak + np.log(np.exp(finite - peak).sum()))


def _check_cycle_args(ell: int, t: int, table: CycleCountTable):
    if not (3 <= ell <= t):
        raise DomainError(f"need 3 <= ell <= t, got ell={ell}, t={t}")
    if t > table.tmax:
        raise DomainError(f"t={t} beyond table tmax={table.tmax}")


def p_cycle(ell: int, t: int, table: CycleCountTable):
    """P(fixed vertex lies on an ell-cycle) in a uniform 2-regular graph.

    Exact Fraction while the table's integer range covers t, float from
    the log mirror beyond.
    """
    _check_cycle_args(ell, t, table)
    if table.has_exact(t):
        ct = table.c(t)
        if ct == 0:
            raise DomainError(f"C_{t} = 0")
        num = math.comb(t - 1, ell - 1) * math.factorial(ell - 1) * table.c(t - ell)
        return Fraction(num, 2 * ct)
    if table.logc[t] == NEG_INF:
        raise DomainError(f"C_{t} = 0")
    logp = (
        math.lgamma(t)
        - math.lgamma(t - ell + 1)
        - math.log(2.0)
        + table.logc[t - ell]
        - table.logc[t]
    )
    return math.exp(logp)


def asymptotic_c(t: int) -> float:
    """log of the asymptotic form e^(-3/4)/sqrt(pi t) * t! * (1 - 5/(8t)).

    The first-order correction follows from singularity analysis of the
    generating function exp(-z/2 - z^2/4)/sqrt(1-z); exact counts pin
    the sign (the ratio to C_t is 1 + O(t^-2) only with the minus).
    """
    if t < 1:
        raise DomainError("t must be >= 1")
    return -0.75 - 0.5 * math.log(math.pi * t) + math.lgamma(t + 1) + math.log1p(-5.0 / (8 * t))


def sample_2regular(t: int, seed: int, table: CycleCountTable):
    """Exactly uniform 2-regular graph on {1..t} as a list of cycles.

    Sequentially gives the lowest unplaced label a cycle length with the
    exact probability (integer cumulative weights against a uniform
    big-integer draw), then a uniform cycle on a uniform companion set.
    Each cycle is reported starting at its smallest member, direction
    canonicalized. Requires the table's exact range to cover t.
    """
    if t == 0:
        return []
    if t in (1, 2):
        raise DomainError("no 2-regular graph on 1 or 2 vertices")
    if not table.has_exact(t):
        raise DomainError(
            f"exact sampling needs exact C values up to t={t}; "
            f"build c_table(t, exact_tmax=t)"
        )
    if table.c(t) == 0:
        raise DomainError(f"C_{t} = 0")

    rng = rng_stream(seed)
    remaining = list(range(1, t + 1))
    cycles = []
    while remaining:
        r = len(remaining)
        v = remaining[0]
        draw = random_below(rng, table.c(r))
        cum = 0
        weight = (r - 1) * (r - 2)  # 2 * (r-1)!/(r-l)! at l=3
        chosen_len = None
        for l in range(3, r + 1):
            cum += weight * table.c(r - l)  # doubled weights vs. doubled draw
            if 2 * draw < cum:
                chosen_len = l
                break
            weight *= r - l
        assert chosen_len is not None, "cumulative weights must exhaust C_r"
        others = remaining[1:]
        idx = rng.choice(r - 1, size=chosen_len - 1, replace=False)
        companions = [others[int(i)] for i in idx]
        cycle = [v] + companions
        cycles.append(_canonical_cycle(cycle))
        picked = set(cycle)
        remaining = [w for w in remaining if w not in picked]
    return cycles


def _canonical_cycle(cycle):
    # rotate to the smallest label, then fix direction by second element
    k = cycle.index(min(cycle))
    rot = cycle[k:] + cycle[:k]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def q_distribution(n2prime: int, mprime: int, table: CycleCountTable, mode: str = "auto"):
    """Probability that t of n2' unplaced degree-2 vertices are cyclic.

    Support {0} u [3, n2']. mode "exact" returns Fractions (requires the
    exact table), "log" returns floats, "auto" picks exact when it is
    affordable (n2' <= 300 and covered).
    """
    if mprime < 1:
        raise DomainError("mprime must be >= 1")
    if n2prime < 0:
        raise DomainError("n2prime must be >= 0")
    if n2prime > table.tmax:
        raise DomainError(f"n2prime={n2prime} beyond table tmax={table.tmax}")
    ts = [0] + [t for t in range(3, n2prime + 1)]
    if mode == "auto":
        mode = "exact" if table.has_exact(n2prime) and n2prime <= EXACT_CAP else "log"
    if mode == "exact":
        if not table.has_exact(n2prime):
            raise DomainError("exact mode needs exact C values up to n2prime")
        weights = {}
        for t in ts:
            s = n2prime - t
            weights[t] = (
                math.comb(s + t, t)
                * math.factorial(s + mprime - 1)
                // math.factorial(mprime - 1)
                * table.c(t)
            )
        total = sum(weights.values())
        return {t: Fraction(w, total) for t, w in weights.items()}
    if mode == "log":
        logs = np.empty(len(ts))
        for i, t in enumerate(ts):
            s = n2prime - t
            logs[i] = (
                math.lgamma(s + t + 1)
                - math.lgamma(s + 1)
                - math.lgamma(t + 1)
                + math.lgamma(s + mprime)
                - math.lgamma(mprime)
                + table.logc[t]
            )
        norm = _logsumexp(logs)
        return {t: float(math.exp(l - norm)) if l != NEG_INF else 0.0 for t, l in zip(ts, logs)}
    raise ValueError(f"unknown mode {mode!r}")


def longest_cycle_tail(t: int, L: int, table: CycleCountTable):
    """P(some cycle has length >= L) in a uniform 2-regular graph on t vertices.

    DP on the no-long-cycle probability f: conditioning on the lowest
    label's cycle, f(r) = sum_{l=3}^{min(L-1,r)} p_{l,r} f(r-l) with
    f(0)=1. Exact (integer DP on g = f*C, one division at the end) when
    the exact table covers t; float log-space DP otherwise.
    """
    if L < 3:
        raise DomainError("L must be >= 3")
    if t == 0:
        return Fraction(0)
    if t in (1, 2):
        raise DomainError("no 2-regular graph on 1 or 2 vertices")
    if t > table.tmax:
        raise DomainError(f"t={t} beyond table tmax={table.tmax}")

    if table.has_exact(t):
        # g(r) = f(r) * C_r stays integral: g(r) = sum_l (r-1)!/(2(r-l)!) g(r-l)
        g = [0] * (t + 1)
        g[0] = 1
        for r in range(3, t + 1):
            hi = min(L - 1, r)
            acc = 0
            weight = (r - 1) * (r - 2)  # doubled, as in the recurrence
            for l in range(3, hi + 1):
                acc += weight * g[r - l]
                weight *= r - l
            g[r] = acc // 2
        return 1 - Fraction(g[t], table.c(t))

    # log-space: f in probability scale, weights from lgamma
    f = np.zeros(t + 1)
    f[0] = 1.0
    for r in range(3, t + 1):
        if table.logc[r] == NEG_INF:
            continue
        hi = min(L - 1, r)
        if hi < 3:
            f[r] = 0.0
            continue
        ells = np.arange(3, hi + 1)
        logp = _log_weights(r, ells) + table.logc[r - ells] - table.logc[r]
        f[r] = float(np.exp(logp) @ f[r - ells])
    return 1.0 - float(f[t])
