"""Power-law degree sequences and the giant-component threshold exponent.

The two-parameter family puts floor(e^alpha * i^(-beta)) vertices at
degree i for 1 <= i <= floor(e^(alpha/beta)); alpha sets the scale
(n is Theta(e^alpha) for beta > 1) and beta the decay. The critical
decay exponent is the root beta_0 = 3.47875... of

    zeta(beta - 2) - 2 * zeta(beta - 1) = 0:

below it the expected degree-biased increase sum i(i-2) n_i / n is
positive and a giant component appears; at or above it the sum is
nonpositive and none does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .degseq import DegreeSequence
from .errors import ConvergenceFailure, DomainError, ValidationError

__all__ = ["ACLParams", "acl_sequence", "zeta", "beta0"]

DEFAULT_VERTEX_BUDGET = 10_000_000
# absorbs float error when e^alpha * i^(-beta) is an exact integer
# (alpha = ln 100 etc.); real inputs never sit within 1e-9 of one
FLOOR_GUARD = 1e-9
ZETA_PARTIAL_CAP = 1_000_000


@dataclass(frozen=True)
class ACLParams:
    alpha: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.alpha) and math.isfinite(self.beta)):
            raise ValidationError("alpha and beta must be finite")
        if self.alpha < 0 or self.beta <= 0:
            raise ValidationError("need alpha >= 0 and beta > 0")

    @property
    def max_degree(self) -> int:
        return int(math.floor(math.exp(self.alpha / self.beta) + FLOOR_GUARD))


def acl_sequence(params: ACLParams, vertex_budget: int = DEFAULT_VERTEX_BUDGET):
    """Counts n_i = floor(e^alpha * i^(-beta)) for i up to the max degree.

    If the resulting degree sum is odd, one extra degree-1 vertex is
    appended (the minimal perturbation: M and R move by at most 1); the
    fix is reported in the returned metadata. OverflowError when the
    max degree or the vertex total exceeds vertex_budget.
    """
    imax = params.max_degree
    if imax > vertex_budget:
        raise OverflowError(f"max degree {imax} exceeds vertex budget {vertex_budget}")
    counts = {}
    total = 0
    for i in range(1, imax + 1):
        ni = int(math.floor(math.exp(params.alpha - params.beta * math.log(i)) + FLOOR_GUARD))
        if ni <= 0:
            continue
        counts[i] = ni
        total += ni
        if total > vertex_budget:
            raise OverflowError(f"vertex count exceeds budget {vertex_budget}")
    if not counts:
        raise ValidationError(f"{params} yields an empty sequence")
    parity_fixed = False
    if sum(i * m for i, m in counts.items()) % 2 != 0:
        counts[1] = counts.get(1, 0) + 1
        parity_fixed = True
    return DegreeSequence(counts), {"parity_fixed": parity_fixed, "max_degree": imax}


def zeta(x: float, tol: float = 1e-10) -> float:
    """Riemann zeta on (1, inf) by partial sum plus integral tail.

    N terms are summed directly and the tail bounded by
    N^(1-x)/(x-1); N is chosen so the leading error term N^(-x)/2 is
    below tol. When that N would exceed the 10^6 cap, or tol is below
    1e-10, the Euler-Maclaurin corrections -N^(-x)/2 + x*N^(-x-1)/12
    are applied instead of growing N.
    """
    if x <= 1:
        raise DomainError(f"zeta requires x > 1, got {x}")
    if tol <= 0:
        raise DomainError("tol must be positive")
    # N^(-x)/2 <= tol/4 leaves headroom for the next-order term
    n_needed = (2.0 / tol) ** (1.0 / x)
    refine = tol < 1e-10 or n_needed > ZETA_PARTIAL_CAP
    n = int(min(max(n_needed, 10), ZETA_PARTIAL_CAP))
    ks = range(1, n + 1)
    partial = math.fsum(k ** (-x) for k in ks)
    tail = n ** (1.0 - x) / (x - 1.0)
    value = partial + tail
    if refine:
        value += -0.5 * n ** (-x) + (x / 12.0) * n ** (-x - 1.0)
    return value


def _threshold_gap(beta: float, tol: float) -> float:
    return zeta(beta - 2.0, tol) - 2.0 * zeta(beta - 1.0, tol)


def beta0(tol: float = 1e-4, bracket=(3.05, 3.95)) -> float:
    """Root of zeta(b-2) = 2*zeta(b-1) by bisection, within tol.

    The default bracket keeps both zeta arguments above 1 and straddles
    the root near 3.47875.
    """
    if tol <= 0:
        raise DomainError("tol must be positive")
    lo, hi = bracket
    ztol = min(tol * 1e-3, 1e-12)
    flo, fhi = _threshold_gap(lo, ztol), _threshold_gap(hi, ztol)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ConvergenceFailure(f"no sign change on [{lo}, {hi}]: f={flo:.3g},{fhi:.3g}")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fmid = _threshold_gap(mid, ztol)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)
