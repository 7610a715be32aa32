"""Degree sequences: parsing, feasibility, and the giant-component invariants.

A degree sequence is a multiset of positive vertex degrees. Whether a
uniformly random simple graph with those degrees has a giant component is
governed by three integers computed from the sorted sequence:

* ``M``  -- the sum of the degrees that are not 2 (degree-2 vertices are
  neutral in component exploration: visiting one neither opens nor closes
  boundary edges),
* ``jD`` -- with degrees sorted ascending, the first index at which the
  running sum of d*(d-2) turns positive (or n if it never does),
* ``R``  -- the degree mass from position jD upward.

The classifier: a giant component appears (whp, at scale) when R is a
constant fraction of M, and does not when R/M vanishes, provided M itself
is large enough ("well-behaved"). The classical ratio sum(d*(d-2))/sum(d)
is also reported; it can be badly misleading on its own (see the star-
plus-matching demo), which is the whole point of jD and R.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import json

import numpy as np

from .errors import (
    InfeasibleSequence,
    ParseError,
    PreconditionViolated,
    ValidationError,
)

__all__ = [
    "DegreeSequence",
    "InvariantReport",
    "Classification",
    "parse_sequence",
    "is_feasible",
    "invariants",
    "classify",
    "check_claim0",
    "r_lower_bound_check",
]

DEFAULT_LAMBDA_THRESH = 30
DEFAULT_EPS = Fraction(1, 10)
DEFAULT_DELTA = Fraction(1, 100)


class DegreeSequence:
    """Multiset of positive vertex degrees, stored in count form.

    Count form keeps power-law sequences cheap: a million degree-1
    vertices are one dictionary entry. The list form is materialized on
    demand, sorted ascending, with vertex i carrying the i-th degree.
    """

    def __init__(self, counts: dict):
        clean = {}
        for degree, mult in counts.items():
            d, m = int(degree), int(mult)
            if d != degree or m != mult:
                raise ValidationError(f"non-integer entry {degree}:{mult}")
            if d <= 0:
                raise ValidationError(f"degree {d} not allowed (degrees must be >= 1)")
            if m < 0:
                raise ValidationError(f"negative multiplicity for degree {d}")
            if m > 0:
                clean[d] = clean.get(d, 0) + m
        if not clean:
            raise ValidationError("empty degree sequence")
        self.counts = clean
        self.n = sum(clean.values())
        self.degree_sum = sum(d * m for d, m in clean.items())

    @classmethod
    def from_list(cls, degrees) -> "DegreeSequence":
        counts = {}
        for d in degrees:
            counts[d] = counts.get(d, 0) + 1
        return cls(counts)

    @property
    def max_degree(self) -> int:
        return max(self.counts)

    @property
    def n2(self) -> int:
        """Number of degree-2 entries."""
        return self.counts.get(2, 0)

    @property
    def kernel_mass(self) -> int:
        """M: the sum of all degrees different from 2."""
        return self.degree_sum - 2 * self.n2

    def to_list(self) -> np.ndarray:
        """Degrees sorted ascending; vertex i gets position i."""
        out = np.empty(self.n, dtype=np.int64)
        pos = 0
        for d in sorted(self.counts):
            m = self.counts[d]
            out[pos : pos + m] = d
            pos += m
        return out

    def __eq__(self, other):
        return isinstance(other, DegreeSequence) and self.counts == other.counts

    def __hash__(self):
        return hash(frozenset(self.counts.items()))

    def __repr__(self):
        body = ", ".join(f"{d}:{m}" for d, m in sorted(self.counts.items()))
        return f"DegreeSequence({{{body}}})"


def parse_sequence(text: str) -> DegreeSequence:
    """Parse a degree file.

    Two layouts: one positive integer per line (list form), or a literal
    header line ``#counts`` followed by tab-separated ``degree<TAB>count``
    pairs. Blank lines are ignored. Malformed lines raise ParseError with
    the 1-based line number; a zero or negative degree raises
    ValidationError.
    """
    lines = text.splitlines()
    stripped = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    stripped = [(no, ln) for no, ln in stripped if ln]
    if not stripped:
        raise ValidationError("empty degree sequence")

    counts: dict = {}
    if stripped[0][1] == "#counts":
        for no, ln in stripped[1:]:
            parts = ln.split("\t")
            if len(parts) != 2:
                raise ParseError("expected 'degree<TAB>count'", line_no=no)
            try:
                d, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError(f"non-integer fields {parts!r}", line_no=no) from None
            if d <= 0:
                raise ValidationError(f"line {no}: degree {d} not allowed")
            if m <= 0:
                raise ParseError(f"count must be positive, got {m}", line_no=no)
            counts[d] = counts.get(d, 0) + m
    else:
        for no, ln in stripped:
            try:
                d = int(ln)
            except ValueError:
                raise ParseError(f"not an integer: {ln!r}", line_no=no) from None
            if d <= 0:
                raise ValidationError(f"line {no}: degree {d} not allowed")
            counts[d] = counts.get(d, 0) + 1
    return DegreeSequence(counts)


def is_feasible(seq: DegreeSequence) -> bool:
    """True iff some simple graph realizes the multiset.

    Even degree sum plus the Erdos-Gallai inequalities, evaluated for
    every prefix length k of the descending sort:

        sum_{i<=k} d_i  <=  k(k-1) + sum_{i>k} min(d_i, k)
    """
    if seq.degree_sum % 2 != 0:
        return False
    asc = seq.to_list()
    desc = asc[::-1]
    n = seq.n
    if desc[0] >= n:
        return False

    pref = np.concatenate(([0], np.cumsum(desc)))  # pref[k] = sum of k largest
    total = int(pref[n])
    ks = np.arange(1, n + 1)
    # entries strictly greater than k, and their total mass
    gt_idx = np.searchsorted(asc, ks, side="right")
    cnt_gt = n - gt_idx
    sum_gt = total - np.concatenate(([0], np.cumsum(asc)))[gt_idx]
    # split position: among the k largest, the first g exceed k
    g = np.minimum(ks, cnt_gt)
    head_large = pref[g]                # mass of head entries > k
    head_small = pref[ks] - head_large  # head entries <= k count as themselves
    tail_min = ks * cnt_gt + (total - sum_gt) - ks * g - head_small
    lhs = pref[ks]
    rhs = ks * (ks - 1) + tail_min
    return bool(np.all(lhs <= rhs))


@dataclass
class InvariantReport:
    n: int
    degree_sum: int
    M: int
    R: int
    jD: int
    ratio_hat: Fraction
    q_hat: Fraction
    well_behaved: bool
    lambda_thresh: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "degree_sum": self.degree_sum,
                "M": self.M,
                "R": self.R,
                "jD": self.jD,
                "ratio_hat": f"{self.ratio_hat.numerator}/{self.ratio_hat.denominator}",
                "q_hat": f"{self.q_hat.numerator}/{self.q_hat.denominator}",
                "well_behaved": self.well_behaved,
            }
        )


def invariants(seq: DegreeSequence, lambda_thresh: int = DEFAULT_LAMBDA_THRESH) -> InvariantReport:
    """Compute (jD, R, M) plus the ratio diagnostics.

    Works groupwise on the count form: with degrees ascending, each block
    of equal degrees contributes a constant per-element increment
    d*(d-2), so the first positive prefix lands either inside the first
    block where the running sum can cross zero or never. Exact integer
    and rational arithmetic throughout; no ties are decided by floats.
    """
    groups = sorted(seq.counts.items())  # ascending (degree, multiplicity)
    n = seq.n

    jD = None
    prefix = 0  # running sum of d*(d-2)
    seen = 0    # how many list positions precede the current block
    for d, mult in groups:
        term = d * (d - 2)
        if term > 0 and prefix + mult * term > 0:
            # first index inside this block where prefix turns positive
            offset = (-prefix) // term + 1
            if offset <= mult:
                jD = seen + offset
                break
        prefix += mult * term
        seen += mult
    if jD is None:
        jD = n

    # R: degree mass from position jD to n
    R = 0
    seen = 0
    for d, mult in groups:
        lo = max(jD, seen + 1)
        hi = seen + mult
        if hi >= lo:
            R += d * (hi - lo + 1)
        seen += mult

    M = seq.kernel_mass
    dd = sum(m * d * (d - 2) for d, m in seq.counts.items())
    ratio_hat = Fraction(dd, seq.degree_sum)
    q_hat = Fraction(dd, n)
    return InvariantReport(
        n=n,
        degree_sum=seq.degree_sum,
        M=M,
        R=R,
        jD=jD,
        ratio_hat=ratio_hat,
        q_hat=q_hat,
        well_behaved=M >= lambda_thresh,
        lambda_thresh=lambda_thresh,
    )


@dataclass
class Classification:
    verdict: str  # GiantWHP | NoGiantWHP | NotWellBehaved | Indeterminate
    epsilon_used: Fraction
    delta_used: Fraction
    lambda_thresh: int
    report: InvariantReport

    def to_json(self) -> str:
        return json.dumps(
            {
                "verdict": self.verdict,
                "eps": float(self.epsilon_used),
                "delta": float(self.delta_used),
                "lambda_thresh": self.lambda_thresh,
                "M": self.report.M,
                "R": self.report.R,
            }
        )


def classify(
    seq: DegreeSequence,
    eps=DEFAULT_EPS,
    delta=DEFAULT_DELTA,
    lambda_thresh: int = DEFAULT_LAMBDA_THRESH,
) -> Classification:
    """Giant/no-giant verdict from the invariants.

    NotWellBehaved when M < lambda_thresh (both outcomes genuinely have
    non-vanishing probability there, so no call is made); otherwise
    GiantWHP when R >= eps*M, NoGiantWHP when R <= delta*M, and
    Indeterminate in the gap.
    """
    eps = Fraction(eps)
    delta = Fraction(delta)
    if not (0 < delta < eps <= 1):
        raise ValidationError(f"need 0 < delta < eps <= 1, got eps={eps}, delta={delta}")
    if not is_feasible(seq):
        raise InfeasibleSequence(f"{seq!r} has no simple realization")
    rep = invariants(seq, lambda_thresh)
    if rep.M < lambda_thresh:
        verdict = "NotWellBehaved"
    elif rep.R >= eps * rep.M:
        verdict = "GiantWHP"
    elif rep.R <= delta * rep.M:
        verdict = "NoGiantWHP"
    else:
        verdict = "Indeterminate"
    return Classification(verdict, eps, delta, lambda_thresh, rep)


def check_claim0(a, ell: int) -> dict:
    """Oracle for the prefix inequality used by the exploration analysis.

    For positive integers a_1..a_j, none equal to 2, with
    sum(a) >= 2j - ell, it holds that sum(a_i*(a_i-2)) >= j - 2*ell.
    Returns {lhs, rhs, holds}.
    """
    a = list(a)
    for x in a:
        if x < 1 or x == 2:
            raise ValueError(f"entries must be positive and != 2, got {x}")
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    j = len(a)
    if sum(a) < 2 * j - ell:
        raise PreconditionViolated(f"sum(a)={sum(a)} < 2j-ell={2 * j - ell}")
    lhs = sum(x * (x - 2) for x in a)
    rhs = j - 2 * ell
    return {"lhs": lhs, "rhs": rhs, "holds": lhs >= rhs}


def r_lower_bound_check(seq: DegreeSequence) -> dict:
    """Check R >= M - 2*(n - n2) on a feasible sequence.

    M here is the kernel mass (degrees != 2). Returns {R, bound, holds}.
    """
    rep = invariants(seq)
    bound = rep.M - 2 * (seq.n - seq.n2)
    return {"R": rep.R, "bound": bound, "holds": rep.R >= bound}
