"""Breadth-style exploration of a kernel multigraph from a priming set.

The process grows S_0 into S_1 c S_2 c ... one vertex per step and
tracks two counters:

* X_t  -- the number of kernel edges between S_t and its complement,
  updated exactly: X_t = X_{t-1} + (d(w_t) - 2) - 2*d'_t(w_t), where
  d'_t(w_t) counts the loops at w_t plus every edge from w_t into
  S_{t-1} other than the one just traversed;
* X'_t -- the tree-optimistic overestimate X'_0 + sum_i (d(w_i) - 2)
  with X'_0 the degree sum of S_0. X'_t >= X_t until X_t first hits 0,
  with equality throughout when the explored graph is a forest.

At each step the next vertex w_t is the far endpoint of a uniformly
random boundary edge at v_t, the smallest-labeled member of S_{t-1}
with a neighbor outside; when no boundary edge exists (X=0), w_t is
drawn from the unexplored vertices with probability proportional to
degree.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import EmptyS0, ValidationError
from .kernel import KernelMultigraph
from .rng import rng_stream

__all__ = ["TraceStep", "ExplorationTrace", "priming_set", "explore"]

DEFAULT_OMEGA = 1e-4


@dataclass(frozen=True)
class TraceStep:
    t: int
    v: int | None  # None on proportional-to-degree restarts
    w: int
    deg_w: int
    dprime: int
    X: int
    Xprime: int


@dataclass(frozen=True)
class ExplorationTrace:
    s0: tuple
    x0: int
    xprime0: int
    steps: tuple
    stop_reason: str  # Exhausted | XZero | Budget

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("t,v,w,deg_w,dprime,X,Xprime\n")
        for s in self.steps:
            v = "" if s.v is None else s.v
            buf.write(f"{s.t},{v},{s.w},{s.deg_w},{s.dprime},{s.X},{s.Xprime}\n")
        return buf.getvalue()


def priming_set(kernel: KernelMultigraph, omega: float = DEFAULT_OMEGA):
    """Smallest top-degree set whose degree mass reaches 5 * omega^(1/4) * M.

    Vertices enter in order of decreasing degree (ties by ascending
    label), so no vertex outside the set out-degrees one inside. If the
    whole graph falls short of the threshold the set is all of V.
    """
    if not (0 < omega < 1):
        raise ValidationError(f"omega must lie in (0,1), got {omega}")
    M = kernel.degree_mass
    threshold = 5.0 * omega**0.25 * M
    order = sorted(kernel.vertices, key=lambda v: (-kernel.degree(v), v))
    chosen = []
    mass = 0
    for v in order:
        chosen.append(v)
        mass += kernel.degree(v)
        if mass >= threshold:
            break
    return set(chosen)


def explore(
    kernel: KernelMultigraph,
    s0,
    seed: int,
    budget: int | None = None,
    stop_at_zero: bool = False,
) -> ExplorationTrace:
    """Run the exploration; deterministic given (kernel, s0, seed).

    Stops after ``budget`` steps (default |V|), when every vertex has
    been explored, or -- with stop_at_zero -- the first time X_t = 0.
    """
    s0 = set(s0)
    if not s0:
        raise EmptyS0("the starting set must be nonempty")
    if not s0 <= set(kernel.vertices):
        raise ValidationError("s0 contains vertices outside the kernel")
    if budget is None:
        budget = len(kernel.vertices)

    rng = rng_stream(seed)
    in_s = {v: (v in s0) for v in kernel.vertices}
    outside = sorted(v for v in kernel.vertices if not in_s[v])

    def boundary_edges_at(v):
        return [(w, mult) for w, mult in kernel.adj[v].items() if not in_s[w]]

    # X_0 by direct count
    x = sum(mult for v in sorted(s0) for (w, mult) in boundary_edges_at(v))
    xp = sum(kernel.degree(v) for v in s0)
    x0, xp0 = x, xp

    steps = []
    stop_reason = "Exhausted"
    t = 0
    while outside:
        if t >= budget:
            stop_reason = "Budget"
            break
        t += 1
        v_t = None
        w_t = None
        via_edge = False
        if x > 0:
            for v in sorted(u for u in kernel.vertices if in_s[u]):
                cands = boundary_edges_at(v)
                if cands:
                    v_t = v
                    total = sum(m for _, m in cands)
                    r = int(rng.integers(total))
                    for w, m in cands:
                        if r < m:
                            w_t = w
                            break
                        r -= m
                    via_edge = True
                    break
        if w_t is None:
            # no boundary edge: restart proportional to degree
            weights = np.array([kernel.degree(v) for v in outside], dtype=np.float64)
            w_t = outside[int(rng.choice(len(outside), p=weights / weights.sum()))]

        deg_w = kernel.degree(w_t)
        edges_into_s = sum(m for w, m in kernel.adj[w_t].items() if in_s[w])
        dprime = kernel.loops.get(w_t, 0) + edges_into_s - (1 if via_edge else 0)

        if via_edge:
            x = x + (deg_w - 2) - 2 * dprime
        else:
            x = deg_w - 2 * dprime  # X was 0; w_t has no edges into S
        xp = xp + (deg_w - 2)

        in_s[w_t] = True
        outside.remove(w_t)
        steps.append(TraceStep(t, v_t, w_t, deg_w, dprime, x, xp))
        if stop_at_zero and x == 0:
            stop_reason = "XZero"
            break

    return ExplorationTrace(
        s0=tuple(sorted(s0)),
        x0=x0,
        xprime0=xp0,
        steps=tuple(steps),
        stop_reason=stop_reason,
    )
