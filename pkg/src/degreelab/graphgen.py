"""Uniform sampling of simple graphs with a prescribed degree sequence.

Two samplers, one exact and one MCMC:

* pairing-model rejection: throw a uniform perfect matching on degree
  stubs and reject until the result is simple. Conditioned on
  simplicity the graph is exactly uniform. Practical only while
  sum(d^2)/sum(d) is small.
* edge switching: start from a greedy realization and repeatedly
  replace edges {uv, xy} by {ux, vy} when the result stays simple.
  The lazy chain is symmetric, so its stationary distribution is
  uniform over all realizations.

Vertex labels are 0..n-1 internally; vertex i carries the i-th degree
of the ascending sort. Edge-list files are 1-indexed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .degseq import DegreeSequence, is_feasible
from .errors import (
    EdgeNotPresent,
    InfeasibleSequence,
    RejectionBudgetExceeded,
    TooLarge,
)
from .rng import rng_stream
from .union_find import UnionFind

__all__ = [
    "SimpleGraph",
    "OrientedEdgePair",
    "havel_hakimi",
    "sample_configuration_rejection",
    "sample_switch_mcmc",
    "sample_graph",
    "switch",
    "count_disconnecting_switch_pairs",
    "default_burn_in",
    "read_edge_list",
    "write_edge_list",
]

REJECTION_RATIO_BOUND = 6.0
REJECTION_MAX_ATTEMPTS = 200_000
BRUTE_FORCE_CAP = 14


class SimpleGraph:
    """Labeled simple graph: sorted neighbor lists plus a flat edge list.

    Treat instances as immutable once constructed; samplers and switches
    always return fresh objects.
    """

    def __init__(self, n: int, edges):
        self.n = n
        norm = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at {u} not allowed in a simple graph")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            norm.append((u, v) if u < v else (v, u))
        norm.sort()
        self.edges = norm
        self._edge_set = set(norm)
        if len(self._edge_set) != len(norm):
            raise ValueError("repeated edge in edge list")
        self.adjacency = [[] for _ in range(n)]
        for u, v in norm:
            self.adjacency[u].append(v)
            self.adjacency[v].append(u)
        for nbrs in self.adjacency:
            nbrs.sort()

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> np.ndarray:
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._edge_set

    def components(self):
        """List of components, each a sorted list of vertices."""
        uf = UnionFind(self.n)
        for u, v in self.edges:
            uf.union(u, v)
        return sorted(uf.groups().values())

    def num_components(self) -> int:
        uf = UnionFind(self.n)
        for u, v in self.edges:
            uf.union(u, v)
        return uf.num_components

    def __eq__(self, other):
        return (
            isinstance(other, SimpleGraph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, tuple(self.edges)))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class OrientedEdgePair:
    """Ordered pair of oriented, distinct edges (u,v) and (x,y)."""

    e1: tuple
    e2: tuple


def havel_hakimi(seq: DegreeSequence) -> SimpleGraph:
    """Deterministic greedy realization (highest residual first).

    Used as the switching chain's start state. Bucket queues keep it
    O(sum of degrees).
    """
    degrees = seq.to_list()
    n = seq.n
    if seq.degree_sum % 2 != 0 or degrees[-1] >= n:
        raise InfeasibleSequence(f"{seq!r} has no simple realization")
    maxd = int(degrees[-1])
    buckets = [[] for _ in range(maxd + 1)]
    for v in range(n):
        buckets[degrees[v]].append(v)
    residual = [int(d) for d in degrees]
    edges = []
    top = maxd
    while True:
        while top > 0 and not buckets[top]:
            top -= 1
        if top == 0:
            break
        v = buckets[top].pop()
        need = top
        residual[v] = 0
        # collect the `need` highest-residual other vertices
        chosen = []
        lvl = top
        while len(chosen) < need and lvl > 0:
            while buckets[lvl] and len(chosen) < need:
                chosen.append(buckets[lvl].pop())
            lvl -= 1
        if len(chosen) < need:
            raise InfeasibleSequence(f"{seq!r} has no simple realization")
        for w in chosen:
            edges.append((v, w))
            residual[w] -= 1
            if residual[w] > 0:
                buckets[residual[w]].append(w)
    return SimpleGraph(n, edges)


def _pairing_attempt(stubs: np.ndarray, n: int, rng) -> list | None:
    perm = rng.permutation(stubs)
    pairs = perm.reshape(-1, 2)
    u = np.minimum(pairs[:, 0], pairs[:, 1])
    v = np.maximum(pairs[:, 0], pairs[:, 1])
    if np.any(u == v):
        return None
    keys = u.astype(np.int64) * n + v
    if np.unique(keys).size != keys.size:
        return None
    return list(zip(u.tolist(), v.tolist()))


def sample_configuration_rejection(
    seq: DegreeSequence,
    seed: int,
    max_attempts: int = REJECTION_MAX_ATTEMPTS,
    ratio_bound: float = REJECTION_RATIO_BOUND,
) -> SimpleGraph:
    """Exactly uniform sample via stub pairing with rejection.

    Rejects non-simple pairings; deterministic given the seed. Raises
    RejectionBudgetExceeded either up front (when sum(d^2)/sum(d)
    exceeds ratio_bound, a regime where acceptance decays too fast) or
    after max_attempts failures.
    """
    if not is_feasible(seq):
        raise InfeasibleSequence(f"{seq!r} has no simple realization")
    degrees = seq.to_list()
    ratio = float(np.sum(degrees.astype(np.float64) ** 2) / seq.degree_sum)
    if ratio > ratio_bound:
        raise RejectionBudgetExceeded(
            f"sum(d^2)/sum(d)={ratio:.2f} > {ratio_bound}: acceptance probability "
            "is impractically small; use sample_switch_mcmc"
        )
    rng = rng_stream(seed)
    stubs = np.repeat(np.arange(seq.n, dtype=np.int64), degrees)
    for _ in range(max_attempts):
        edges = _pairing_attempt(stubs, seq.n, rng)
        if edges is not None:
            return SimpleGraph(seq.n, edges)
    raise RejectionBudgetExceeded(
        f"no simple pairing in {max_attempts} attempts; use sample_switch_mcmc"
    )


def switch(graph: SimpleGraph, pair: OrientedEdgePair) -> SimpleGraph | None:
    """Apply one switching move; None when the result would not be simple.

    Deletes uv and xy, adds ux and vy. The result is simple iff u != x,
    v != y and, except in the no-op cases u == y or v == x, neither ux
    nor vy is already present. Reapplying the move on (u,x),(v,y)
    restores the original graph.
    """
    (u, v), (x, y) = pair.e1, pair.e2
    if not graph.has_edge(u, v) or not graph.has_edge(x, y):
        raise EdgeNotPresent(f"pair {pair} not in graph")
    if frozenset((u, v)) == frozenset((x, y)):
        raise EdgeNotPresent("the two oriented edges must be distinct edges")
    if u == x or v == y:
        return None
    if u == y or v == x:
        return graph  # deletes and re-adds the same two edges
    if graph.has_edge(u, x) or graph.has_edge(v, y):
        return None
    edges = set(graph._edge_set)
    edges.discard((u, v) if u < v else (v, u))
    edges.discard((x, y) if x < y else (y, x))
    edges.add((u, x) if u < x else (x, u))
    edges.add((v, y) if v < y else (y, v))
    return SimpleGraph(graph.n, edges)


def default_burn_in(m: int) -> int:
    """Heuristic chain length: 50 * m * ln(m).

    No general mixing bound is asserted; this is the documented default
    and callers with tight budgets or easy statistics may pass less.
    """
    return max(200, int(50 * m * math.log(max(m, 2))))


def sample_switch_mcmc(seq: DegreeSequence, seed: int, burn_in: int | None = None) -> SimpleGraph:
    """Switching-chain sample: burn_in proposals from the greedy start.

    Each proposal draws an ordered pair of oriented distinct edges
    uniformly; invalid proposals count as steps (lazy chain), which
    keeps the kernel symmetric and the uniform distribution stationary.
    """
    if burn_in is not None and burn_in < 0:
        raise ValueError("burn_in must be >= 0")
    graph = havel_hakimi(seq)
    m = graph.m
    if burn_in is None:
        burn_in = default_burn_in(m)
    if m < 2 or burn_in == 0:
        return graph
    rng = rng_stream(seed)

    edges = list(graph.edges)
    adj = [set(a) for a in graph.adjacency]
    # proposals in bulk: oriented edge index in [0, 2m)
    CHUNK = 8192
    done = 0
    while done < burn_in:
        k = min(CHUNK, burn_in - done)
        draws = rng.integers(0, 2 * m, size=(k, 2))
        done += k
        for o1, o2 in draws:
            i1, r1 = divmod(int(o1), 2)
            i2, r2 = divmod(int(o2), 2)
            if i1 == i2:
                continue
            u, v = edges[i1]
            if r1:
                u, v = v, u
            x, y = edges[i2]
            if r2:
                x, y = y, x
            if u == x or v == y:
                continue
            if u == y or v == x:
                continue  # no-op switch
            if x in adj[u] or y in adj[v]:
                continue
            adj[u].discard(v)
            adj[v].discard(u)
            adj[x].discard(y)
            adj[y].discard(x)
            adj[u].add(x)
            adj[x].add(u)
            adj[v].add(y)
            adj[y].add(v)
            edges[i1] = (u, x) if u < x else (x, u)
            edges[i2] = (v, y) if v < y else (y, v)
    return SimpleGraph(graph.n, edges)


def sample_graph(seq: DegreeSequence, seed: int, method: str = "auto", burn_in: int | None = None) -> SimpleGraph:
    """Dispatch between the samplers.

    "auto" uses rejection when (max degree)^2 <= degree sum and the
    acceptance-ratio guard allows it, otherwise the switching chain.
    """
    if method == "config":
        return sample_configuration_rejection(seq, seed)
    if method == "mcmc":
        return sample_switch_mcmc(seq, seed, burn_in)
    if method == "auto":
        degrees = seq.to_list()
        ratio = float(np.sum(degrees.astype(np.float64) ** 2) / seq.degree_sum)
        if seq.max_degree**2 <= seq.degree_sum and ratio <= REJECTION_RATIO_BOUND:
            return sample_configuration_rejection(seq, seed)
        return sample_switch_mcmc(seq, seed, burn_in)
    raise ValueError(f"unknown sampler method {method!r}")


def count_disconnecting_switch_pairs(graph: SimpleGraph, cap: int = BRUTE_FORCE_CAP) -> int:
    """Exhaustive count of ordered oriented edge pairs whose switch
    yields a simple graph with strictly more components.

    A disconnecting switch must use two edges of one component, so pairs
    across components are skipped after a component labeling. n above
    the brute-force cap raises TooLarge.
    """
    if graph.n > cap:
        raise TooLarge(f"n={graph.n} exceeds brute-force cap {cap}")
    base = graph.num_components()
    uf = UnionFind(graph.n)
    for u, v in graph.edges:
        uf.union(u, v)
    comp = [uf.find(v) for v in range(graph.n)]

    count = 0
    m = graph.m
    for i1 in range(m):
        a, b = graph.edges[i1]
        for i2 in range(m):
            if i2 == i1:
                continue
            c, d = graph.edges[i2]
            if comp[a] != comp[c]:
                continue
            for e1 in ((a, b), (b, a)):
                for e2 in ((c, d), (d, c)):
                    result = switch(graph, OrientedEdgePair(e1, e2))
                    if result is not None and result.num_components() > base:
                        count += 1
    return count


def write_edge_list(graph: SimpleGraph) -> str:
    """Serialize: header "n <N>", then 1-indexed "u v" lines, u < v, sorted."""
    lines = [f"n {graph.n}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> SimpleGraph:
    from .errors import ParseError

    lines = [(i + 1, ln.strip()) for i, ln in enumerate(text.splitlines())]
    lines = [(no, ln) for no, ln in lines if ln]
    if not lines or not lines[0][1].startswith("n "):
        raise ParseError("missing 'n <N>' header", line_no=1)
    try:
        n = int(lines[0][1].split()[1])
    except (IndexError, ValueError):
        raise ParseError("bad 'n <N>' header", line_no=lines[0][0]) from None
    edges = []
    for no, ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {ln!r}", line_no=no)
        try:
            u, v = int(parts[0]) - 1, int(parts[1]) - 1
        except ValueError:
            raise ParseError(f"non-integer endpoints {ln!r}", line_no=no) from None
        edges.append((u, v))
    return SimpleGraph(n, edges)
