"""Kernel multigraphs: suppress degree-2 vertices, delete cyclic components.

Every simple graph of minimum degree 1 splits into cyclic components
(components that are bare cycles) and a subdivision of a multigraph
whose vertices all have degree != 2. ``build_kernel`` extracts that
multigraph together with, for each kernel edge, the full path of
degree-2 vertices it replaces, so ``subdivide`` can reconstruct the
original graph label-for-label.

Loops and parallel edges are expected in kernels: a loop's path is a
cycle through at least two degree-2 vertices, and at most one member of
a parallel class is realized by a bare edge (the host graph is simple).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .errors import EdgeNotPresent, InconsistentPaths, IsolatedVertex
from .graphgen import SimpleGraph
from .union_find import UnionFind

__all__ = [
    "KernelEdge",
    "KernelMultigraph",
    "ComponentStats",
    "ComponentRecord",
    "build_kernel",
    "subdivide",
    "component_stats",
    "extended_switch",
]


@dataclass(frozen=True)
class KernelEdge:
    u: int
    v: int
    path: tuple  # full vertex sequence in the host graph, u ... v

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def length(self) -> int:
        """Number of host-graph edges on the path."""
        return len(self.path) - 1


class KernelMultigraph:
    def __init__(self, g_n: int, vertices, edges, deleted_cycles=()):
        self.g_n = g_n  # vertex count of the host graph
        self.vertices = tuple(sorted(vertices))
        self.edges = tuple(edges)
        # deleted cycles kept as traversal sequences (not bare sets) so the
        # host graph is reconstructible exactly
        self.deleted_cycles = tuple(tuple(c) for c in deleted_cycles)
        self._vset = set(self.vertices)
        self.loops = {}
        self.adj = {v: {} for v in self.vertices}
        for e in self.edges:
            if e.u not in self._vset or e.v not in self._vset:
                raise InconsistentPaths(f"edge {e} touches a non-kernel vertex")
            if e.is_loop:
                self.loops[e.u] = self.loops.get(e.u, 0) + 1
            else:
                self.adj[e.u][e.v] = self.adj[e.u].get(e.v, 0) + 1
                self.adj[e.v][e.u] = self.adj[e.v].get(e.u, 0) + 1

    def degree(self, v: int) -> int:
        return sum(self.adj[v].values()) + 2 * self.loops.get(v, 0)

    def degrees(self) -> dict:
        return {v: self.degree(v) for v in self.vertices}

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def degree_mass(self) -> int:
        """Sum of kernel degrees; equals twice the edge count."""
        return 2 * len(self.edges)

    def edge_multiset(self):
        """Multiset of unordered endpoint pairs, loops as (v, v)."""
        out = {}
        for e in self.edges:
            key = (e.u, e.v) if e.u <= e.v else (e.v, e.u)
            out[key] = out.get(key, 0) + 1
        return out

    def components(self):
        """Kernel components as sorted vertex lists (isolated-free by construction)."""
        idx = {v: i for i, v in enumerate(self.vertices)}
        uf = UnionFind(len(self.vertices))
        for e in self.edges:
            uf.union(idx[e.u], idx[e.v])
        return sorted(
            [sorted(self.vertices[i] for i in grp) for grp in uf.groups().values()]
        )

    def to_json(self) -> str:
        return json.dumps(
            {
                "g_n": self.g_n,
                "vertices": list(self.vertices),
                "edges": [
                    {"u": e.u, "v": e.v, "path_len": e.length, "loop": e.is_loop}
                    for e in self.edges
                ],
                "deleted_cycle_sizes": [len(c) for c in self.deleted_cycles],
            }
        )

    def __repr__(self):
        return (
            f"KernelMultigraph(|V|={len(self.vertices)}, |E|={len(self.edges)}, "
            f"cycles_deleted={len(self.deleted_cycles)})"
        )


def _canonical_edge(u: int, v: int, path: list) -> KernelEdge:
    # store the path from the lower endpoint; loops start along the
    # smaller neighbor, so serialization is deterministic
    if u > v:
        path = path[::-1]
        u, v = v, u
    elif u == v and len(path) >= 3 and path[1] > path[-2]:
        path = path[::-1]
    return KernelEdge(u, v, tuple(path))


def build_kernel(graph: SimpleGraph) -> KernelMultigraph:
    """Delete cyclic components, suppress degree-2 vertices.

    Each maximal path whose interior vertices have degree 2 contracts to
    one kernel edge carrying the full path. The kernel degree sequence
    is checked to equal the input's with every 2 removed.
    """
    degs = graph.degrees()
    if graph.n and degs.min() < 1:
        bad = int((degs < 1).nonzero()[0][0])
        raise IsolatedVertex(f"vertex {bad} has degree 0")

    comps = graph.components()
    cyclic_vertices = set()
    deleted_cycles = []
    for comp in comps:
        assert len(comp) > 1, "single-vertex components cannot occur at min degree 1"
        if all(degs[v] == 2 for v in comp):
            # a connected graph with all degrees 2 is one cycle; record a
            # canonical traversal: start at the min label toward its
            # smaller neighbor
            start = comp[0]
            nxt = min(graph.adjacency[start])
            cycle = [start, nxt]
            prev, cur = start, nxt
            while cur != start:
                a, b = graph.adjacency[cur]
                cur, prev = (b if a == prev else a), cur
                cycle.append(cur)
            deleted_cycles.append(tuple(cycle[:-1]))
            cyclic_vertices.update(comp)

    kernel_vertices = [v for v in range(graph.n) if degs[v] != 2 and v not in cyclic_vertices]
    kset = set(kernel_vertices)
    used = set()
    edges = []
    for u in kernel_vertices:
        for w in graph.adjacency[u]:
            first = (u, w) if u < w else (w, u)
            if first in used:
                continue
            used.add(first)
            path = [u, w]
            prev, cur = u, w
            while degs[cur] == 2:
                a, b = graph.adjacency[cur]
                nxt = b if a == prev else a
                used.add((cur, nxt) if cur < nxt else (nxt, cur))
                path.append(nxt)
                prev, cur = cur, nxt
            edges.append(_canonical_edge(u, cur, path))

    kernel = KernelMultigraph(graph.n, kernel_vertices, edges, deleted_cycles)

    want = sorted(int(degs[v]) for v in range(graph.n) if degs[v] != 2)
    got = sorted(kernel.degrees().values())
    if want != got:
        raise InconsistentPaths("kernel degree sequence mismatch (internal error)")
    return kernel


def subdivide(kernel: KernelMultigraph) -> SimpleGraph:
    """Rebuild the host graph from a kernel: inverse of build_kernel.

    Validates the kernel invariants (path interiors used exactly once,
    loop paths of length >= 3, at most one bare edge per parallel class,
    simple result) and raises InconsistentPaths instead of repairing.
    """
    interior_seen = set()
    bare_by_pair = {}
    edges = set()

    def add_edge(a, b):
        if a == b:
            raise InconsistentPaths(f"subdividing produced a loop at {a}")
        key = (a, b) if a < b else (b, a)
        if key in edges:
            raise InconsistentPaths(f"subdividing produced parallel edge {key}")
        edges.add(key)

    for e in kernel.edges:
        if e.path[0] != e.u or e.path[-1] != e.v:
            raise InconsistentPaths(f"path of {e} does not join its endpoints")
        if e.is_loop and e.length < 3:
            raise InconsistentPaths(f"loop at {e.u} subdivided fewer than twice")
        if e.length == 1:
            pair = (e.u, e.v) if e.u < e.v else (e.v, e.u)
            if bare_by_pair.get(pair):
                raise InconsistentPaths(f"two bare edges in parallel class {pair}")
            bare_by_pair[pair] = True
        for w in e.path[1:-1]:
            if w in interior_seen or w in kernel._vset:
                raise InconsistentPaths(f"interior vertex {w} reused")
            interior_seen.add(w)
        for a, b in zip(e.path, e.path[1:]):
            add_edge(a, b)

    for cycle in kernel.deleted_cycles:
        if len(cycle) < 3:
            raise InconsistentPaths(f"deleted cycle {cycle} shorter than 3")
        for w in cycle:
            if w in interior_seen or w in kernel._vset:
                raise InconsistentPaths(f"cycle vertex {w} reused")
            interior_seen.add(w)
        for a, b in zip(cycle, cycle[1:]):
            add_edge(a, b)
        add_edge(cycle[-1], cycle[0])

    return SimpleGraph(kernel.g_n, edges)


@dataclass(frozen=True)
class ComponentRecord:
    vertices: tuple
    order: int
    size: int
    excess: int
    near_excess: int


@dataclass(frozen=True)
class ComponentStats:
    components: tuple
    largest_order: int
    largest_size: int
    count: int
    high_degree_threshold: float


def _high_degree_threshold(kernel_mass: int) -> float:
    # vertices of degree exceeding sqrt(M)/ln(M) count toward near-excess
    if kernel_mass <= 1:
        return math.inf
    return math.sqrt(kernel_mass) / math.log(kernel_mass)


def component_stats(obj) -> ComponentStats:
    """Per-component order/size/excess/near-excess for a graph or kernel.

    excess(K) = |E(K)| - |V(K)|; near-excess adds the number of
    component vertices whose degree exceeds sqrt(M)/ln(M), where M is
    the kernel degree mass (the degree sum excluding 2s for a simple
    graph, the full degree sum for a kernel). Kernel loops add one edge
    and two to their endpoint's degree.
    """
    if isinstance(obj, SimpleGraph):
        degs = obj.degrees()
        mass = int(sum(int(d) for d in degs if d != 2))
        thresh = _high_degree_threshold(mass)
        records = []
        edge_count = {}
        uf = UnionFind(obj.n)
        for u, v in obj.edges:
            uf.union(u, v)
        for u, v in obj.edges:
            r = uf.find(u)
            edge_count[r] = edge_count.get(r, 0) + 1
        for root, members in uf.groups().items():
            size = edge_count.get(root, 0)
            order = len(members)
            ex = size - order
            high = sum(1 for v in members if degs[v] > thresh)
            records.append(ComponentRecord(tuple(members), order, size, ex, ex + high))
    elif isinstance(obj, KernelMultigraph):
        mass = obj.degree_mass
        thresh = _high_degree_threshold(mass)
        idx = {v: i for i, v in enumerate(obj.vertices)}
        uf = UnionFind(len(obj.vertices))
        for e in obj.edges:
            uf.union(idx[e.u], idx[e.v])
        edge_count = {}
        for e in obj.edges:
            r = uf.find(idx[e.u])
            edge_count[r] = edge_count.get(r, 0) + 1
        records = []
        for root, members in uf.groups().items():
            verts = tuple(sorted(obj.vertices[i] for i in members))
            size = edge_count.get(root, 0)
            order = len(verts)
            ex = size - order
            high = sum(1 for v in verts if obj.degree(v) > thresh)
            records.append(ComponentRecord(verts, order, size, ex, ex + high))
    else:
        raise TypeError(f"expected SimpleGraph or KernelMultigraph, got {type(obj)!r}")

    records.sort(key=lambda r: r.vertices)
    return ComponentStats(
        components=tuple(records),
        largest_order=max((r.order for r in records), default=0),
        largest_size=max((r.size for r in records), default=0),
        count=len(records),
        high_degree_threshold=thresh if records else math.inf,
    )


def _oriented_walk(kernel: KernelMultigraph, spec) -> tuple:
    idx, reverse = spec
    if not (0 <= idx < len(kernel.edges)):
        raise EdgeNotPresent(f"no kernel edge with index {idx}")
    path = kernel.edges[idx].path
    return tuple(reversed(path)) if reverse else path


def extended_switch(graph: SimpleGraph, kernel: KernelMultigraph, pair) -> tuple | None:
    """Switch two oriented kernel edges through their host-graph walks.

    ``pair`` is ((index1, reversed1), (index2, reversed2)) into
    kernel.edges; reversal orients the stored walk. Writing the walks
    u=w0..wr=v and x=z0..zs=y, the move deletes host edges w_{r-1}v and
    x z1 and adds w_{r-1}x and v z1, provided none of the guards below
    hold; the new kernel is exactly the plain switch of (uv, xy).

    Guards (any one makes the move invalid, returning None):
      (i)   walk1 is a single edge and the host has another u-x edge,
      (ii)  walk2 is a single edge and the host has another v-y edge,
      (iii) u == x and walk1 has at most two edges,
      (iv)  v == y and walk2 has at most two edges.
    """
    (i1, r1), (i2, r2) = pair
    if i1 == i2:
        raise EdgeNotPresent("the two oriented kernel edges must be distinct")
    walk1 = _oriented_walk(kernel, (i1, r1))
    walk2 = _oriented_walk(kernel, (i2, r2))
    u, v = walk1[0], walk1[-1]
    x, y = walk2[0], walk2[-1]
    len1 = len(walk1) - 1
    len2 = len(walk2) - 1

    def forms_e1_or_e2(a, b):
        key = frozenset((a, b))
        if len1 == 1 and key == frozenset((walk1[0], walk1[1])):
            return True
        if len2 == 1 and key == frozenset((walk2[0], walk2[1])):
            return True
        return False

    if len1 == 1 and u != x and graph.has_edge(u, x) and not forms_e1_or_e2(u, x):
        return None  # (i)
    if len2 == 1 and v != y and graph.has_edge(v, y) and not forms_e1_or_e2(v, y):
        return None  # (ii)
    if u == x and len1 <= 2:
        return None  # (iii)
    if v == y and len2 <= 2:
        return None  # (iv)

    w_last = walk1[-2]
    z_first = walk2[1]
    edges = set(graph._edge_set)
    for a, b in ((w_last, v), (x, z_first)):
        edges.discard((a, b) if a < b else (b, a))
    for a, b in ((w_last, x), (v, z_first)):
        edges.add((a, b) if a < b else (b, a))
    new_graph = SimpleGraph(graph.n, edges)

    new_e1 = _canonical_edge(u, x, list(walk1[:-1]) + [x])
    new_e2 = _canonical_edge(v, y, [v] + list(walk2[1:]))
    new_edges = [e for j, e in enumerate(kernel.edges) if j not in (i1, i2)]
    new_edges.extend([new_e1, new_e2])
    new_kernel = KernelMultigraph(
        kernel.g_n, kernel.vertices, new_edges, kernel.deleted_cycles
    )
    return new_graph, new_kernel
