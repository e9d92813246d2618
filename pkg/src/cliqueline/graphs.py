"""Finite simple graphs: constructors, the line-graph functor, and structural predicates.

Vertices are dense 0-based integers; edges are canonical ``(min, max)`` pairs.
Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence

Edge = tuple[int, int]


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple graph on vertices ``0 .. vertex_count - 1``.

    ``labels`` is optional bookkeeping (apex names, edge provenance); it does
    not take part in equality.
    """

    vertex_count: int
    edges: frozenset[Edge]
    labels: Mapping[int, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be nonnegative")
        for u, v in self.edges:
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range for {self.vertex_count} vertices")

    @staticmethod
    def from_edges(vertex_count: int, pairs: Iterable[Sequence[int]],
                   labels: Mapping[int, str] | None = None) -> "Graph":
        """Build a graph, silently dropping loops and duplicate edges."""
        edges = frozenset(_canon(u, v) for u, v in pairs if u != v)
        return Graph(vertex_count, edges, dict(labels or {}))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edges

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def adjacency(self) -> list[set[int]]:
        """Fresh adjacency sets, indexed by vertex id."""
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj


# ---------------------------------------------------------------------------
# constructors


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete graph needs at least one vertex")
    return Graph(n, frozenset(itertools.combinations(range(n), 2)))


def cycle(n: int) -> Graph:
    """Cycle graph on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(r: int) -> Graph:
    """Path with r >= 1 edges on r + 1 vertices."""
    if r < 1:
        raise ValueError("path length must be at least one")
    return Graph.from_edges(r + 1, [(i, i + 1) for i in range(r)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertices in different parts are adjacent."""
    if not parts:
        raise ValueError("need at least one part")
    if any(p < 1 for p in parts):
        raise ValueError("every part must have at least one vertex")
    bounds = list(itertools.accumulate(parts, initial=0))
    blocks = [range(bounds[i], bounds[i + 1]) for i in range(len(parts))]
    edges = [(u, v)
             for i, j in itertools.combinations(range(len(parts)), 2)
             for u in blocks[i] for v in blocks[j]]
    return Graph.from_edges(bounds[-1], edges)


def edge_ids(g: Graph) -> list[Edge]:
    """Edges of g in lexicographic order; index i is the line-graph vertex i."""
    return sorted(g.edges)


def line_graph(g: Graph) -> Graph:
    """Line graph of g: vertex i is ``edge_ids(g)[i]``, adjacency is sharing one endpoint.

    Labels record the originating edge, so the id correspondence survives
    serialization.
    """
    es = edge_ids(g)
    adj = []
    for i, j in itertools.combinations(range(len(es)), 2):
        if len(set(es[i]) & set(es[j])) == 1:
            adj.append((i, j))
    labels = {i: f"{u}-{v}" for i, (u, v) in enumerate(es)}
    return Graph.from_edges(len(es), adj, labels)


def cone(g: Graph) -> Graph:
    """Add an apex adjacent to every vertex of g (label "w")."""
    w = g.vertex_count
    edges = set(g.edges) | {(v, w) for v in range(g.vertex_count)}
    labels = dict(g.labels)
    labels[w] = "w"
    return Graph(w + 1, frozenset(edges), labels)


def suspension(g: Graph) -> Graph:
    """Add two non-adjacent apexes, each adjacent to every vertex of g."""
    a, b = g.vertex_count, g.vertex_count + 1
    edges = set(g.edges)
    edges |= {(v, a) for v in range(g.vertex_count)}
    edges |= {(v, b) for v in range(g.vertex_count)}
    labels = dict(g.labels)
    labels[a] = "a"
    labels[b] = "b"
    return Graph(b + 1, frozenset(edges), labels)


def wheel(n: int) -> Graph:
    """Wheel on n + 1 vertices: a cone over the n-cycle."""
    return cone(cycle(n))


@dataclass(frozen=True)
class CirculantSpec:
    """Parameters of a circulant graph: n vertices, jump set within 1..n//2."""

    n: int
    jumps: frozenset[int]

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ValueError("circulant graphs need n >= 3")
        if not self.jumps:
            raise ValueError("jump set must be nonempty")
        if any(not (1 <= s <= self.n // 2) for s in self.jumps):
            raise ValueError("jumps must lie in 1..n//2")

    @staticmethod
    def make(n: int, jumps: Iterable[int]) -> "CirculantSpec":
        return CirculantSpec(n, frozenset(jumps))

    @property
    def connection_set(self) -> frozenset[int]:
        """Residues s and n - s for each jump; its size is the regularity."""
        return frozenset(self.jumps) | frozenset(self.n - s for s in self.jumps)


def circulant(spec: CirculantSpec) -> Graph:
    """Circulant graph: x ~ y iff (x - y) mod n lies in the connection set."""
    conn = spec.connection_set
    edges = [(x, (x + s) % spec.n) for x in range(spec.n) for s in conn]
    return Graph.from_edges(spec.n, edges)


def glue(g1: Graph, g2: Graph, overlap: Mapping[int, int]) -> Graph:
    """Glue g2 onto g1, identifying g2-vertex k with g1-vertex overlap[k].

    The map must be injective and must match the induced subgraphs on both
    sides edge-for-edge.  Surviving g2 vertices are appended densely in id
    order.
    """
    for k, v in overlap.items():
        if not 0 <= k < g2.vertex_count:
            raise ValueError(f"overlap key {k} is not a vertex of the second graph")
        if not 0 <= v < g1.vertex_count:
            raise ValueError(f"overlap value {v} is not a vertex of the first graph")
    if len(set(overlap.values())) != len(overlap):
        raise ValueError("overlap map must be injective")
    for a, b in itertools.combinations(sorted(overlap), 2):
        if g2.has_edge(a, b) != g1.has_edge(overlap[a], overlap[b]):
            raise ValueError("overlap does not induce isomorphic subgraphs")
    survivors = [v for v in range(g2.vertex_count) if v not in overlap]
    relabel = dict(overlap)
    for rank, v in enumerate(survivors):
        relabel[v] = g1.vertex_count + rank
    edges = set(g1.edges) | {_canon(relabel[a], relabel[b]) for a, b in g2.edges}
    labels = dict(g1.labels)
    for v in survivors:
        if v in g2.labels:
            labels[relabel[v]] = g2.labels[v]
    return Graph(g1.vertex_count + len(survivors), frozenset(edges), labels)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    return glue(g1, g2, {})


def wedge_at_vertex(g1: Graph, g2: Graph, v1: int, v2: int) -> Graph:
    """One-point union identifying vertex v2 of g2 with vertex v1 of g1."""
    return glue(g1, g2, {v2: v1})


# ---------------------------------------------------------------------------
# predicates and invariants


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All 3-cliques, lexicographically sorted."""
    adj = g.adjacency()
    out = []
    for u, v in sorted(g.edges):
        for w in sorted(adj[u] & adj[v]):
            if w > v:
                out.append((u, v, w))
    return sorted(out)


def is_triangle_free(g: Graph) -> bool:
    adj = g.adjacency()
    return not any(adj[u] & adj[v] for u, v in g.edges)


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest member."""
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    out = []
    for s in range(g.vertex_count):
        if seen[s]:
            continue
        comp, stack = [], [s]
        seen[s] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def cyclomatic(g: Graph) -> int:
    """Independent cycle count: e - v + number of components."""
    return g.edge_count - g.vertex_count + len(components(g))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph, relabelled densely in increasing id order."""
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < g.vertex_count):
        raise ValueError("unknown vertex id")
    relabel = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(relabel[u], relabel[v]) for u, v in g.edges if u in keep and v in keep]
    labels = {relabel[v]: g.labels[v] for v in vs if v in g.labels}
    return Graph.from_edges(len(vs), edges, labels)


def is_bipartite(g: Graph) -> bool:
    adj = g.adjacency()
    color = [-1] * g.vertex_count
    for s in range(g.vertex_count):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if color[w] < 0:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    """Chordality via maximum-cardinality search.

    MCS visits vertices by descending count of already-visited neighbors
    (ties: smallest id).  The graph is chordal iff the visit order reversed is
    a perfect elimination ordering, checked by the standard parent condition.
    """
    n = g.vertex_count
    adj = g.adjacency()
    weight = [0] * n
    position = [-1] * n
    order: list[int] = []
    for step in range(n):
        v = min((u for u in range(n) if position[u] < 0), key=lambda u: (-weight[u], u))
        position[v] = step
        order.append(v)
        for w in adj[v]:
            if position[w] < 0:
                weight[w] += 1
    for v in order:
        earlier = [w for w in adj[v] if position[w] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda w: position[w])
        if any(w != parent and not g.has_edge(w, parent) for w in earlier):
            return False
    return True


def is_wheel_free(g: Graph) -> bool:
    """True iff no subgraph of g is a wheel.

    Equivalent to every vertex neighborhood inducing a forest: a cycle inside
    G[N(v)] together with v is a wheel subgraph, and conversely a wheel's rim
    lies inside the neighborhood of its center.
    """
    adj = g.adjacency()
    for v in range(g.vertex_count):
        nb = sorted(adj[v])
        parent = {u: u for u in nb}

        def find(u: int) -> int:
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for a, b in itertools.combinations(nb, 2):
            if g.has_edge(a, b):
                ra, rb = find(a), find(b)
                if ra == rb:
                    return False
                parent[ra] = rb
    return True


def _has_rim_cycle(g: Graph, rim: Sequence[int]) -> bool:
    # does some cyclic ordering of `rim` use only edges of g?
    first, rest = rim[0], rim[1:]
    for perm in itertools.permutations(rest):
        ordered = (first, *perm)
        if all(g.has_edge(ordered[i], ordered[(i + 1) % len(ordered)])
               for i in range(len(ordered))):
            return True
    return False


def find_wheel_subgraph(g: Graph) -> tuple[int, tuple[int, ...]] | None:
    """Exhaustive wheel-subgraph search; returns (center, rim) or None.

    Independent oracle for ``is_wheel_free``: tries every vertex as a center
    and every neighbor subset as a rim, looking for a spanning cycle.
    """
    adj = g.adjacency()
    for c in range(g.vertex_count):
        nb = sorted(adj[c])
        for m in range(3, len(nb) + 1):
            for rim in itertools.combinations(nb, m):
                if _has_rim_cycle(g, rim):
                    return c, rim
    return None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Brute-force isomorphism test for graphs with at most 8 vertices."""
    if g1.vertex_count != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    n = g1.vertex_count
    if n > 8:
        raise ValueError("brute-force isomorphism is limited to 8 vertices")
    if sorted(g1.degree(v) for v in range(n)) != sorted(g2.degree(v) for v in range(n)):
        return False
    target = g2.edges
    for perm in itertools.permutations(range(n)):
        if all(_canon(perm[u], perm[v]) in target for u, v in g1.edges):
            return True
    return False


class ComponentClass(Enum):
    """Shape of a component of a 4-regular circulant graph."""

    WHEEL_FREE = "wheel-free"
    K5 = "k5"
    SIGMA_C4 = "sigma-c4"


def classify_circulant(spec: CirculantSpec) -> ComponentClass:
    """Classify the components of a 4-regular circulant graph.

    By vertex transitivity all components are isomorphic, so the component
    of vertex 0 decides.  The classes are mutually exclusive, which is
    asserted via the wheel-freeness cross-check.
    """
    if len(spec.connection_set) != 4:
        raise ValueError("classification is defined for 4-regular circulant graphs only")
    g = circulant(spec)
    comp = induced_subgraph(g, components(g)[0])
    if comp.vertex_count == 5 and is_isomorphic(comp, complete(5)):
        cls = ComponentClass.K5
    elif comp.vertex_count == 6 and is_isomorphic(comp, suspension(cycle(4))):
        cls = ComponentClass.SIGMA_C4
    else:
        cls = ComponentClass.WHEEL_FREE
    assert (cls is ComponentClass.WHEEL_FREE) == is_wheel_free(comp), \
        f"circulant component of {spec} matches more or less than one class"
    return cls


# ---------------------------------------------------------------------------
# edge-list text format


def format_edge_list(g: Graph) -> str:
    """Serialize as 'v <count>' followed by one 'u w' pair per line."""
    lines = [f"v {g.vertex_count}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format; blank lines and '#' comments are ignored."""
    vertex_count = None
    pairs = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if vertex_count is None:
            if fields[0] != "v" or len(fields) != 2:
                raise ValueError("edge list must start with a 'v <count>' line")
            vertex_count = int(fields[1])
            continue
        if len(fields) != 2:
            raise ValueError(f"malformed edge line: {raw!r}")
        pairs.append((int(fields[0]), int(fields[1])))
    if vertex_count is None:
        raise ValueError("empty edge-list input")
    return Graph.from_edges(vertex_count, pairs)
