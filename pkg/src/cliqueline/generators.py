"""Seeded random corpora and named small graphs for the verification suites.

Every generator takes an explicit ``random.Random`` so runs are reproducible;
the suite driver derives one RNG per instance from (seed, suite, index).
"""

from __future__ import annotations

import hashlib
import itertools
import random
from typing import Sequence

from .complexes import Complex, make_complex
from .graphs import Graph, complete, is_triangle_free, is_wheel_free, wedge_at_vertex


def rng_for(seed: int, *scope) -> random.Random:
    """Deterministic RNG derived from a seed and a scope tuple.

    Hashes through sha256 so the stream is stable across processes and
    platforms (tuple seeding would depend on randomized string hashes).
    """
    key = hashlib.sha256(repr((seed, *scope)).encode()).digest()
    return random.Random(int.from_bytes(key[:8], "big"))


# ---------------------------------------------------------------------------
# named graphs


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def bowtie() -> Graph:
    """Two triangles sharing one vertex."""
    return wedge_at_vertex(complete(3), complete(3), 0, 0)


def prism() -> Graph:
    """Two triangles joined by a perfect matching."""
    tri = [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]
    return Graph.from_edges(6, tri + [(i, i + 3) for i in range(3)])


# ---------------------------------------------------------------------------
# random graphs


def random_connected_graph(rng: random.Random, max_vertices: int = 8,
                           max_edges: int = 12) -> Graph:
    """Random connected graph: a random spanning tree plus extra edges."""
    n = rng.randint(2, max(2, min(max_vertices, max_edges + 1)))
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    pool = [e for e in itertools.combinations(range(n), 2) if e not in edges]
    rng.shuffle(pool)
    budget = rng.randint(0, max(0, max_edges - len(edges)))
    edges.update(pool[:budget])
    return Graph.from_edges(n, edges)


def random_graph_no_isolated(rng: random.Random, max_edges: int = 9) -> Graph:
    """Random graph with minimum degree one (vertices are compacted edge endpoints)."""
    pool_size = rng.randint(2, 8)
    pool = list(itertools.combinations(range(pool_size), 2))
    rng.shuffle(pool)
    chosen = pool[:rng.randint(1, min(max_edges, len(pool)))]
    used = sorted({v for e in chosen for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    return Graph.from_edges(len(used), [(relabel[u], relabel[v]) for u, v in chosen])


def random_connected_triangle_free(rng: random.Random, max_edges: int = 12) -> Graph:
    """Spanning tree plus greedy extra edges that keep the graph triangle-free."""
    n = rng.randint(2, min(9, max_edges + 1))
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    g = Graph.from_edges(n, edges)
    pool = [e for e in itertools.combinations(range(n), 2) if e not in g.edges]
    rng.shuffle(pool)
    for e in pool:
        if g.edge_count >= max_edges:
            break
        candidate = Graph.from_edges(n, set(g.edges) | {e})
        if is_triangle_free(candidate):
            g = candidate
    return g


def random_connected_chordal(rng: random.Random, max_vertices: int = 9) -> Graph:
    """Grow a chordal graph by attaching each new vertex to a clique.

    The new vertex's neighborhood is a nonempty subset of a previously built
    clique, which is a perfect-elimination construction in reverse.
    """
    n = rng.randint(2, max_vertices)
    edges: set[tuple[int, int]] = {(0, 1)}
    cliques: list[frozenset[int]] = [frozenset({0, 1})]
    for v in range(2, n):
        base = sorted(rng.choice(cliques))
        nb = rng.sample(base, rng.randint(1, len(base)))
        for u in nb:
            edges.add((u, v))
        cliques.append(frozenset(nb) | {v})
    return Graph.from_edges(n, edges)


def random_ktree(rng: random.Random, k: int, n: int) -> Graph:
    """k-tree on n >= k + 1 vertices: each new vertex joins a random k-clique."""
    if n < k + 1:
        raise ValueError("a k-tree needs at least k + 1 vertices")
    edges = set(itertools.combinations(range(k + 1), 2))
    k_cliques = [frozenset(c) for c in itertools.combinations(range(k + 1), k)]
    for v in range(k + 1, n):
        base = rng.choice(k_cliques)
        for u in base:
            edges.add((u, v))
        for sub in itertools.combinations(sorted(base), k - 1):
            k_cliques.append(frozenset(sub) | {v})
    return Graph.from_edges(n, edges)


def random_connected_wheel_free(rng: random.Random, max_edges: int = 12) -> Graph:
    """Rejection sampling with the neighborhood-forest test."""
    while True:
        g = random_connected_graph(rng, max_vertices=8, max_edges=max_edges)
        if is_wheel_free(g):
            return g


# ---------------------------------------------------------------------------
# random complexes and engineered block-collapse instances


def random_complex(rng: random.Random, max_facets: int = 8,
                   max_vertices: int = 8) -> Complex:
    n = rng.randint(1, max_vertices)
    faces = []
    for _ in range(rng.randint(1, max_facets)):
        faces.append(rng.sample(range(n), rng.randint(1, min(4, n))))
    return make_complex(n, faces)


def block_instance(rng: random.Random, sizes: Sequence[int],
                   rest_size: int) -> tuple[Complex, tuple, list, tuple]:
    """An engineered facet carrying a block partition with free cross pairs.

    Returns (complex, sigma, blocks, rest).  Extra facets are constrained to
    meet at most one block, which is exactly what keeps every cross-block
    pair free in the ambient complex.
    """
    total = sum(sizes) + rest_size
    pool = total + rng.randint(0, 2)
    members = rng.sample(range(pool), total)
    rng.shuffle(members)
    blocks: list[tuple[int, ...]] = []
    at = 0
    for s in sizes:
        blocks.append(tuple(sorted(members[at:at + s])))
        at += s
    rest = tuple(sorted(members[at:]))
    sigma = tuple(sorted(members))
    faces: list[tuple[int, ...]] = [sigma]
    outside = [v for v in range(pool) if v not in sigma]
    for _ in range(rng.randint(0, 3)):
        keep = rng.randrange(len(blocks))
        allowed = outside + list(blocks[keep]) + list(rest)
        if not allowed:
            continue
        extra = tuple(sorted(rng.sample(allowed, rng.randint(1, len(allowed)))))
        if not frozenset(sigma) <= frozenset(extra):
            faces.append(extra)
    k = make_complex(pool, faces)
    assert sigma in k.facets
    return k, sigma, blocks, rest
