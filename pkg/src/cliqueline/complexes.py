"""Simplicial complexes stored as facet antichains, with on-demand face enumeration.

The facet set omits the empty simplex: a complex with no facets is the complex
whose only face is the empty set.  Vertex universes may contain unused ids so
that edge indexing stays stable across collapses.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphs import Graph, edge_ids, line_graph, triangles

Simplex = tuple[int, ...]


def _canon_simplex(face: Iterable[int]) -> Simplex:
    return tuple(sorted(set(face)))


def _antichain(simplices: Iterable[Simplex]) -> frozenset[Simplex]:
    """Keep only the maximal simplices."""
    by_size = sorted(set(simplices), key=len, reverse=True)
    kept: list[frozenset[int]] = []
    out = []
    for s in by_size:
        fs = frozenset(s)
        if not any(fs <= k for k in kept):
            kept.append(fs)
            out.append(s)
    return frozenset(out)


@dataclass(frozen=True)
class Complex:
    """A finite simplicial complex given by its facets."""

    vertex_count: int
    facets: frozenset[Simplex]

    def __post_init__(self) -> None:
        for f in self.facets:
            if not f:
                raise ValueError("the empty simplex is implicit, not a facet")
            if f[0] < 0 or f[-1] >= self.vertex_count:
                raise ValueError(f"facet {f} out of range for {self.vertex_count} vertices")

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def sorted_facets(self) -> list[Simplex]:
        return sorted(self.facets)

    def used_vertices(self) -> list[int]:
        return sorted({v for f in self.facets for v in f})

    def faces(self, d: int) -> list[Simplex]:
        """All d-dimensional faces, lexicographically sorted."""
        if d < 0:
            return [()] if d == -1 else []
        out = {c for f in self.facets if len(f) > d
               for c in itertools.combinations(f, d + 1)}
        return sorted(out)

    def all_faces(self) -> dict[int, list[Simplex]]:
        return {d: self.faces(d) for d in range(self.dim + 1)}

    def has_face(self, face: Iterable[int]) -> bool:
        s = frozenset(face)
        return any(s <= frozenset(f) for f in self.facets)

    def facets_containing(self, face: Iterable[int]) -> list[Simplex]:
        s = frozenset(face)
        return sorted(f for f in self.facets if s <= frozenset(f))


def make_complex(vertex_count: int, faces: Iterable[Iterable[int]]) -> Complex:
    """Normalize a face list into a facet antichain."""
    canon = [_canon_simplex(f) for f in faces]
    return Complex(vertex_count, _antichain(c for c in canon if c))


EMPTY = make_complex(0, [])


# ---------------------------------------------------------------------------
# constructors


def _maximal_cliques(adj: list[set[int]]) -> list[Simplex]:
    """Bron-Kerbosch with the smallest-id pivot, so output order is reproducible."""
    out: list[Simplex] = []

    def expand(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            out.append(tuple(sorted(r)))
            return
        pivot = min(p | x)
        for v in sorted(p - adj[pivot]):
            expand(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(range(len(adj))), set())
    return sorted(out)


def clique_complex(g: Graph) -> Complex:
    """Complex whose faces are the vertex sets inducing complete subgraphs."""
    if g.vertex_count == 0:
        return EMPTY
    return Complex(g.vertex_count, frozenset(_maximal_cliques(g.adjacency())))


def skeleton(k: Complex, d: int) -> Complex:
    """Subcomplex of all faces of dimension at most d."""
    if d < 0:
        raise ValueError("skeleton dimension must be nonnegative")
    faces: set[Simplex] = set()
    for f in k.facets:
        if len(f) - 1 <= d:
            faces.add(f)
        else:
            faces.update(itertools.combinations(f, d + 1))
    return Complex(k.vertex_count, _antichain(faces))


def line_clique_complex(g: Graph) -> Complex:
    """Clique complex of the line graph of g; vertex i is ``edge_ids(g)[i]``.

    A maximal set of pairwise-incident edges is either the star of edges at
    one vertex or the three edges of a triangle, so the facets are assembled
    directly from those two shapes and the construction is cross-checked
    against the clique complex of the line graph.
    """
    es = edge_ids(g)
    idx = {e: i for i, e in enumerate(es)}
    candidates: set[Simplex] = set()
    for v in range(g.vertex_count):
        star = tuple(sorted(idx[e] for e in es if v in e))
        if star:
            candidates.add(star)
    for u, v, w in triangles(g):
        candidates.add(tuple(sorted((idx[(u, v)], idx[(u, w)], idx[(v, w)]))))
    k = Complex(len(es), _antichain(candidates))
    assert k.facets == clique_complex(line_graph(g)).facets, \
        "star/triangle facet classification disagrees with the clique complex route"
    return k


def nerve_of_facets(k: Complex) -> Complex:
    """Nerve of the facet cover: vertex i per facet, simplices are families with
    a common element.

    Every intersecting family is contained in the family of facets through a
    single vertex, so those families are exactly the facets of the nerve.
    """
    facs = k.sorted_facets()
    families = []
    for v in k.used_vertices():
        families.append(tuple(i for i, f in enumerate(facs) if v in f))
    return make_complex(len(facs), families)


def induced_subcomplex(k: Complex, vertices: Iterable[int]) -> Complex:
    """Subcomplex of faces contained in the given vertex set (universe kept)."""
    vs = set(vertices)
    for v in vs:
        if not 0 <= v < k.vertex_count:
            raise ValueError(f"unknown vertex id {v}")
    return make_complex(k.vertex_count, (tuple(x for x in f if x in vs) for f in k.facets))


def cone_complex(k: Complex) -> Complex:
    """Cone with a fresh apex; the cone over the empty complex is a point."""
    apex = k.vertex_count
    base: Iterable[Simplex] = k.facets or [()]
    return Complex(k.vertex_count + 1, frozenset(f + (apex,) for f in base))


def suspension_complex(k: Complex) -> Complex:
    """Join with two fresh apexes; suspending the empty complex gives two points."""
    a, b = k.vertex_count, k.vertex_count + 1
    base: list[Simplex] = sorted(k.facets) or [()]
    facets = {f + (a,) for f in base} | {f + (b,) for f in base}
    return Complex(k.vertex_count + 2, frozenset(facets))


# ---------------------------------------------------------------------------
# counting and serialization


def f_vector(k: Complex) -> tuple[int, ...]:
    """Face counts per dimension 0..dim; empty for the empty complex."""
    return tuple(len(k.faces(d)) for d in range(k.dim + 1))


def euler_characteristic(k: Complex) -> int:
    return sum((-1) ** d * n for d, n in enumerate(f_vector(k)))


def complex_to_json(k: Complex) -> dict:
    return {"vertex_count": k.vertex_count,
            "facets": [list(f) for f in k.sorted_facets()]}


def complex_from_json(obj: dict) -> Complex:
    return make_complex(int(obj["vertex_count"]), obj["facets"])


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def complex_digest(k: Complex) -> str:
    """Content hash of the canonical serialization, for golden tests."""
    return hashlib.sha256(canonical_dumps(complex_to_json(k)).encode()).hexdigest()
