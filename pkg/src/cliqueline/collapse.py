"""Free faces, elementary collapses, structured block collapses, and the
wheel-free collapse procedure for clique complexes of line graphs.

Every applied step is revalidated against the current complex, so a trace can
be replayed across module boundaries without trusting its producer.
"""

from __future__ import annotations

import hashlib
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import (Complex, Simplex, _antichain, canonical_dumps,
                        complex_digest, line_clique_complex)
from .graphs import Graph, _canon, edge_ids, is_connected, is_wheel_free, triangles


class CollapseError(ValueError):
    """A pair is stale or a structured-collapse precondition fails."""


@dataclass(frozen=True, order=True)
class CollapsiblePair:
    """A free face together with the unique facet containing it."""

    free: Simplex
    facet: Simplex


@dataclass(frozen=True)
class CollapseTrace:
    """An ordered, replayable certificate of a deformation retraction."""

    start: Complex
    end: Complex
    steps: tuple[CollapsiblePair, ...]


def is_free_pair(k: Complex, pair: CollapsiblePair) -> bool:
    free, facet = frozenset(pair.free), frozenset(pair.facet)
    if not pair.free or not free < facet or pair.facet not in k.facets:
        return False
    return len(k.facets_containing(pair.free)) == 1


def free_faces(k: Complex) -> list[CollapsiblePair]:
    """All collapsible pairs of k, in lexicographic (free, facet) order."""
    containment: dict[Simplex, list[Simplex]] = {}
    for f in k.facets:
        for size in range(1, len(f) + 1):
            for sub in itertools.combinations(f, size):
                containment.setdefault(sub, []).append(f)
    return sorted(CollapsiblePair(s, fs[0])
                  for s, fs in containment.items()
                  if len(fs) == 1 and s != fs[0])


def collapse_pair(k: Complex, pair: CollapsiblePair) -> Complex:
    """Remove the interval between the free face and its facet.

    Exactly 2^(|facet| - |free|) faces disappear; the surviving maximal faces
    under the old facet are its codimension-one faces missing a vertex of the
    free face.
    """
    if not is_free_pair(k, pair):
        raise CollapseError(f"pair {pair} is not collapsible in the current complex")
    keep = [f for f in k.facets if f != pair.facet]
    keep_sets = [frozenset(f) for f in keep]
    for v in pair.free:
        candidate = tuple(x for x in pair.facet if x != v)
        if candidate and not any(frozenset(candidate) <= s for s in keep_sets):
            keep.append(candidate)
            keep_sets.append(frozenset(candidate))
    return Complex(k.vertex_count, frozenset(keep))


class _Collapser:
    """Accumulates steps against a working copy of the complex."""

    def __init__(self, start: Complex):
        self.start = start
        self.current = start
        self.steps: list[CollapsiblePair] = []

    def apply(self, free: Iterable[int], facet: Iterable[int]) -> None:
        pair = CollapsiblePair(tuple(sorted(free)), tuple(sorted(facet)))
        self.current = collapse_pair(self.current, pair)
        self.steps.append(pair)

    def trace(self) -> CollapseTrace:
        return CollapseTrace(self.start, self.current, tuple(self.steps))


def replay(trace: CollapseTrace) -> Complex:
    """Re-apply every step from the start complex, validating each in turn."""
    k = trace.start
    for pair in trace.steps:
        k = collapse_pair(k, pair)
    return k


# ---------------------------------------------------------------------------
# structured block collapses of a single facet

# The schedules below realize the hand collapses used throughout the graph
# arguments.  Anchors are the lexicographically largest block members, and
# rounds walk blocks in ascending order, so traces are deterministic.


def _paired_rounds(col: _Collapser, sigma: frozenset, a_list: Sequence[int],
                   b_list: Sequence[int]) -> None:
    # one round per a-element: ({a_i, b_j}, sigma - {a_1..a_{i-1}} - {b_1..b_{j-1}})
    removed_a: set[int] = set()
    for a in a_list:
        base = sigma - removed_a
        removed_b: set[int] = set()
        for b in b_list:
            col.apply((a, b), base - removed_b)
            removed_b.add(b)
        removed_a.add(a)


def _chain_steps(col: _Collapser, a: int, b_list: Sequence[int]) -> None:
    # ({a, b_j}, {a, b_j, ..., b_q}) for j < q; keeps the edge {a, b_q}
    for j in range(len(b_list) - 1):
        col.apply((a, b_list[j]), (a, *b_list[j:]))


def _check_blocks(k: Complex, sigma: Simplex, blocks: Sequence[frozenset],
                  rest: frozenset) -> None:
    if sigma not in k.facets:
        raise CollapseError(f"{sigma} is not a facet")
    union: set[int] = set()
    for b in blocks:
        if not b:
            raise CollapseError("blocks must be nonempty")
        if union & b:
            raise CollapseError("blocks must be disjoint")
        union |= b
    if union & rest or union | rest != set(sigma):
        raise CollapseError("blocks and rest must partition the facet")
    for bi, bj in itertools.combinations(blocks, 2):
        for a, b in itertools.product(bi, bj):
            pair = CollapsiblePair(tuple(sorted((a, b))), sigma)
            if pair.free == sigma:
                continue  # 2-element facet: the pair is the facet and is never collapsed
            if not is_free_pair(k, pair):
                raise CollapseError(f"cross pair {pair.free} is not a free face of {sigma}")


def two_block_collapse(k: Complex, sigma: Simplex, a_block: Iterable[int],
                       b_block: Iterable[int], c_block: Iterable[int] = ()) -> CollapseTrace:
    """Collapse a facet partitioned as A | B | C when every {a, b} cross pair is
    a free face.

    End facets, up to antichain pruning against the rest of the complex:
    with C nonempty, sigma-minus-A and sigma-minus-B; with C empty and A a
    singleton, B plus the edge {a, max B}; with C empty and both blocks of
    size at least two, A, B, and the edge {max A, max B}.
    """
    a_set, b_set, c_set = frozenset(a_block), frozenset(b_block), frozenset(c_block)
    if not a_set or not b_set:
        raise CollapseError("both blocks must be nonempty")
    if frozenset(sigma) != a_set | b_set | c_set:
        raise CollapseError("blocks do not partition sigma")
    _check_blocks(k, tuple(sorted(frozenset(sigma))), [a_set, b_set], c_set)
    col = _Collapser(k)
    a_list, b_list = sorted(a_set), sorted(b_set)
    sigma_set = frozenset(sigma)
    if c_set:
        _paired_rounds(col, sigma_set, a_list, b_list)
    elif len(a_list) == 1 and len(b_list) >= 2:
        _chain_steps(col, a_list[0], b_list)
    elif len(a_list) >= 2 and len(b_list) >= 2:
        _paired_rounds(col, sigma_set, a_list[:-1], b_list)
        _chain_steps(col, a_list[-1], b_list)
    else:
        raise CollapseError("need C nonempty, or |A| = 1 with |B| >= 2, or both blocks >= 2")
    return col.trace()


def _run_multi_block(col: _Collapser, sigma: Simplex,
                     blocks: Sequence[Sequence[int]], rest: Iterable[int]) -> None:
    block_sets = [frozenset(b) for b in blocks]
    rest_set = frozenset(rest)
    _check_blocks(col.current, tuple(sorted(frozenset(sigma))), block_sets, rest_set)
    cur = frozenset(sigma)
    if rest_set:
        # fold: peel each block off onto the rest
        for blk in block_sets[:-1]:
            _paired_rounds(col, cur, sorted(blk), sorted(cur - blk - rest_set))
            cur -= blk
        return
    anchor = max(block_sets[-1])
    for blk in block_sets[:-1]:
        a_list = sorted(blk)
        b_set = cur - blk
        b_list = sorted(b_set - {anchor}) + [anchor]
        if len(a_list) == 1 and len(b_list) == 1:
            break  # the remaining 2-face already is the anchored edge
        if len(a_list) == 1:
            _chain_steps(col, a_list[0], b_list)
        elif len(b_list) == 1:
            # symmetric shape: block of size >= 2 against a singleton remainder
            _chain_steps(col, b_list[0], a_list)
        else:
            _paired_rounds(col, cur, a_list[:-1], b_list)
            _chain_steps(col, a_list[-1], b_list)
        cur -= blk


def multi_block_collapse(k: Complex, sigma: Simplex, blocks: Sequence[Sequence[int]],
                         rest: Iterable[int] = ()) -> CollapseTrace:
    """Collapse a facet partitioned into blocks A_1..A_k plus a rest C, when all
    cross-block pairs are free faces.

    With C nonempty the end facets are A_i | C for every i; with C empty they
    are the blocks plus the edges {max A_i, max A_k} for i < k.  Implemented
    by folding the two-block schedules over the blocks.
    """
    col = _Collapser(k)
    _run_multi_block(col, sigma, blocks, rest)
    return col.trace()


# ---------------------------------------------------------------------------
# generic greedy engine


def greedy_collapse(k: Complex, target_dim: int | None = None) -> CollapseTrace:
    """Repeatedly apply the lexicographically smallest valid pair among those
    whose facet has maximal dimension, until stuck or every facet has
    dimension at most ``target_dim``."""
    col = _Collapser(k)
    while True:
        if target_dim is not None and col.current.dim <= target_dim:
            break
        pairs = free_faces(col.current)
        if not pairs:
            break
        dmax = max(len(p.facet) for p in pairs)
        best = min(p for p in pairs if len(p.facet) == dmax)
        col.apply(best.free, best.facet)
    return col.trace()


# ---------------------------------------------------------------------------
# wheel-free graphs: collapse the line-clique complex to dimension <= 1


@dataclass(frozen=True)
class StarPartition:
    """Neighborhood of a vertex split into isolated members and tree components."""

    center: int
    isolated: tuple[int, ...]
    tree_components: tuple[tuple[int, ...], ...]


def star_partition(g: Graph, x: int) -> StarPartition:
    """Partition N(x) into vertices isolated in G[N(x)] and the components with
    at least two vertices, which must induce trees (no wheel through x)."""
    nb = sorted(g.neighbors(x))
    nb_set = set(nb)
    seen: set[int] = set()
    isolated: list[int] = []
    comps: list[tuple[int, ...]] = []
    for s in nb:
        if s in seen:
            continue
        comp, stack = [], [s]
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v) & nb_set:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comp.sort()
        if len(comp) == 1:
            isolated.append(comp[0])
        else:
            inner_edges = sum(1 for a, b in itertools.combinations(comp, 2) if g.has_edge(a, b))
            if inner_edges != len(comp) - 1:
                raise ValueError(f"neighborhood of {x} contains a cycle: wheel detected")
            comps.append(tuple(comp))
    comps.sort(key=lambda c: c[0])
    return StarPartition(x, tuple(isolated), tuple(comps))


def _run_tree_collapse(col: _Collapser, g: Graph, x: int,
                       component: Sequence[int], idx: dict) -> None:
    # peel leaves: each round removes the edge to the smallest leaf of the tree
    verts = set(component)
    while len(verts) > 2:
        leaves = sorted(v for v in verts if len(g.neighbors(v) & verts) == 1)
        leaf = leaves[0]
        parent = next(iter(g.neighbors(leaf) & verts))
        e_leaf = idx[_canon(x, leaf)]
        others = sorted(idx[_canon(x, v)] for v in verts if v not in (leaf, parent))
        face = frozenset(idx[_canon(x, v)] for v in verts)
        removed: set[int] = set()
        for e in others:
            # a leaf edge and a non-parent edge never span a triangle of g,
            # so the pair stays free; the edge to the parent survives as a 1-face
            col.apply((e_leaf, e), face - removed)
            removed.add(e)
        verts.remove(leaf)


def wheel_free_collapse(g: Graph) -> CollapseTrace:
    """Collapse the line-clique complex of a connected wheel-free graph down to
    dimension at most one.

    Star facets are collapsed first, each via the multi-block schedule over
    its neighborhood partition followed by leaf-peeling of the tree blocks;
    the remaining triangle facets then always have a free edge.
    """
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if not is_wheel_free(g):
        raise ValueError("graph must be wheel-free")
    es = edge_ids(g)
    idx = {e: i for i, e in enumerate(es)}
    col = _Collapser(line_clique_complex(g))
    for x in range(g.vertex_count):
        if g.degree(x) < 3:
            continue  # already a facet of dimension <= 1, nothing to do
        part = star_partition(g, x)
        blocks: list[tuple[int, ...]] = [
            tuple(sorted(idx[_canon(x, a)] for a in comp))
            for comp in part.tree_components
        ]
        blocks += [(idx[_canon(x, a)],)
                   for a in sorted(part.isolated, key=lambda a: idx[_canon(x, a)])]
        sigma = tuple(sorted(idx[_canon(x, a)] for a in g.neighbors(x)))
        _run_multi_block(col, sigma, blocks, ())
        for comp in part.tree_components:
            _run_tree_collapse(col, g, x, comp, idx)
    for u, v, w in triangles(g):
        face = tuple(sorted((idx[(u, v)], idx[(u, w)], idx[(v, w)])))
        col.apply(face[:2], face)
    trace = col.trace()
    assert trace.end.dim <= 1, "wheel-free collapse failed to reach dimension <= 1"
    return trace


# ---------------------------------------------------------------------------
# serialization


def trace_to_json(trace: CollapseTrace) -> dict:
    return {
        "start": complex_digest(trace.start),
        "end": complex_digest(trace.end),
        "steps": [{"free": list(p.free), "facet": list(p.facet)} for p in trace.steps],
    }


def trace_digest(trace: CollapseTrace) -> str:
    return hashlib.sha256(canonical_dumps(trace_to_json(trace)).encode()).hexdigest()
