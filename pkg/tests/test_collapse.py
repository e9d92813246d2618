import json

import pytest

from cliqueline.collapse import (CollapseError, CollapsiblePair, collapse_pair,
                                 free_faces, greedy_collapse, is_free_pair,
                                 multi_block_collapse, replay, star_partition,
                                 trace_digest, trace_to_json,
                                 two_block_collapse, wheel_free_collapse)
from cliqueline.complexes import (complex_digest, cone_complex,
                                  line_clique_complex, make_complex, skeleton)
from cliqueline.graphs import (Graph, complete, complete_multipartite, cycle,
                               wheel)
from cliqueline.generators import bowtie, petersen
from cliqueline.homology import profiles_equal, reduced_homology


BOUNDARY_TETRA = skeleton(make_complex(4, [(0, 1, 2, 3)]), 2)


def count_faces(k):
    return sum(len(k.faces(d)) for d in range(k.dim + 1))


def test_free_faces_examples():
    k = make_complex(2, [(0, 1)])
    pairs = free_faces(k)
    assert CollapsiblePair((0,), (0, 1)) in pairs
    assert CollapsiblePair((1,), (0, 1)) in pairs
    assert free_faces(BOUNDARY_TETRA) == []
    tri = make_complex(3, [(0, 1, 2)])
    assert CollapsiblePair((0, 1), (0, 1, 2)) in free_faces(tri)
    assert pairs == sorted(pairs)


def test_collapse_pair_examples():
    tri = make_complex(3, [(0, 1, 2)])
    out = collapse_pair(tri, CollapsiblePair((0, 1), (0, 1, 2)))
    assert out.sorted_facets() == [(0, 2), (1, 2)]
    edge = make_complex(2, [(0, 1)])
    out = collapse_pair(edge, CollapsiblePair((0,), (0, 1)))
    assert out.sorted_facets() == [(1,)]
    with pytest.raises(CollapseError):
        collapse_pair(BOUNDARY_TETRA, CollapsiblePair((0, 1), (0, 1, 2)))


def test_collapse_pair_removes_interval():
    k = make_complex(5, [(0, 1, 2, 3), (3, 4)])
    pair = CollapsiblePair((0,), (0, 1, 2, 3))
    out = collapse_pair(k, pair)
    assert count_faces(k) - count_faces(out) == 2 ** (4 - 1)
    assert profiles_equal(reduced_homology(k), reduced_homology(out))


def test_collapse_pair_rejects_stale_pairs():
    tri = make_complex(3, [(0, 1, 2)])
    pair = CollapsiblePair((0, 1), (0, 1, 2))
    once = collapse_pair(tri, pair)
    with pytest.raises(CollapseError):
        collapse_pair(once, pair)


def test_two_block_case_with_remainder():
    k = make_complex(3, [(0, 1, 2)])
    t = two_block_collapse(k, (0, 1, 2), [0], [1], [2])
    assert sorted(t.end.facets) == [(0, 2), (1, 2)]
    assert replay(t) == t.end


def test_two_block_singleton_against_block():
    k = make_complex(3, [(0, 1, 2)])
    t = two_block_collapse(k, (0, 1, 2), [0], [1, 2])
    assert sorted(t.end.facets) == [(0, 2), (1, 2)]


def test_two_block_both_blocks_large():
    k = make_complex(4, [(0, 1, 2, 3)])
    t = two_block_collapse(k, (0, 1, 2, 3), [0, 1], [2, 3])
    assert sorted(t.end.facets) == [(0, 1), (1, 3), (2, 3)]


def test_two_block_preserves_homology_stepwise():
    k = make_complex(6, [(0, 1, 2, 3, 4), (4, 5)])
    t = two_block_collapse(k, (0, 1, 2, 3, 4), [0, 1], [2, 3], [4])
    cur = t.start
    prof = reduced_homology(cur)
    for step in t.steps:
        cur = collapse_pair(cur, step)
        assert profiles_equal(reduced_homology(cur), prof)
    assert sorted(t.end.facets) == sorted(
        {(2, 3, 4), (0, 1, 4), (4, 5)})


def test_two_block_precondition_failures():
    k = make_complex(4, [(0, 1, 2), (1, 2, 3)])
    # (1, 2) faces live in two facets, so cross pairs are not free
    with pytest.raises(CollapseError):
        two_block_collapse(k, (0, 1, 2), [1], [2], [0])
    tri = make_complex(3, [(0, 1, 2)])
    with pytest.raises(CollapseError):
        two_block_collapse(tri, (0, 1, 2), [0], [1])  # leftover vertex unassigned
    edge = make_complex(2, [(0, 1)])
    with pytest.raises(CollapseError):
        two_block_collapse(edge, (0, 1), [0], [1])  # no case covers 1+1 without rest


def test_multi_block_examples():
    k = make_complex(3, [(0, 1, 2)])
    t = multi_block_collapse(k, (0, 1, 2), [(0,), (1,)], (2,))
    assert sorted(t.end.facets) == [(0, 2), (1, 2)]
    t = multi_block_collapse(k, (0, 1, 2), [(0,), (1,), (2,)])
    assert sorted(t.end.facets) == [(0, 2), (1, 2)]
    # single block: nothing to collapse
    t = multi_block_collapse(k, (0, 1, 2), [(0, 1, 2)], ())
    assert t.steps == () and t.end == k


def test_multi_block_anchored_edges():
    k = make_complex(6, [(0, 1, 2, 3, 4, 5)])
    t = multi_block_collapse(k, (0, 1, 2, 3, 4, 5), [(0, 1), (2, 3), (4, 5)])
    assert sorted(t.end.facets) == [(0, 1), (1, 5), (2, 3), (3, 5), (4, 5)]


def test_greedy_collapse_examples():
    simplex = make_complex(4, [(0, 1, 2, 3)])
    t = greedy_collapse(simplex)
    assert t.end.sorted_facets() == [(3,)]
    t = greedy_collapse(BOUNDARY_TETRA)
    assert t.steps == ()
    conework = cone_complex(make_complex(4, [(0, 1), (2, 3), (1, 2)]))
    t = greedy_collapse(conework)
    assert len(t.end.facets) == 1 and t.end.dim == 0
    # target dimension stops early
    t = greedy_collapse(simplex, target_dim=2)
    assert t.end.dim <= 2


def test_star_partition_examples():
    bow = bowtie()
    part = star_partition(bow, 0)
    assert part.isolated == ()
    assert sorted(len(c) for c in part.tree_components) == [2, 2]
    c5 = cycle(5)
    part = star_partition(c5, 0)
    assert sorted(part.isolated) == sorted(c5.neighbors(0))
    assert part.tree_components == ()
    star = complete_multipartite([1, 4])
    part = star_partition(star, 0)
    assert len(part.isolated) == 4
    with pytest.raises(ValueError):
        star_partition(wheel(4), 4)  # apex neighborhood is a cycle


def test_wheel_free_collapse_examples():
    t = wheel_free_collapse(cycle(5))
    assert t.steps == () and t.end.dim == 1
    assert reduced_homology(t.end).betti == (0, 1)

    t = wheel_free_collapse(bowtie())
    assert t.end.dim <= 1
    prof = reduced_homology(t.end)
    assert prof.betti == (0, 0)

    t = wheel_free_collapse(petersen())
    assert t.end.dim == 1
    assert reduced_homology(t.end).betti == (0, 6)


def test_wheel_free_collapse_matches_start_homology():
    cases = [bowtie(), petersen(), cycle(6),
             Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)])]
    for g in cases:
        t = wheel_free_collapse(g)
        assert profiles_equal(reduced_homology(t.start), reduced_homology(t.end))
        assert replay(t) == t.end


def test_wheel_free_collapse_preconditions():
    with pytest.raises(ValueError):
        wheel_free_collapse(complete(4))
    with pytest.raises(ValueError):
        wheel_free_collapse(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_trace_serialization():
    t = wheel_free_collapse(bowtie())
    obj = trace_to_json(t)
    assert obj["start"] == complex_digest(t.start)
    assert obj["end"] == complex_digest(t.end)
    assert len(obj["steps"]) == len(t.steps)
    assert all(set(step) == {"free", "facet"} for step in obj["steps"])
    json.dumps(obj)  # serializable
    digest = trace_digest(t)
    assert len(digest) == 64 and digest == trace_digest(t)


def test_is_free_pair_requires_current_facet():
    tri = make_complex(3, [(0, 1, 2)])
    assert is_free_pair(tri, CollapsiblePair((0,), (0, 1, 2)))
    assert not is_free_pair(tri, CollapsiblePair((0, 1, 2), (0, 1, 2)))
    assert not is_free_pair(tri, CollapsiblePair((), (0, 1, 2)))
