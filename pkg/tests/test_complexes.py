import json

import pytest

from cliqueline.complexes import (Complex, canonical_dumps, clique_complex,
                                  complex_digest, complex_from_json,
                                  complex_to_json, cone_complex,
                                  euler_characteristic, f_vector,
                                  induced_subcomplex, line_clique_complex,
                                  make_complex, nerve_of_facets, skeleton,
                                  suspension_complex)
from cliqueline.graphs import (Graph, complete, complete_multipartite, cycle,
                               line_graph, path)
from cliqueline.homology import reduced_homology


def boundary_of_simplex(n):
    """The (n-2)-skeleton presentation of the boundary of an (n-1)-simplex."""
    return skeleton(make_complex(n, [tuple(range(n))]), n - 2)


def test_clique_complex_examples():
    k = clique_complex(complete(4))
    assert k.sorted_facets() == [(0, 1, 2, 3)]
    k = clique_complex(cycle(5))
    assert all(len(f) == 2 for f in k.facets) and len(k.facets) == 5
    octa = clique_complex(complete_multipartite([2, 2, 2]))
    assert len(octa.facets) == 8 and all(len(f) == 3 for f in octa.facets)
    # isolated vertices appear as singleton facets
    iso = clique_complex(Graph.from_edges(3, [(0, 1)]))
    assert iso.sorted_facets() == [(0, 1), (2,)]


def test_facet_antichain_enforced():
    k = make_complex(4, [(0, 1), (0, 1, 2), (3,), (1, 2)])
    assert k.sorted_facets() == [(0, 1, 2), (3,)]
    with pytest.raises(ValueError):
        Complex(2, frozenset({(0, 5)}))


def test_skeleton_examples():
    tetra = make_complex(4, [(0, 1, 2, 3)])
    bd = skeleton(tetra, 2)
    assert len(bd.facets) == 4 and all(len(f) == 3 for f in bd.facets)
    k = clique_complex(complete_multipartite([2, 2]))
    assert skeleton(k, k.dim) == k
    assert len(skeleton(make_complex(5, [tuple(range(5))]), 2).facets) == 10
    with pytest.raises(ValueError):
        skeleton(tetra, -1)


def test_line_clique_complex_examples():
    assert line_clique_complex(path(2)).sorted_facets() == [(0, 1)]
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert line_clique_complex(two_k2).sorted_facets() == [(0,), (1,)]
    profile = reduced_homology(line_clique_complex(complete(4)))
    assert profile.betti == (0, 0, 1) and profile.torsion_free


def test_line_clique_complex_matches_line_graph_route():
    house = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    for g in [complete(5), cycle(6), complete_multipartite([2, 2, 2]), house]:
        direct = line_clique_complex(g)
        assert direct.facets == clique_complex(line_graph(g)).facets


def test_nerve_examples():
    single = make_complex(3, [(0, 1, 2)])
    assert nerve_of_facets(single).sorted_facets() == [(0,)]
    bd = boundary_of_simplex(4)
    nerve = nerve_of_facets(bd)
    assert len(nerve.facets) == 4 and all(len(f) == 3 for f in nerve.facets)
    two = make_complex(4, [(0, 1), (2, 3)])
    assert nerve_of_facets(two).sorted_facets() == [(0,), (1,)]


def test_induced_subcomplex_examples():
    bd = boundary_of_simplex(4)
    assert induced_subcomplex(bd, range(4)) == bd
    assert induced_subcomplex(bd, []).facets == frozenset()
    assert induced_subcomplex(bd, [0, 1, 3]).sorted_facets() == [(0, 1, 3)]
    with pytest.raises(ValueError):
        induced_subcomplex(bd, [7])


def test_cone_and_suspension_complex():
    two_points = make_complex(2, [(0,), (1,)])
    assert cone_complex(two_points).sorted_facets() == [(0, 2), (1, 2)]
    circle4 = suspension_complex(two_points)
    assert circle4.sorted_facets() == [(0, 2), (0, 3), (1, 2), (1, 3)]
    assert reduced_homology(circle4).betti == (0, 1)
    # cones are contractible
    for base in [boundary_of_simplex(4), make_complex(3, [(0, 1), (1, 2)])]:
        prof = reduced_homology(cone_complex(base))
        assert all(b == 0 for b in prof.betti) and prof.torsion_free
    # cone over the empty complex is a point, suspension is two points
    empty = make_complex(0, [])
    assert cone_complex(empty).sorted_facets() == [(0,)]
    assert suspension_complex(empty).sorted_facets() == [(0,), (1,)]


def test_f_vector_and_euler():
    bd = boundary_of_simplex(4)
    assert f_vector(bd) == (4, 6, 4)
    assert euler_characteristic(bd) == 2
    k33 = line_clique_complex(complete_multipartite([3, 3]))
    assert f_vector(k33) == (9, 18, 6)
    assert euler_characteristic(k33) == -3
    assert euler_characteristic(make_complex(1, [(0,)])) == 1
    assert euler_characteristic(make_complex(0, [])) == 0


def test_unused_vertex_ids_are_allowed():
    k = make_complex(10, [(2, 7)])
    assert k.used_vertices() == [2, 7]
    assert f_vector(k) == (2, 1)
    assert reduced_homology(k).betti == (0, 0)


def test_json_roundtrip_and_digest():
    k = line_clique_complex(complete(4))
    obj = complex_to_json(k)
    assert complex_from_json(obj) == k
    assert obj["facets"] == sorted(obj["facets"])
    # digest is stable across runs: frozen golden value
    assert complex_digest(k) == complex_digest(complex_from_json(json.loads(canonical_dumps(obj))))
    assert complex_digest(k) == "f108a5f7c9a056a7c3cfc3a9a80f3cd078c8792df2cf0dc55596299b8a10949c"
