import pytest

from cliqueline.complexes import (cone_complex, line_clique_complex,
                                  make_complex, skeleton, suspension_complex)
from cliqueline.graphs import complete, complete_multipartite, cycle
from cliqueline.homology import (BoundaryMatrix, boundary_matrix,
                                 compose_is_zero, leray_bound_check,
                                 reduced_homology, smith_normal_form,
                                 wedge_profile)

BOUNDARY_TETRA = skeleton(make_complex(4, [(0, 1, 2, 3)]), 2)

# antipodal 6-vertex triangulation of the real projective plane
RP2 = make_complex(6, [(0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 4), (0, 3, 5),
                       (1, 2, 3), (1, 2, 5), (1, 3, 4), (2, 4, 5), (3, 4, 5)])


def test_boundary_matrix_single_edge():
    bm = boundary_matrix(make_complex(2, [(0, 1)]), 1)
    assert bm.rows == ((0,), (1,))
    assert bm.entries == ((-1,), (1,))


def test_boundary_matrix_triangle_signs():
    bm = boundary_matrix(make_complex(3, [(0, 1, 2)]), 2)
    assert bm.rows == ((0, 1), (0, 2), (1, 2))
    assert bm.entries == ((1,), (-1,), (1,))


def test_boundary_matrix_augmentation_row():
    bm = boundary_matrix(make_complex(3, [(0,), (1, 2)]), 0)
    assert bm.rows == ((),)
    assert bm.entries == ((1, 1, 1),)


def test_chain_complex_law():
    for k in [BOUNDARY_TETRA, RP2, line_clique_complex(complete(5))]:
        for d in range(1, k.dim + 1):
            assert compose_is_zero(boundary_matrix(k, d - 1), boundary_matrix(k, d))


def test_snf_examples():
    assert smith_normal_form([[0, 0], [0, 0]]) .rank == 0
    assert smith_normal_form([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).factors == (1, 1, 1)
    assert smith_normal_form([[2, 0], [0, 3]]).factors == (1, 6)
    # hand-checked: row/col reduce [[2,4],[6,10]] -> diag(2, 2) after chain fix
    assert smith_normal_form([[2, 4], [6, 10]]).factors == (2, 2)
    assert smith_normal_form([[6, 10, 15]]).factors == (1,)
    assert smith_normal_form([]).rank == 0


def test_snf_divisibility_chain():
    res = smith_normal_form([[4, 0, 0], [0, 3, 0], [0, 0, 10]])
    assert res.factors == (1, 2, 60)
    for a, b in zip(res.factors, res.factors[1:]):
        assert b % a == 0


def test_reduced_homology_spheres():
    assert reduced_homology(BOUNDARY_TETRA).betti == (0, 0, 1)
    circle = make_complex(3, [(0, 1), (1, 2), (0, 2)])
    assert reduced_homology(circle).betti == (0, 1)
    point = make_complex(1, [(0,)])
    assert reduced_homology(point).betti == (0,)
    two_points = make_complex(2, [(0,), (1,)])
    assert reduced_homology(two_points).betti == (1,)


def test_reduced_homology_empty_complex_sentinel():
    prof = reduced_homology(make_complex(0, []))
    assert prof.is_empty_complex
    assert prof.betti == () and prof.torsion == ()
    assert prof.betti_at(-1) == 1
    assert not wedge_profile(make_complex(0, []), {2})


def test_projective_plane_torsion():
    prof = reduced_homology(RP2)
    assert prof.betti == (0, 0, 0)
    assert prof.torsion == ((), (2,), ())
    assert not prof.torsion_free
    assert not wedge_profile(RP2, {1, 2})


def test_known_line_clique_profiles():
    assert reduced_homology(line_clique_complex(complete(4))).betti == (0, 0, 1)
    prof = reduced_homology(line_clique_complex(complete_multipartite([3, 3])))
    assert prof.betti == (0, 4, 0) and prof.torsion_free
    prof = reduced_homology(line_clique_complex(complete_multipartite([2, 2, 2])))
    assert prof.betti_at(2) == 1 and sum(prof.betti) == 1


def test_suspension_shifts_homology():
    for k in [RP2, BOUNDARY_TETRA, make_complex(2, [(0,), (1,)])]:
        base = reduced_homology(k)
        lifted = reduced_homology(suspension_complex(k))
        assert lifted.betti[0] == 0
        for d, b in enumerate(base.betti):
            assert lifted.betti_at(d + 1) == b
            assert lifted.torsion_at(d + 1) == base.torsion_at(d)


def test_cone_kills_homology():
    for k in [RP2, BOUNDARY_TETRA]:
        prof = reduced_homology(cone_complex(k))
        assert all(b == 0 for b in prof.betti) and prof.torsion_free


def test_wedge_profile_examples():
    assert wedge_profile(line_clique_complex(cycle(6)), {1})
    assert not wedge_profile(BOUNDARY_TETRA, {1})
    assert wedge_profile(BOUNDARY_TETRA, {2})
    # contractible counts as an empty wedge
    assert wedge_profile(make_complex(1, [(0,)]), {2})
    # disconnected complexes never qualify
    assert not wedge_profile(make_complex(2, [(0,), (1,)]), {1})


def test_leray_examples():
    assert leray_bound_check(line_clique_complex(complete(5)), 3).passed
    res = leray_bound_check(BOUNDARY_TETRA, 2)
    assert not res.passed and res.witness == (0, 1, 2, 3)
    assert leray_bound_check(make_complex(1, [(0,)]), 1).passed
    res = leray_bound_check(RP2, 2)
    assert res.passed and not res.all_fields  # torsion sits one degree below


def test_leray_budget_paths():
    wide = make_complex(16, [(i, i + 1) for i in range(15)])
    with pytest.raises(ValueError):
        leray_bound_check(wide, 2)
    res = leray_bound_check(wide, 2, budget=40, seed=1)
    assert res.passed and not res.exhaustive


def test_boundary_matrix_rejects_negative_dimension():
    with pytest.raises(ValueError):
        boundary_matrix(BOUNDARY_TETRA, -1)
