"""Clique complexes of line graphs: construction, simplicial collapse, exact
integer homology, and mechanical verification of the homotopy-type claims."""

from .graphs import (CirculantSpec, ComponentClass, Graph, circulant,
                     classify_circulant, complete, complete_multipartite,
                     components, cone, cycle, cyclomatic, disjoint_union,
                     edge_ids, find_wheel_subgraph, format_edge_list, glue,
                     induced_subgraph, is_bipartite, is_chordal, is_connected,
                     is_isomorphic, is_triangle_free, is_wheel_free, line_graph,
                     parse_edge_list, path, suspension, triangles,
                     wedge_at_vertex, wheel)
from .complexes import (Complex, Simplex, clique_complex, complex_digest,
                        complex_from_json, complex_to_json, cone_complex,
                        euler_characteristic, f_vector, induced_subcomplex,
                        line_clique_complex, make_complex, nerve_of_facets,
                        skeleton, suspension_complex)
from .homology import (BoundaryMatrix, HomologyProfile, LerayCheck, SNFResult,
                       boundary_matrix, compose_is_zero, leray_bound_check,
                       pad_profile, profiles_equal, reduced_homology,
                       smith_normal_form, wedge_profile)
from .collapse import (CollapseError, CollapseTrace, CollapsiblePair,
                       StarPartition, collapse_pair, free_faces,
                       greedy_collapse, is_free_pair, multi_block_collapse,
                       replay, star_partition, trace_digest, trace_to_json,
                       two_block_collapse, wheel_free_collapse)
from .verify import (Report, check_block_collapse, check_chordal,
                     check_circulant, check_complete, check_cone, check_gluing,
                     check_leray, check_multipartite, check_nerve,
                     check_skeleton_equivalence, check_suspension,
                     check_triangle_free, check_wheel_free, default_config,
                     four_regular_specs, run_suite)

__version__ = "0.1.0"
