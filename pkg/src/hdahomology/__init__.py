"""Exact homology and directed-topology toolkit for precubical sets.

The package computes integral (and prime-field) homology of finite
precubical sets, the reachability-based pointing relation between
homology classes with its graph, grid subdivisions (weak morphisms that
are homeomorphisms) with carriers, path mapping and lifting, label-
preserving abstraction checks for higher-dimensional automata, and the
broken-cube reduction loop.  All arithmetic is exact.
"""

from .errors import HdaError
from .precubical import (Path, PrecubicalSet, PrecubicalSubset,
                         build_precubical, concat, faces_closure,
                         full_subcomplex, interval, subcube, tensor)
from .hda import FREE_MONOID, HDA, Monoid, path_label, validate_hda
from .intlinalg import (IntMatrix, IntegerLattice, det, kernel_basis,
                        lattice_member, snf)
from .homology import (HomologyClass, HomologyPresentation, Ring, ZZ,
                       betti_numbers, boundary_matrix, chain_complex,
                       class_from_cells, class_reduce, euler_characteristic,
                       homology_class, homology_presentation,
                       image_membership, parse_ring, pushforward_class,
                       zero_class)
from .reach import Concept, ReachRelation, concepts, concepts_of, reachability
from .hograph import (HomologyGraph, brute_points_to, homology_graph,
                      points_to)
from .subdivision import (AbstractionReport, SubdivisionMorphism, carrier,
                          carrier_cell, carrier_complex, check_abstraction,
                          identity_subdivision, image_subset, lift_path,
                          map_path, subdivide, subdivide_hda,
                          validate_subdivision)
from .reduction import (is_broken, is_past_complete, past_complete_violations,
                        reduce, reduce_with_trace, remove_top, top_cubes)
from .formats import (ComplexDocument, build_complex, build_hda,
                      build_subdivision, document_of, export_dot,
                      format_vector, load_document, parse_document,
                      save_document, serialize_document)

__version__ = "0.1.0"
