"""Maximal knotless graphs: certify, construct, enumerate, decompose.

A graph is maximal knotless when it has a knotless spatial embedding but
gains an intrinsically knotted one under any edge addition. This package
certifies such graphs with replayable evidence trees, reproduces the
classification through order nine and size twenty, generates the clique-sum
families realizing every feasible size, and decomposes members into prime
factors.
"""

__version__ = "0.1.0"

from .canon import (CanonicalForm, OrbitPartition, are_isomorphic,
                    automorphism_generators, canonical_form, canonical_graph,
                    canonical_labeling, isomorphism, orbits)
from .catalog import (NamedGraph, ObstructionLibrary, heawood_family,
                      k3311_family, k7_dy_family, mmik_library, named_graph)
from .certify import (Certificate, certify_ik, certify_maxnik, certify_nik,
                      check_necessary, validate_certificate)
from .construct import (ConstructionPlan, GluingSpec, chain_graphs,
                        clique_sum, npp5_family, prime_family,
                        size_construct, subdivide_retriangulate)
from .errors import (ConstructionInvariantError, IdentificationAmbiguous,
                     MaxnikError, OrderOverflowError, ParseError,
                     PreconditionError, SizeOutOfRangeError,
                     UnrepresentableSizeError, ValidationError)
from .graphs import (DegreeStats, Graph, complement, complete_graph,
                     complete_multipartite, contract_edge, cycle_graph,
                     degree_stats, disjoint_union, empty_graph, from_edges,
                     graph6_decode, graph6_encode, join, non_triangular_edges,
                     path_graph, triangles, vertex_connectivity)
from .minors import (ClosureResult, MinorWitness, closure, delta_y,
                     has_minor, y_delta)
from .planarity import (is_k_apex, is_maximal_2apex, is_maximal_planar,
                        is_planar, is_planar_wagner)
from .primality import (Decomposition, check_lemma_complement_k2,
                        check_lemma_two_cut, clique_cutsets, decompose,
                        is_prime)
from .survey import (classified_maxnik, enumerate_graphs, enumerate_maxnik,
                     enumerate_triangulations, table_deg, table_ve,
                     verify_order9, verify_size20)
