"""Outer multiset dimension of connected graphs: exact solver, dimension-2
recognition, product bounds and small-graph verification tools."""

from .dim2 import (
    Dim2Decision,
    FamilyFParams,
    LayerPartition,
    check_layer_lemma,
    decide_dim2,
    generate_family_F,
    has_adjacent_2_basis,
    layer_partition,
)
from .errors import OmdimError
from .families import (
    EmptyFactor,
    NamedFamily,
    cartesian_product,
    closed_form_dimension,
    generate,
    grid_certificate,
    lex_bound_and_equality,
    lexicographic_product,
)
from .graph import DistanceMatrix, Graph, TwinPartition, all_pairs_distances, build_graph, twin_classes
from .irregularity import (
    fixture_graph_X,
    is_multiset_distance_irregular,
    is_transmission_irregular,
    transmission_profile,
)
from .multiset import (
    DimensionResult,
    DistanceMultiset,
    is_outer_multiset_resolving,
    is_vector_resolving,
    multiset_representation,
    outer_multiset_dimension,
    twin_lower_bound,
)

__version__ = "0.1.0"
