"""Signed graph homomorphisms, switching, and bounded-degree embeddings."""

from .embed import (
    AugmentedTarget,
    EmbeddingError,
    embed_with_regular_fix,
    end_to_end,
    greedy_embed,
)
from .formats import emit_signed_graph, parse_signed_graph
from .generate import random_bounded_degree_graph
from .graph import (
    NEG,
    POS,
    GraphError,
    SignedGraph,
    common_signed_neighborhood,
    degeneracy_ordering,
    graph_stats,
    signed_neighbors,
    switch,
    switching_equivalent,
)
from .hom import (
    ChromaticWitness,
    SignedHom,
    check_2ec_hom,
    check_signed_hom,
    exhaustive_hom_oracle,
    find_signed_hom,
    signed_chromatic_number,
    two_ec_chromatic_number,
)
from .target import (
    PropertyReport,
    TargetCertificate,
    bad_event_bound,
    bound_summand_f,
    construct_target,
    has_property_P,
    lemma1_order,
    monte_carlo_property_rate,
    random_signed_complete,
    theorem_bounds,
)

__version__ = "0.1.0"
