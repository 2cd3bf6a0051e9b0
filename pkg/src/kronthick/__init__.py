"""Planar decompositions and thickness bounds for Kronecker product graphs."""

from .bounds import (
    BoundReport,
    g_times_k2_bounds,
    product_lower_bound,
    product_upper_bound,
    theta_kmn_times_kpq,
    theta_kn_times_k2,
    theta_knn,
    theta_knnn_times_k2,
    thickness_lower_bound,
    tripartite_times_k2_bounds,
)
from .constructions import (
    Decomposition,
    MinimalBipartiteDecomposition,
    chen_yin_k4p4p,
    kn_times_k2_decomposition,
    knnn_times_k2_decomposition,
    knnn_times_k2_fixture,
    knnn_times_k2_n0mod4,
    knnn_times_k2_n1mod4,
    lemma46_assemble,
    oracle_seed_provider,
    relabel_bipartite_part,
    restrict_decomposition,
)
from .errors import (
    ConstructionConflictError,
    DocumentFormatError,
    FixtureIntegrityError,
    InvalidSizeError,
    KronthickError,
    MissingEdgeError,
    PreconditionError,
    SeedInvalidError,
    SeedRequiredError,
    StructuralViolationError,
    VerificationFailedError,
)
from .graphs import (
    Family,
    Graph,
    ProductVertex,
    VertexLabel,
    components,
    edge,
    graph_union,
    identify_complete_bipartite,
    induced_subgraph,
    is_triangle_free,
    make_complete,
    make_complete_bipartite,
    make_complete_tripartite,
    make_cycle,
    make_path,
    remove_edges,
)
from .oracle import (
    OracleResult,
    SearchBudget,
    exact_thickness,
    find_planar_partition,
)
from .planarity import Embedding, PlanarityVerdict, euler_max_edges, is_planar
from .products import bipartite_factor_split, kronecker_product, times_k2
from .verification import (
    NOT_CERTIFIED,
    OPTIMAL,
    UPPER_BOUND_ONLY,
    VerificationReport,
    certify_optimal,
    verify_decomposition,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "ConstructionConflictError",
    "Decomposition",
    "DocumentFormatError",
    "Embedding",
    "Family",
    "FixtureIntegrityError",
    "Graph",
    "InvalidSizeError",
    "KronthickError",
    "MinimalBipartiteDecomposition",
    "MissingEdgeError",
    "NOT_CERTIFIED",
    "OPTIMAL",
    "OracleResult",
    "PlanarityVerdict",
    "PreconditionError",
    "ProductVertex",
    "SearchBudget",
    "SeedInvalidError",
    "SeedRequiredError",
    "StructuralViolationError",
    "UPPER_BOUND_ONLY",
    "VerificationFailedError",
    "VerificationReport",
    "VertexLabel",
    "bipartite_factor_split",
    "certify_optimal",
    "chen_yin_k4p4p",
    "components",
    "edge",
    "euler_max_edges",
    "exact_thickness",
    "find_planar_partition",
    "g_times_k2_bounds",
    "graph_union",
    "identify_complete_bipartite",
    "induced_subgraph",
    "is_planar",
    "is_triangle_free",
    "kn_times_k2_decomposition",
    "knnn_times_k2_decomposition",
    "knnn_times_k2_fixture",
    "knnn_times_k2_n0mod4",
    "knnn_times_k2_n1mod4",
    "kronecker_product",
    "lemma46_assemble",
    "make_complete",
    "make_complete_bipartite",
    "make_complete_tripartite",
    "make_cycle",
    "make_path",
    "oracle_seed_provider",
    "product_lower_bound",
    "product_upper_bound",
    "relabel_bipartite_part",
    "remove_edges",
    "restrict_decomposition",
    "theta_kmn_times_kpq",
    "theta_kn_times_k2",
    "theta_knn",
    "theta_knnn_times_k2",
    "thickness_lower_bound",
    "times_k2",
    "tripartite_times_k2_bounds",
    "verify_decomposition",
]
