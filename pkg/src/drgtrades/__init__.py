"""Exact construction and verification of clique bitrades in
distance-regular graphs: graph families, Delsarte clique systems,
eigenfunction and weight-distribution machinery, and minimum-bitrade
constructors, all in exact arithmetic."""

from .errors import (
    AmbientMismatch,
    CliqueSearchTooLarge,
    CliquesNotDelsarte,
    CrossCheckViolation,
    DegenerateEmpty,
    Disconnected,
    EnumerationTooLarge,
    NonIntegerSpectrum,
    NotAnEigenvalue,
    NotCompletelyRegular,
    NotDistanceRegular,
    UnsupportedFieldOrder,
    ZeroFunction,
)
from .gfq import (
    FFMatrix,
    FieldSpec,
    QuadraticForm,
    Subspace,
    enumerate_subspaces,
    gaussian_binomial,
    hyperbolic_form,
    intersection_dim,
    is_totally_isotropic,
    isotropic_count_product,
    isotropic_count_sum,
    make_field,
    rref,
)
from .graphs import (
    CliqueSystem,
    Graph,
    IntersectionArray,
    Verdict,
    bfs_distances,
    completely_regular_check,
    distance_regularity_check,
    graph_to_json,
    induced_subgraph,
    is_bipartite,
    is_isometric_subgraph,
    is_regular,
    max_clique_order,
    verify_clique_system,
)
from .spectral import (
    VertexFunction,
    WeightDistribution,
    clique_sum_characterization,
    delta_function,
    intersection_matrix_eigenvalues,
    radius_one_cr_characterization,
    standard_eigenvector,
    theta_min,
    verify_eigenfunction,
    wd_bound,
    wd_coefficients,
    weight_distribution_of,
)
from .families import (
    FAMILIES,
    build_doob,
    build_dual_polar_D,
    build_family,
    build_grassmann,
    build_halved_cube,
    build_hamming,
    build_johnson,
    build_octahedron,
    build_shrikhande,
    family_array,
    parse_family,
)
from .bitrades import (
    Bitrade,
    VerificationReport,
    bitrade_from_json,
    bitrade_to_json,
    check_clique_design,
    check_criterion_a,
    check_criterion_b,
    check_criterion_c,
    check_minimality,
    check_subgraph_dr,
    corrupt_one_vertex,
    design_difference,
    min_bitrade_grassmann,
    min_bitrade_halved_cube,
    min_bitrade_hamming,
    min_bitrade_johnson,
    min_bitrade_octahedron,
    pseudo_bitrade_doob,
    verify_bitrade,
    verify_delsarte_pair,
)

__all__ = [name for name in dir() if not name.startswith("_")]
