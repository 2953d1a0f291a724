"""Skew spectra, skew energy and spectral-radius bounds of oriented graphs."""

from .bounds import (
    BoundsReport,
    average_degree_orientation,
    best_partition_bound,
    chromatic_bound,
    degree_sequence_bound,
    full_report,
    gamma_comparison,
    in_gamma,
    log_bound,
    max_cut_local,
    mc_classic,
    mc_improved,
    nonsingular_bound,
    optimum_upper,
    partition_bound,
    sqrt_delta_bound,
)
from .characterize import (
    CharacterizationResult,
    attains_sqrt_delta,
    characterize,
    has_i_sqrt_delta_eigenvalue,
    is_optimum_skew_energy,
    log_bound_equality_case,
    max_degree_orthogonality,
    regular_equivalence_check,
)
from .coloring import OrientedColoring, is_valid_oriented_coloring, oriented_chromatic_number
from .graph import (
    GraphError,
    OrientedGraph,
    UndirectedGraph,
    gamma,
    induced_suborientation,
    net_degrees,
    skew_adjacency,
    switch,
    switch_to_source,
)
from .io import ParseError, format_edge_list, parse_edge_list, parse_graph6, to_graph6
from .search import (
    SearchOutcome,
    enumerate_orientations,
    exhaustive_property_scan,
    find_orthogonality_counterexample,
    min_rho_orientation,
)
from .spectra import (
    ExactDeterminant,
    SkewSpectrum,
    adjacency_spectral_radius,
    exact_determinant,
    skew_energy,
    skew_spectral_radius,
    skew_spectrum,
    symmetric_eigenvalues,
)

__version__ = "0.1.0"
