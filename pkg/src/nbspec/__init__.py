"""Centered non-backtracking spectra and goodness-of-fit tests for the
number of communities in block-model graphs."""

from .errors import (
    ContractError,
    ConvergenceError,
    NbspecError,
    ParameterError,
    ParseError,
    ResourceError,
)
from .rng import RngSeed, derive_master, node_set_master, stream
from .graphs import (
    BlockModelSpec,
    Graph,
    ReadReport,
    build_q_delta,
    degrees,
    largest_connected_component,
    read_edge_list,
    sample_er,
    sample_sbm,
    write_edge_list,
)
from .operators import (
    ModelEstimate,
    bethe_hessian,
    bh_r_a,
    bh_r_m,
    centered_adjacency,
    centered_edge_matrix,
    centered_nb_operator,
    edge_nb_matrix,
    nb_operator,
    normalized_adjacency,
    rescaled_split,
)
from .eig import (
    EigOptions,
    Spectrum,
    eig_dense_sym,
    eig_leading,
    eigh_leading,
    eigh_smallest,
    leading_halfvector,
)
from .tw1 import ks_distance_to_tw1, tw1_cdf, tw1_quantile
from .stats import (
    ApproxGap,
    NullDistribution,
    TestOutcome,
    TestStatKind,
    bootstrap_null,
    compute_statistic,
    gof_test,
    likelihood_ratio,
    simulate_null,
    triangle_statistic,
    v1_d_v1,
    y1hx1_gap,
)
from .estimate import (
    BlockSpectrum,
    DendroNode,
    Labels,
    RecursiveConfig,
    SequentialConfig,
    SequentialResult,
    block_matrix_eigs,
    count_nb_informative,
    estimate_blocks,
    estimate_k_recursive,
    estimate_k_sequential,
    estimate_p,
    expectation_eigs_closed_form,
    fit_model,
    label_correlation,
    spectral_labels,
)
from .harness import (
    SweepConfig,
    run_approx_gap,
    run_clustering_corr,
    run_null_scaling,
    run_power_sweep,
    run_vdv_growth,
    write_csv,
)

__version__ = "0.1.0"
