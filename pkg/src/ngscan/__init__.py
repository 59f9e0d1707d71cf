"""Exact verification of complement-pair (Nordhaus-Gaddum-type) bounds on the
isoperimetric number, Cheeger constant and normalized-Laplacian lambda_2."""

from .cuts import (
    CutWitness,
    ExactRatio,
    cheeger_constant,
    cheeger_ratio,
    isoperimetric_number,
    isoperimetric_ratio,
    max_pair_cheeger,
    max_pair_isoperimetric,
)
from .enumeration import (
    GraphStream,
    complement_pair_representatives,
    filter_k_regular,
    ingest_graph6,
    labeled_graphs,
)
from .graphs import (
    Graph,
    GraphError,
    Graph6Error,
    boundary_size,
    canonical_form,
    complement,
    complete,
    components,
    cycle,
    disjoint_union,
    dominating_vertices,
    empty,
    encode_graph6,
    is_bipartite,
    is_connected,
    is_k_regular,
    join,
    join_vertex_two_cliques,
    parse_graph6,
    path,
    volume,
)
from .spectra import (
    SpectralSummary,
    combinatorial_laplacian,
    complement_mu_identity_check,
    eigenvalues,
    join_regular_spectrum_oracle,
    lambda2,
    mu2,
    normalized_laplacian,
)
from .verify import (
    ScanRecord,
    SuiteReport,
    run_suites,
    scan_records,
    suite_cheeger,
    suite_cheeger_characterization,
    suite_conjecture_max,
    suite_conjecture_sum_connected,
    suite_disconnected_lemma,
    suite_isoperimetric,
    suite_join_spectrum,
    suite_lambda2,
    suite_regular_sum,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
