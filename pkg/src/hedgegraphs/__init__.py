"""Hedgegraph connectivity toolkit.

Data model and cuts (model), brute-force reference oracles (oracle),
submodular minimization and ratio minimization (sfm), the trimming matroid
(matroid), connectivity measures and orientations (measures), and the
randomized components (stochastic).
"""

__version__ = "0.1.0"

from ._kernels import KERNEL_NAME
from .errors import (
    HedgegraphError,
    InfeasibleError,
    LimitExceededError,
    ParseError,
)
from .model import (
    Hedge,
    Hedgegraph,
    Partition,
    components,
    cut_hedges,
    cut_value,
    internal_hedges,
    is_closed,
    normalize_hedge,
    parse_hedgegraph,
    partition_boundary,
    partition_capacity,
    polymatroid_f,
    serialize_hedgegraph,
    span,
    wpc_term,
)
from .oracle import (
    OracleLimits,
    default_limits,
    enumerate_quotients,
    exact_connectivity,
    exact_kappa,
    exact_kstar,
    exact_pc,
    exact_rank,
    exact_wpc,
    set_partitions,
)
from .sfm import (
    RatioResult,
    SfmResult,
    SubmodularOracle,
    hedgegraph_min_ratio,
    matroid_independence_via_sfm,
    min_ratio,
    minimize_submodular,
)
from .matroid import (
    CoverResult,
    HedgeMatroid,
    PackingResult,
    TrimElement,
    cover_acyclic_trimmable,
    is_independent,
    min_cover_number,
    pack_bases,
    rank,
    spanning_tree_trimming,
)
from .measures import (
    MeasureReport,
    Orientation,
    approx_connectivity,
    kstar_approx,
    orient,
    partition_connectivity,
    verify_orientation,
    weak_partition_connectivity,
)
from .stochastic import (
    ExperimentReport,
    SparsifierResult,
    base_sampling_experiment,
    connectivity_sampling_experiment,
    count_small_quotients,
    hedge_strengths,
    sample_subhedgegraph,
    sparsify_partitions,
    verify_sparsifier,
)
