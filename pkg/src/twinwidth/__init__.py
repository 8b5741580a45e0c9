"""Twin-width experimentation: trigraph contractions, sequence verification,
exact twin-width on small graphs, neighbourhood complexity, and the
lower-bound construction."""

from .contraction import (
    ContractionSequence,
    SequenceReport,
    greedy_sequence,
    partition_at_step,
    partition_trace,
    replay_and_verify,
)
from .exact import exact_tww, twin_width_at_most
from .lower_bound import (
    LbGraph,
    LbParameterError,
    LbParameters,
    LbReport,
    build_lb_graph,
    build_lb_schedule,
    build_lb_sequence,
    min_k,
    predicted_partition,
    verify_lb,
)
from .neighbourhoods import (
    NeighbourhoodProfile,
    TwinPairSet,
    check_upper_bound,
    dedupe_and_extend,
    distinct_x_neighbourhoods,
    min_twin_pair_vertex,
    nu_upper_bound,
    shatter_function,
    twin_pairs,
)
from .trigraph import EdgeKind, Trigraph, TrigraphError, merged_kind

__version__ = "0.1.0"
