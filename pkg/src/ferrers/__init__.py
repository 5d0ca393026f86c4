"""Pattern containment for integer partitions.

Core objects: `Partition` (a Ferrers board), truncated q-series with exact
integer coefficients, value-interval profiles with their splicing closures,
staircases with their marked-partition and augmented-structure encodings,
and rook/Wilf equivalence decisions.  The `service` subpackage wraps the
same operations in a FastAPI application; `cli` exposes them as a command
line that calls the service handlers in process.
"""

from .errors import BudgetExceededError, SpliceError, TransformError
from .partitions import (
    Partition,
    contains,
    contains_oracle,
    contains_rows_only,
    count_containing,
    enumerate_bounded,
    enumerate_partitions,
    q_membership,
)
from .profiles import (
    INF,
    BipartiteGraph,
    Interval,
    ProfileClass,
    class_alternating_sum,
    class_graph,
    class_reps,
    closure,
    join,
    minimal_sets,
    p_interval,
    profile,
    profile_class_of,
    profile_equivalent,
    sigma_selector,
    splice,
    vee,
)
from .series import (
    TruncatedSeries,
    euler_inverse,
    f_mu_k_closed,
    f_mu_k_enumerated,
    q_gf,
    wilf_series,
)
from .staircases import (
    AugmentedStructure,
    MarkedPartition,
    Staircase,
    as_staircase,
    augmented_to_marked,
    enumerate_augmented,
    enumerate_marked,
    enumerate_staircases,
    marked_to_augmented,
    marked_to_stair,
    stair_to_marked,
    vee_staircase,
)
from .equivalence import (
    TransformStep,
    ij_transform,
    rook_classes,
    rook_equivalent,
    rook_multiset,
    rook_numbers,
    transform_chain,
    width_wilf_equivalent_upto,
    wilf_equivalent_upto,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
