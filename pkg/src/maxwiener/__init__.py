"""Maximum Wiener index of trees with a prescribed degree sequence."""

__version__ = "0.1.0"

from .audit import AuditRecord, AuditReport, audit_sweep, exhaustive_tree_check, exhaustive_tree_max, reproduce_example_1_3
from .bounds import BoundReport, spectral_radius_C, upper_bound
from .caterpillar import (
    build_caterpillar,
    canonicalize,
    caterpillar_wiener,
    f_value,
    find_pivot,
    is_valley,
    lemma34_deltas,
    swap_delta,
)
from .errors import (
    InstanceTooLarge,
    InvalidTree,
    MaxWienerError,
    NoConvergence,
    NotTreeGraphic,
    TooSmall,
    UnsupportedK,
    WienerOverflow,
)
from .graph import DegreeSequence, Tree, validate_degree_sequence, wiener_edgecut, wiener_pairwise
from .solvers import (
    MaxResult,
    brute_force_max,
    closed_form_max,
    greedy_caterpillar,
    k6_candidates,
    solve,
    valley_max,
)
