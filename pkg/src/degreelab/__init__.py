"""Degree-sequence analysis and random-graph simulation toolkit."""

from .degseq import (
    Classification,
    DegreeSequence,
    InvariantReport,
    check_claim0,
    classify,
    invariants,
    is_feasible,
    parse_sequence,
    r_lower_bound_check,
)
from .graphgen import (
    OrientedEdgePair,
    SimpleGraph,
    count_disconnecting_switch_pairs,
    default_burn_in,
    havel_hakimi,
    sample_configuration_rejection,
    sample_graph,
    sample_switch_mcmc,
    switch,
)
from .kernel import (
    ComponentStats,
    KernelEdge,
    KernelMultigraph,
    build_kernel,
    component_stats,
    extended_switch,
    subdivide,
)
from .explore import ExplorationTrace, TraceStep, explore, priming_set
from .cyclestats import (
    CycleCountTable,
    c_table,
    longest_cycle_tail,
    p_cycle,
    q_distribution,
    sample_2regular,
)
from .powerlaw import ACLParams, acl_sequence, beta0, zeta
from .experiments import (
    ExperimentSpec,
    TrialReport,
    run_all2_experiment,
    run_experiment,
    run_powerlaw_sweep,
)
from .rng import rng_stream

__version__ = "0.1.0"
