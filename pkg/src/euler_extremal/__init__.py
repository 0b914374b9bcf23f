"""Exact feedback arc sets, girth, dense subgraphs and long cycles in Eulerian digraphs."""

from .cycles import (
    Cycle,
    CycleCollection,
    DfsTree,
    cycles_through_vertex,
    dfs_tree,
    girth,
    girth_bound_check,
    long_cycle,
    long_cycle_combined,
    long_cycle_guarantee,
    maximal_path_cycle,
    min_degree_eulerian_subgraph,
    peel_short_cycles,
    prop9_priority,
)
from .fas import (
    FasResult,
    OrderDiagnostics,
    VertexOrder,
    backward_arcs,
    beta_lower_bound,
    exact_beta,
    f_min,
    f_min_oracle,
    f_objective,
    order_diagnostics,
)
from .generators import (
    BlowupSpec,
    blowup,
    cayley_circulant,
    dfs_counterexample,
    gadget_hst,
    random_eulerian,
)
from .graph import (
    Digraph,
    GraphError,
    cut_balance,
    delete_arcs,
    delete_vertex,
    is_eulerian,
    min_out_degree,
    min_positive_out_degree,
    new_digraph,
    remove_two_cycles,
)
from .reports import BoundReport

__version__ = "0.1.0"
