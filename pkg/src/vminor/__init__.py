"""Local complementation, vertex-minors, cut-rank and homogeneous pairs on small graphs."""

from vminor.cutrank import CutProfile, best_balanced_lowrank_pair, cross_twin_blocks, cut_rank
from vminor.graph import (
    Graph,
    GraphError,
    build_graph,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_isomorphic,
    path_graph,
    subdivide,
)
from vminor.graph6 import Graph6Error, parse_graph6, write_graph6
from vminor.harness import (
    DichotomyFinding,
    EpsilonReport,
    degree_dichotomy,
    enumerate_graphs,
    epsilon_scan,
    filter_h_free,
)
from vminor.localcomp import (
    LCOrbit,
    Step,
    apply_lc_sequence,
    lc_orbit,
    local_complement,
    smooth_maximally,
    smooth_step,
)
from vminor.pairs import (
    HomogeneousPair,
    alpha,
    is_anticomplete_pair,
    is_complete_pair,
    max_balanced_homogeneous_pair,
    omega,
)
from vminor.vertexminor import Undecided, Witness, is_vertex_minor, parse_witness, verify_witness

__version__ = "0.1.0"
