"""wheelkit: wheels, cycles through three vertices, connectivity
structure and constructive colorings of wheel-free graphs."""
from .coloring import Coloring, color3, color4_long, verify_coloring
from .connectivity import (
    Extension, Fragment, essential_edges, extend_2cut_block, extend_3sep,
    fragments_and_ends, is_minimally_3_connected, kappa,
)
from .cycle3 import Splitter, cycle_or_splitter, verify_cycle_through, verify_splitter
from .errors import (
    BudgetExceeded, InvariantViolation, NotWheelFreeError, ParseError,
    SeparatorExists, StructuralError, WheelkitError,
)
from .graph import Graph, blocks, is_biconnected, parse_graph, parse_labeled, write_graph
from .menger import cycle_or_theta, cycle_through_fan, k_fan, two_disjoint_paths
from .structure import (
    ReductionOutcome, TwinPair, close_to_twin, disjoint_twin_pairs, reduction_step,
    twin_pairs, verify_outcome,
)
from .verdict import Verdict, Violation
from .wheels import (
    Classification, Kind, WheelWitness, classify, find_hub, find_long_wheel,
    find_wheel, verify_wheel, wheel_centers,
)
from .zoo import fixture, make_wheel_free, random_graph

__version__ = "0.1.0"
