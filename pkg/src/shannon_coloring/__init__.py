"""Multigraph edge coloring with augmenting fan-and-path chains.

Solvers for floor(3*Delta/2) colors (deterministic batches, randomized
multi-step chains, a simulated LOCAL algorithm) and for Delta+mu colors,
plus independent verification helpers.
"""

from .chain_builders import ShannonChain, first_chain, next_chain, shannon_chain
from .chains import Fan, PathChain, augment, bicolored_path, is_shiftable, shift, unshift
from .coloring import BLANK, PartialColoring, blank_coloring, is_happy, is_proper, missing_set
from .deterministic import augment_chain_set, color_deterministic, gamma_partition
from .errors import (
    ColoringError,
    GraphFormatError,
    ImproperColoring,
    InfeasibleParameters,
    InvariantError,
    NotHappy,
    PreconditionError,
    StageStarvation,
)
from .local_sim import color_distributed, conflict_graph, random_independent_set, stage
from .mssa import ExecutionRecord, MssaResult, color_sequential_random, mssa
from .multigraph import Multigraph, parse_graph, random_multigraph, serialize_graph, shannon_extremal
from .shannon_fans import first_shannon_fan, next_shannon_fan
from .verify import brute_force_chromatic_index, validate_multistep_chain, verify
from .vizing import color_vizing, first_vizing_fan, next_vizing_fan, vizing_chain

__version__ = "0.1.0"
