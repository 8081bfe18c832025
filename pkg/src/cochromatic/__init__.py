"""Exact chromatic and cochromatic numbers, and a machine-checked family of
graphs with clique number 4, cochromatic number 4 and chromatic number 7."""

from .graph import (
    Graph,
    add_vertex,
    complement,
    complete,
    complete_bipartite,
    cycle,
    empty,
    induced_subgraph,
    join,
    members,
    sample_gnp,
    vset,
)
from .io import FormatError, parse_dimacs, parse_graph6, write_dimacs, write_graph6
from .solvers import (
    Budget,
    Coloring,
    HomogeneousPartition,
    SolveResult,
    chromatic_number,
    clique_number,
    cochromatic_number,
    enumerate_proper_colorings,
    independence_number,
    verify_coloring,
    verify_homogeneous_partition,
)

__version__ = "0.1.0"
