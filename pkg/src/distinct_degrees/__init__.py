"""Degree diversity of induced subgraphs: exact oracles, randomized witnesses
and verification campaigns for the distinct-degree versus homogeneous-set
trade-off."""

from .errors import (
    CapabilityExceeded,
    EdgeListError,
    InvalidPairError,
    InvalidSpecError,
    InvalidSubsetError,
    InvalidVertexError,
)
from .graph_core import Graph, VertexSet, complement, degree_in, induced, nbhd_distance
from .homogeneous import (
    HomWitness,
    caro_wei_greedy,
    caro_wei_sum,
    hom,
    max_clique,
    max_independent_set,
)
from .degree_diversity import (
    DegreeClasses,
    DiversityWitness,
    degree_classes,
    dhat,
    f_exact,
    randomized_witness,
    theorem1_bound,
)
from .constructions import FamilySpec, disjoint_cliques, example3, random_graph

__version__ = "0.1.0"

__all__ = [
    "CapabilityExceeded",
    "DegreeClasses",
    "DiversityWitness",
    "EdgeListError",
    "FamilySpec",
    "Graph",
    "HomWitness",
    "InvalidPairError",
    "InvalidSpecError",
    "InvalidSubsetError",
    "InvalidVertexError",
    "VertexSet",
    "caro_wei_greedy",
    "caro_wei_sum",
    "complement",
    "degree_classes",
    "degree_in",
    "dhat",
    "disjoint_cliques",
    "example3",
    "f_exact",
    "hom",
    "induced",
    "max_clique",
    "max_independent_set",
    "nbhd_distance",
    "random_graph",
    "randomized_witness",
    "theorem1_bound",
]
