"""Strong edge colouring of subcubic graphs: exact solvers, list-colouring
constructions, Hall/SDR tools and Nullstellensatz coefficient checks."""

from .coloring import (
    available_colors,
    construct_coloring,
    exact_list_color,
    greedy_far_to_near,
    random_lists,
    strong_chromatic_index,
    strong_list_color_10_planar,
    strong_list_color_11,
    uniform_lists,
    verify,
)
from .errors import BudgetExhausted, InternalInvariantError, ParseError, PreconditionError, PremiseViolated
from .generators import builtin_embeddings, builtin_graph, generate
from .graph import (
    Graph,
    PlanarEmbedding,
    edge_distance_order,
    euler_discharge,
    find_short_cycle,
    girth,
    parse_graph,
    see_relation,
)
from .hall import extendable, find_sdr
from .nullstellensatz import cn_certificate, coefficient, lemma_c5_factors
from .precoloring import choose_precoloring
from .reducibility import build_configuration, residual_bounds, stress_test, validate_plan

__version__ = "0.1.0"

__all__ = [
    "BudgetExhausted",
    "Graph",
    "InternalInvariantError",
    "ParseError",
    "PlanarEmbedding",
    "PreconditionError",
    "PremiseViolated",
    "available_colors",
    "build_configuration",
    "builtin_embeddings",
    "builtin_graph",
    "choose_precoloring",
    "cn_certificate",
    "coefficient",
    "construct_coloring",
    "edge_distance_order",
    "euler_discharge",
    "exact_list_color",
    "extendable",
    "find_sdr",
    "find_short_cycle",
    "generate",
    "girth",
    "greedy_far_to_near",
    "lemma_c5_factors",
    "parse_graph",
    "random_lists",
    "residual_bounds",
    "see_relation",
    "strong_chromatic_index",
    "strong_list_color_10_planar",
    "strong_list_color_11",
    "stress_test",
    "uniform_lists",
    "validate_plan",
    "verify",
]
