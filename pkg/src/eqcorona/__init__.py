"""Equitable colorings of coronas of cubic graphs.

Constructions that use at most one color more than the optimum, exact search
oracles to certify them, classification of cubic factors, and generators for
the reduction gadgets linking equitable 4-colorability to independent sets.
"""

from .classify import CubicClass, classify, is_cubic
from .coloring import Coloring, ColorSequence, VerifyResult, relabel_by_class_size, verify
from .corona_coloring import (ColoringReport, RecolorPlan, color3,
                              color4_centerK4_outerQ3, color4_outerQ2,
                              color45_bothQ3, color45_centerQ2,
                              color_outer_complete, equitable_color_corona,
                              resolve_exact)
from .errors import (BudgetExceeded, GraphInputError, RecolorInfeasibleError,
                     RuleNotApplicable)
from .gadgets import (DecisionInstance, EquivalenceReport, ReductionInstance,
                      alpha_type_equivalence_check, build_decision_instance,
                      color_from_type, coloring_of_type, pad_mod10,
                      reduce_to_balanced_threshold)
from .graphs import (CoronaLayout, Graph, bipartition, center_subgraph,
                     complete_bipartite, complete_graph, connected_components,
                     corona, cycle_graph, disjoint_union, is_connected,
                     named_graph, random_connected_cubic, random_cubic,
                     triangle_tower)
from .io import (emit_dot, emit_edge_list, emit_graph6, emit_report,
                 parse_edge_list, parse_graph6)
from .oracles import (DEFAULT_NODE_BUDGET, IndependentSetResult, OracleResult,
                      chromatic_number, colorable_with_class_sizes,
                      corona_equitable4, corona_equitable_chromatic_number,
                      corona_equitable_k, equitable_chromatic_number,
                      equitable_k_colorable, k_colorable, max_independent_set)

__all__ = [name for name in dir() if not name.startswith("_")]
