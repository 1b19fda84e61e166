"""Certifiers for Shearer's condition and the cluster-expansion condition of
the local lemma, with finite probability spaces as exact oracles."""

from .cluster import (Certificate, ClusterReport, IndependencePolynomial, WeightVector,
                      check_cluster, cluster_bound, find_y, independence_polynomial,
                      verify_cluster_vs_shearer, y_table)
from .graph import (Graph, GraphFormatError, closed_neighborhood, complete_graph, cycle_graph,
                    empty_graph, enumerate_independent_subsets, external, induced_components,
                    is_independent, load_graph, members, parse_graph, path_graph,
                    petersen_graph, random_graph, random_tree, vset)
from .numeric import EXACT, FLOAT, NumericPolicy, parse_scalar, parse_vector, sign
from .oracle import (BoundReport, FiniteSpace, LopsidedReport, ShearerViolation,
                     UndefinedConditional, check_lopsided_condition, conditional_prob,
                     none_table, prob_event, prob_none, random_product_space, tight_instance,
                     verify_bound, verify_cluster_chain, verify_fundamental_inequality,
                     verify_shearer_chain)
from .shearer import (ProbVector, ShearerReport, breve_q_table, check_shearer, q_table,
                      verify_q_breveq_relation)
from .symmetric import (ThresholdSet, check_symm_inequality, symm_inequality_margin,
                        symmetric_certificate, symmetric_thresholds)
from .tables import CoefficientTable, ResourceLimitError, TABLE_CAP

__version__ = "0.1.0"
