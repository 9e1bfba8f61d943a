"""Dominance complexes of graphs, their Alexander duals and bipartite doubles, reduced Z2
homology, and executable checks of the bound conn_Z2(D(G)) + 2 <= tau(G)."""

from .errors import ContractError, EmbeddingError, ParseError
from .graph import (Graph, closed_neighborhood, encode_graph6, generate, is_dominating,
                    max_independent_set, parse_edge_list, parse_graph6, vertex_cover_number)
from .homology import BettiProfile, GF2Matrix, boundary_matrix, conn_z2, hdim_z2, rank_gf2, reduced_betti
from .hypergraph import (Hypergraph, associated_bipartite, bowtie, bowtie_involution,
                         dominance_hypergraph, is_independent, is_transversal, minimal_edges)
from .simplicial import (SimplicialComplex, SimplicialVertexMap, alexander_dual,
                         cross_polytope_boundary, dominance_complex, f_vector,
                         independence_complex_graph, independence_complex_hyper, is_free_involution,
                         lemma7_embedding, minimal_nonfaces, suspension)
from .verify import (VerificationReport, Verdict, check_alexander_duality, check_bowtie_chain,
                     check_free_action, check_known_types, check_lemma7_embedding,
                     check_main_theorem, check_nagel_reiner, check_not_contractible, run_corpus)

__version__ = "0.1.0"
