"""Embedding graphs into products ``H x P`` of a tree-like host with a path.

The main entry points are :func:`embed_into` (exact search), the
caterpillar test :func:`decide_fast`, the graph transforms, and the two
reduction gadgets in :mod:`rowembed.logic_engine` and
:mod:`rowembed.partition`.
"""

from .caterpillar import (SpineProfile, construct_diagonal_embedding, decide_fast,
                          direct_condition_check, max_excess)
from .embedding import (Embedding, EmbeddingReport, Layering, OrientationConstraint,
                        layer_span, verify_embedding, verify_layering)
from .graph import (Graph, GraphBuilder, caterpillar_graph, complete_graph, cycle_graph,
                    is_bipartite, is_series_parallel, path_graph, read_edgelist,
                    recognize_caterpillar, star_graph, write_edgelist)
from .products import CARTESIAN, STRONG, HostSpec, build_product, product_edge_count
from .solver import (Outcome, SearchConfig, SearchResult, embed_into, king_embeddable,
                     row_param_one, row_treewidth_one)
from .transforms import leaf_pad, tv_gadget_transform, tv_witness_lift, universal_vertex
from .trees import enumerate_free_trees

__version__ = "0.1.0"

__all__ = [
    "CARTESIAN", "STRONG", "Embedding", "EmbeddingReport", "Graph", "GraphBuilder", "HostSpec",
    "Layering", "OrientationConstraint", "Outcome", "SearchConfig", "SearchResult",
    "SpineProfile", "build_product", "caterpillar_graph", "complete_graph",
    "construct_diagonal_embedding", "cycle_graph", "decide_fast", "direct_condition_check",
    "embed_into", "enumerate_free_trees", "is_bipartite", "is_series_parallel",
    "king_embeddable", "layer_span", "leaf_pad", "max_excess", "path_graph",
    "product_edge_count", "read_edgelist", "recognize_caterpillar", "row_param_one",
    "row_treewidth_one", "star_graph", "tv_gadget_transform", "tv_witness_lift",
    "universal_vertex", "verify_embedding", "verify_layering", "write_edgelist",
]
