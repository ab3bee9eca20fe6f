"""Cut complexes of graphs.

Constructions (cut, total-cut, clique, link, deletion, Alexander dual),
shellability certificates with spanning-facet extraction, an explicit
shelling order for 3-cut complexes of squared cycles with a three-way
spanning census, and exact simplicial homology over prime fields and the
rationals.
"""

from .cut3_shelling import (
    FacetSignature,
    SpanningCounts,
    VerificationReport,
    VertexOrder,
    compare_facets,
    compare_vertices,
    displaced_tag,
    facet_signature,
    shelling_order,
    spanning_count_formula,
    spanning_tag,
    verify_conjecture,
    vertex_order,
)
from .graphs import (
    EdgeListError,
    Graph,
    circulant,
    format_edge_list,
    from_edges,
    induced_subgraph,
    is_chordal,
    is_connected,
    parse_edge_list,
    squared_cycle,
)
from .homology import (
    GF2,
    GF3,
    GF5,
    RATIONALS,
    BettiVector,
    Field,
    betti,
    boundary_matrix,
    is_cohen_macaulay,
    is_p_acyclic,
    parse_field,
    rank_exact,
    rank_gf2,
    rank_mod_p,
)
from .simplicial import (
    BUDGET_EXCEEDED,
    FOUND,
    NON_SHELLABLE,
    FacetFileError,
    ShellingReport,
    ShellingSearch,
    SimplicialComplex,
    alexander_dual,
    clique_complex,
    cut_complex,
    deletion,
    export_complex,
    find_shelling,
    format_facet_file,
    from_facets,
    is_vertex_decomposable,
    link,
    minimal_nonfaces,
    parse_facet_file,
    spanning_facets,
    total_cut_complex,
    verify_shelling,
)

__version__ = "0.1.0"

__all__ = [
    "BUDGET_EXCEEDED",
    "BettiVector",
    "EdgeListError",
    "FOUND",
    "NON_SHELLABLE",
    "FacetFileError",
    "FacetSignature",
    "Field",
    "GF2",
    "GF3",
    "GF5",
    "Graph",
    "RATIONALS",
    "ShellingReport",
    "ShellingSearch",
    "SimplicialComplex",
    "SpanningCounts",
    "VerificationReport",
    "VertexOrder",
    "alexander_dual",
    "betti",
    "boundary_matrix",
    "circulant",
    "clique_complex",
    "compare_facets",
    "compare_vertices",
    "cut_complex",
    "deletion",
    "displaced_tag",
    "export_complex",
    "facet_signature",
    "find_shelling",
    "format_edge_list",
    "format_facet_file",
    "from_edges",
    "from_facets",
    "induced_subgraph",
    "is_chordal",
    "is_cohen_macaulay",
    "is_connected",
    "is_p_acyclic",
    "is_vertex_decomposable",
    "link",
    "minimal_nonfaces",
    "parse_edge_list",
    "parse_facet_file",
    "parse_field",
    "rank_exact",
    "rank_gf2",
    "rank_mod_p",
    "shelling_order",
    "spanning_count_formula",
    "spanning_facets",
    "spanning_tag",
    "squared_cycle",
    "total_cut_complex",
    "verify_conjecture",
    "verify_shelling",
    "vertex_order",
]
