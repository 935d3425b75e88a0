"""Graph construction and structural queries.

Exposes the immutable :class:`Graph` container, the family generators used
as portal page subjects, exact isomorphism testing, and the edge-list text
format that serves as the engine's universal import/export.
"""

from cgtportal.graphs.graph import (
    Graph,
    degrees,
    is_connected,
    is_k_regular,
    parse_edge_list,
    to_edge_list_text,
)
from cgtportal.graphs.families import (
    FAMILIES,
    FamilySpec,
    block_family,
    complete,
    complete_bipartite,
    cycle,
    extended_block_family,
    fibonacci_tree,
    g_family,
    gear,
    generate,
    hypercube,
    ladder,
    odd_graph,
    petersen,
    star,
    wheel,
)
from cgtportal.graphs.isomorphism import are_isomorphic, relabel

__all__ = [
    "FAMILIES",
    "FamilySpec",
    "Graph",
    "are_isomorphic",
    "block_family",
    "complete",
    "complete_bipartite",
    "cycle",
    "degrees",
    "extended_block_family",
    "fibonacci_tree",
    "g_family",
    "gear",
    "generate",
    "hypercube",
    "is_connected",
    "is_k_regular",
    "ladder",
    "odd_graph",
    "parse_edge_list",
    "petersen",
    "relabel",
    "star",
    "to_edge_list_text",
    "wheel",
]
