"""Construction rounds: subdivision and pasting."""
from hiercomplex.construction.subdivision import (
    Subdivider,
    is_subdivision_rotation,
    subdivide_round,
    subdivide_tile,
    validate_rule_table,
)
from hiercomplex.construction.numbering import (
    incoming_edge_order,
    incoming_macro_edges,
    incoming_rank,
)
from hiercomplex.construction.pasting import (
    apply_pasting,
    check_pasting_site,
    entry_edges,
    enumerate_pasting_sites,
    in_base_plane,
    pasting_round,
)

__all__ = [
    "Subdivider",
    "is_subdivision_rotation",
    "subdivide_round",
    "subdivide_tile",
    "validate_rule_table",
    "incoming_edge_order",
    "incoming_macro_edges",
    "incoming_rank",
    "apply_pasting",
    "check_pasting_site",
    "entry_edges",
    "enumerate_pasting_sites",
    "in_base_plane",
    "pasting_round",
]
