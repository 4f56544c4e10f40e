"""Graphviz DOT export, one undirected graph per plane."""
from typing import List, Optional, Sequence

from hiercomplex.core.errors import UnknownPlaneError
from hiercomplex.core.model import Complex


def plane_graph(complex_: Complex, plane_id: int) -> List[str]:
    """DOT lines for one plane; nodes and edges in ascending id order."""
    if plane_id not in complex_.planes:
        raise UnknownPlaneError(plane_id)
    edges = sorted(tuple(sorted(e)) for e in complex_.plane_edges(plane_id))
    nodes = sorted({v for e in edges for v in e})
    lines = [f"graph plane_{plane_id} {{"]
    for v in nodes:
        vertex = complex_.vertices[v]
        x, y = vertex.pos
        lines.append(
            f'  {v} [label="{vertex.kind.code} d{vertex.depth}", pos="{x:g},{y:g}!"];'
        )
    for a, b in edges:
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return lines


def export_dot(complex_: Complex, planes: Optional[Sequence[int]] = None) -> str:
    """
    DOT text for the selected planes, or for every plane when ``planes`` is empty.

    Raises:
        UnknownPlaneError: If a selected plane does not exist
    """
    selected = sorted(set(planes)) if planes else sorted(complex_.planes)
    lines: List[str] = []
    for plane_id in selected:
        lines.extend(plane_graph(complex_, plane_id))
    return "\n".join(lines) + "\n"
