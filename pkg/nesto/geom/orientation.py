import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
import numpy as np

from ..complex.simplicial import Design, face_key, face_label
from ..core.building_set import BuildingSet
from ..core.graphs import complete_building_set, is_undirected_graphical
from ..counting.report import IdentityReport
from ..errors import NonGenericCost
from ..orders.flip_poset import adjacent_pairs, flip_poset, maximal_collections
from ..orders.poset import Poset
from .coords import (
    VertexCoordinates,
    coordinate_matrix,
    coordinate_table,
    extended_vertex_coords,
    nestohedron_vertex_coords,
)
from .stellar import stellar_matches_nested

logger = logging.getLogger(__name__)


def default_cost(n: int, extended: bool = True) -> np.ndarray:
    """(-n, ..., -1) for P□(b), (n, ..., 1) for P(b)."""
    if extended:
        return np.arange(-n, 0, dtype=np.int64)
    return np.arange(n, 0, -1, dtype=np.int64)


@dataclass
class CostOrientation:
    """The dual graph of the facets, each edge pointing towards larger c·v."""

    graph: nx.DiGraph
    values: dict[frozenset, int]

    @property
    def is_acyclic(self) -> bool:
        return nx.is_directed_acyclic_graph(self.graph)

    @property
    def sources(self) -> list[frozenset]:
        return sorted((v for v, d in self.graph.in_degree() if d == 0), key=face_key)

    @property
    def sinks(self) -> list[frozenset]:
        return sorted((v for v, d in self.graph.out_degree() if d == 0), key=face_key)

    def as_poset(self) -> Poset:
        return Poset.from_edges(sorted(self.graph.nodes, key=face_key), self.graph.edges)

    def to_dot(self, name: str = "orientation") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for v in sorted(self.graph.nodes, key=face_key):
            lines.append(f'  "{face_label(v)}" [label="{face_label(v)}\\n{self.values[v]}"];')
        for a, b in sorted(self.graph.edges, key=lambda e: (face_key(e[0]), face_key(e[1]))):
            lines.append(f'  "{face_label(a)}" -> "{face_label(b)}";')
        lines.append("}")
        return "\n".join(lines)


def _coords(b: BuildingSet, collection: frozenset, extended: bool) -> VertexCoordinates:
    if extended:
        return extended_vertex_coords(b, collection)
    return nestohedron_vertex_coords(b, collection - set(b.maxima))


def cost_orientation(b: BuildingSet, c: Optional[Sequence[int]] = None, extended: bool = True) -> CostOrientation:
    """Orient flips between adjacent maximal collections by increasing c·v.

    Only ties between adjacent collections raise NonGenericCost; other ties do not
    affect the orientation.
    """
    c = default_cost(b.n, extended) if c is None else np.asarray(c, dtype=np.int64)
    if c.shape != (b.n,):
        raise ValueError(f"cost vector needs {b.n} entries, got {c.shape[0] if c.ndim else 0}")
    collections = maximal_collections(b, extended)
    matrix = coordinate_matrix([_coords(b, f, extended) for f in collections])
    values = {f: int(v) for f, v in zip(collections, matrix @ c)}

    graph = nx.DiGraph()
    graph.add_nodes_from(collections)
    fixed = frozenset() if extended else frozenset(b.maxima)
    for first, second in adjacent_pairs(collections, fixed):
        if values[first] == values[second]:
            raise NonGenericCost(face_label(first), face_label(second), values[first])
        if values[first] < values[second]:
            graph.add_edge(first, second)
        else:
            graph.add_edge(second, first)
    logger.debug(f"oriented {graph.number_of_edges()} flips of {b.label()}")
    return CostOrientation(graph, values)


def matches_flip_poset(b: BuildingSet, extended: bool = True, c: Optional[Sequence[int]] = None) -> bool:
    orientation = cost_orientation(b, c, extended)
    return orientation.is_acyclic and orientation.as_poset().same_order(flip_poset(b, extended))


def axis_step(difference: np.ndarray) -> bool:
    """True for k·e_i or k·(e_j - e_i) with k != 0."""
    nonzero = np.flatnonzero(difference)
    if len(nonzero) == 1:
        return True
    return len(nonzero) == 2 and difference[nonzero[0]] == -difference[nonzero[1]]


def geom_report(b: BuildingSet) -> IdentityReport:
    """Realization and coordinate checks for one building set.

    Distinct coordinates and zeros exactly on designs are checks when b comes from an
    undirected graph; otherwise two facets can share a vertex, so both go under `flagged`.
    """
    report = IdentityReport(b.label())
    report.record("stellar_matches_nested", stellar_matches_nested(b))

    rows = coordinate_table(b, extended=True)
    matrix = coordinate_matrix(rows)
    designs = np.array([[Design(i) in r.facet for i in b.ground] for r in rows], dtype=bool)
    report.record("coordinates_nonnegative", bool((matrix >= 0).all()))
    record = report.record if is_undirected_graphical(b) else report.flag
    record("zero_exactly_on_designs", bool(((matrix == 0) == designs).all()))
    record("coordinates_distinct", len({r.coords for r in rows}) == len(rows))

    try:
        orientation = cost_orientation(b)
    except NonGenericCost as e:
        report.flag("default_cost_is_generic", False)
        report.details["default_cost_is_generic"] = e.to_dict()
        return report
    report.flag("default_cost_is_generic", True)
    report.record("orientation_is_acyclic", orientation.is_acyclic)
    by_facet = {r.facet: r.array for r in rows}
    steps = all(axis_step(by_facet[u] - by_facet[v]) for u, v in orientation.graph.edges)
    report.flag("adjacent_steps_are_axis_moves", steps)
    report.flag("orientation_matches_flip_poset", orientation.as_poset().same_order(flip_poset(b)))
    return report


def complete_geom_report(n: int) -> IdentityReport:
    """The K_n checks: permutohedron sums, axis steps, and cost orientations against flips."""
    b = complete_building_set(n)
    report = geom_report(b)
    report.subject = f"K_{n}"
    report.record("adjacent_steps_are_axis_moves", report.flagged.pop("adjacent_steps_are_axis_moves", False))
    report.record("orientation_matches_flip_poset", report.flagged.pop("orientation_matches_flip_poset", False))
    sums = {sum(r.coords) for r in coordinate_table(b, extended=False)}
    report.record("permutohedron_constant_sum", len(sums) == 1, {"sums": sorted(sums)})
    report.record("nestohedron_orientation_matches_flip_poset", matches_flip_poset(b, extended=False))
    return report
