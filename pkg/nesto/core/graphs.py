import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Optional, Union

import networkx as nx

from ..config import get_config
from ..errors import GroundTooLarge
from .building_set import BuildingSet, canonical, check_ground_size

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    arcs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"loop at {u} is not allowed")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"arc ({u},{v}) leaves the node range 1..{self.n}")

    @classmethod
    def undirected(cls, n: int, edges) -> "DirectedGraph":
        arcs = set()
        for u, v in edges:
            arcs.add((u, v))
            arcs.add((v, u))
        return cls(n, frozenset(arcs))

    @classmethod
    def from_networkx(cls, g: Union[nx.Graph, nx.DiGraph]) -> "DirectedGraph":
        """Nodes must already be labelled 1..n."""
        n = g.number_of_nodes()
        if sorted(g.nodes) != list(range(1, n + 1)):
            raise ValueError("graph nodes must be labelled 1..n")
        if g.is_directed():
            return cls(n, frozenset(g.edges))
        return cls.undirected(n, g.edges)

    def to_networkx(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.arcs)
        return g

    @classmethod
    def from_json(cls, data: dict) -> "DirectedGraph":
        """Parse {"n": .., "arcs": [[u, v], ..]}; "edges" (or "undirected": true) makes each pair an edge"""
        n = int(data["n"])
        pairs = [tuple(a) for a in data.get("arcs", data.get("edges", []))]
        if data.get("undirected", "arcs" not in data and "edges" in data):
            return cls.undirected(n, pairs)
        return cls(n, frozenset(pairs))

    def to_json(self) -> dict:
        return {"n": self.n, "arcs": [list(a) for a in sorted(self.arcs)]}


def _induced_strongly_connected(g: nx.DiGraph, nodes) -> bool:
    return nx.is_strongly_connected(g.subgraph(nodes))


def _subsets(ground: tuple[int, ...]):
    for size in range(1, len(ground) + 1):
        for combo in combinations(ground, size):
            yield frozenset(combo)


def from_graph(g: Union[DirectedGraph, nx.Graph, nx.DiGraph]) -> BuildingSet:
    """All nonempty node sets inducing a strongly connected subgraph."""
    if not isinstance(g, DirectedGraph):
        g = DirectedGraph.from_networkx(g)
    check_ground_size(g.n)
    dg = g.to_networkx()
    ground = tuple(range(1, g.n + 1))
    sets = [s for s in _subsets(ground) if _induced_strongly_connected(dg, s)]
    return BuildingSet(ground, canonical(sets))


def _generates(dg: nx.DiGraph, b: BuildingSet) -> bool:
    # Early exit on the first subset whose membership disagrees
    for s in _subsets(b.ground):
        if _induced_strongly_connected(dg, s) != (s in b.members):
            return False
    return True


def _standard(b: BuildingSet) -> bool:
    return b.ground == tuple(range(1, b.n + 1))


def is_graphical(b: BuildingSet) -> tuple[bool, Optional[DirectedGraph]]:
    """Decide whether b = from_graph(g) for some directed graph g, returning a witness.

    A 2-element member {u,v} forces both arcs u->v and v->u; a non-member pair can
    carry at most one arc. The forced graph is tried first, then every choice of
    none/one arc on the remaining pairs while n stays within the search bound.
    """
    if not _standard(b):
        relabel = {old: new for new, old in enumerate(b.ground, start=1)}
        # Witness arcs are reported on positions 1..n of the ground set
        return is_graphical(b.relabel(relabel))

    forced = [tuple(sorted(s)) for s in b.sets if len(s) == 2]
    base = DirectedGraph.undirected(b.n, forced)
    if _generates(base.to_networkx(), b):
        return True, base

    bound = get_config().graphical_search_n
    if b.n > bound:
        raise GroundTooLarge(b.n, bound, "graphical search")

    forced_pairs = set(forced)
    free = [p for p in combinations(b.ground, 2) if p not in forced_pairs]
    logger.debug(f"exhaustive graphical search over {3 ** len(free)} arc choices")

    for choice in product((0, 1, 2), repeat=len(free)):
        arcs = set(base.arcs)
        for (u, v), c in zip(free, choice):
            if c == 1:
                arcs.add((u, v))
            elif c == 2:
                arcs.add((v, u))
        candidate = DirectedGraph(b.n, frozenset(arcs))
        if _generates(candidate.to_networkx(), b):
            return True, candidate
    return False, None


def is_undirected_graphical(b: BuildingSet) -> bool:
    """Whether b = B_G for an undirected graph G; only the graph on the 2-element members can work."""
    if not _standard(b):
        return is_undirected_graphical(b.relabel({old: new for new, old in enumerate(b.ground, start=1)}))
    edges = [tuple(sorted(s)) for s in b.sets if len(s) == 2]
    return _generates(DirectedGraph.undirected(b.n, edges).to_networkx(), b)


def _relabelled(g: nx.Graph) -> nx.Graph:
    return nx.convert_node_labels_to_integers(g, first_label=1, ordering="sorted")


def graph_building_set(g: nx.Graph) -> BuildingSet:
    """B_G for an undirected networkx graph with any sortable node labels (relabelled 1..n)."""
    return from_graph(_relabelled(g))


def complete_building_set(n: int) -> BuildingSet:
    return graph_building_set(nx.complete_graph(n))


def path_building_set(n: int) -> BuildingSet:
    return graph_building_set(nx.path_graph(n))


def star_building_set(k: int) -> BuildingSet:
    """B_{K_{1,k}} with the center labelled 1."""
    return graph_building_set(nx.star_graph(k))


def singleton_building_set(n: int) -> BuildingSet:
    return BuildingSet(tuple(range(1, n + 1)), tuple(frozenset([i]) for i in range(1, n + 1)))


def all_graphs(n: int, connected_only: bool = False) -> list[nx.Graph]:
    """Simple graphs on nodes 1..n, one per isomorphism class (networkx atlas, n <= 7)."""
    if n <= 0:
        return []
    if n > 7:
        raise GroundTooLarge(n, 7, "graph atlas")
    graphs = []
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() != n:
            continue
        if connected_only and not nx.is_connected(g):
            continue
        graphs.append(_relabelled(g))
    return graphs


def graphical_building_sets(n: int, connected_only: bool = True) -> list[BuildingSet]:
    """B_G for every graph on [n] up to isomorphism."""
    return [from_graph(g) for g in all_graphs(n, connected_only=connected_only)]
