import logging
from itertools import combinations

import networkx as nx
import numpy as np

from ..core.building_set import BuildingSet, subsets_of, validate
from ..core.graphs import all_graphs, complete_building_set, graph_building_set, path_building_set, star_building_set

logger = logging.getLogger(__name__)

# Ground sizes beyond which the exhaustive instance family is not enumerated
GRAPHICAL_FAMILY_MAX_N = 5
RANDOM_FAMILY_MAX_N = 5


def union_closure(sets: set[frozenset]) -> set[frozenset]:
    closed = set(sets)
    changed = True
    while changed:
        changed = False
        for first, second in combinations(list(closed), 2):
            union = first | second
            if first & second and union not in closed:
                closed.add(union)
                changed = True
    return closed


def random_building_set(n: int, rng: np.random.Generator, density: float = 0.25) -> BuildingSet:
    """Singletons plus a random choice of larger subsets, closed under intersecting unions."""
    candidates = [s for s in subsets_of(range(1, n + 1)) if len(s) > 1]
    picks = rng.random(len(candidates)) < density
    sets = {frozenset([i]) for i in range(1, n + 1)}
    sets.update(s for s, keep in zip(candidates, picks) if keep)
    return validate(union_closure(sets), n)


def random_building_sets(n: int, count: int, seed: int) -> list[BuildingSet]:
    rng = np.random.default_rng([seed, n])
    return [random_building_set(n, rng) for _ in range(count)]


def graphical_family(max_n: int, connected_only: bool = False) -> list[BuildingSet]:
    """B_G for every graph on 1..n up to isomorphism, n <= max_n."""
    family = []
    for n in range(1, min(max_n, GRAPHICAL_FAMILY_MAX_N) + 1):
        family.extend(graph_building_set(g) for g in all_graphs(n, connected_only=connected_only))
    return family


def instance_family(max_n: int, seed: int, samples: int) -> list[BuildingSet]:
    """Graphical building sets plus `samples` seeded random ones per ground size."""
    family = graphical_family(max_n)
    for n in range(2, min(max_n, RANDOM_FAMILY_MAX_N) + 1):
        family.extend(random_building_sets(n, samples, seed))
    logger.debug(f"instance family up to n={max_n}: {len(family)} building sets")
    return family


def forests(max_edges: int) -> list[nx.Graph]:
    """Forests on at most max_edges + 1 vertices with at most max_edges edges, up to isomorphism."""
    return [
        g for n in range(1, max_edges + 2)
        for g in all_graphs(n)
        if nx.is_forest(g) and g.number_of_edges() <= max_edges
    ]


def named_graph_family(n: int) -> list[BuildingSet]:
    """The complete graph, path, star and cycle on n vertices, for sizes past the exhaustive family."""
    family = [complete_building_set(n), path_building_set(n), star_building_set(n - 1)]
    if n >= 3:
        family.append(graph_building_set(nx.cycle_graph(n)))
    return family
