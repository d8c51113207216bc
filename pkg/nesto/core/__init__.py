from .building_set import (
    BuildingSet,
    Subset,
    subset_key,
    canonical,
    is_interval,
    validate,
    validate_on,
    restriction,
    contraction,
    maximal_elements,
    connected_components,
    is_chordal,
    require_chordal,
    is_flag,
    flag_violation,
)
from .graphs import (
    DirectedGraph,
    from_graph,
    is_graphical,
    is_undirected_graphical,
    graph_building_set,
    complete_building_set,
    path_building_set,
    star_building_set,
    singleton_building_set,
    all_graphs,
    graphical_building_sets,
)

__all__ = [
    'BuildingSet', 'Subset', 'subset_key', 'canonical', 'is_interval',
    'validate', 'validate_on', 'restriction', 'contraction',
    'maximal_elements', 'connected_components',
    'is_chordal', 'require_chordal', 'is_flag', 'flag_violation',
    'DirectedGraph', 'from_graph', 'is_graphical', 'is_undirected_graphical', 'graph_building_set',
    'complete_building_set', 'path_building_set', 'star_building_set', 'singleton_building_set',
    'all_graphs', 'graphical_building_sets',
]
