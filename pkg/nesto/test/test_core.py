import networkx as nx
import pytest

from nesto.config import NestoConfig, set_config
from nesto.core import (
    BuildingSet,
    DirectedGraph,
    all_graphs,
    complete_building_set,
    connected_components,
    from_graph,
    graph_building_set,
    is_chordal,
    is_flag,
    is_graphical,
    is_undirected_graphical,
    maximal_elements,
    path_building_set,
    require_chordal,
    singleton_building_set,
    star_building_set,
    validate,
    validate_on,
)
from nesto.core.building_set import subsets_of
from nesto.errors import GroundTooLarge, MissingSingleton, NotChordal, UnionClosureViolation
from nesto.suite import random_building_sets


def test_validate_canonicalizes_members():
    b = validate([[2, 1], [3], [1], [2], [2, 1]], 3)
    assert b.sets == (frozenset({1}), frozenset({2}), frozenset({3}), frozenset({1, 2}))
    assert b.to_json() == {"n": 3, "sets": [[1], [2], [3], [1, 2]]}


def test_missing_singleton_names_the_element():
    with pytest.raises(MissingSingleton) as info:
        validate([[1], [1, 2]], 2)
    assert info.value.element == 2
    assert info.value.to_dict()["error"] == "MissingSingleton"


def test_union_closure_violation_reports_the_pair():
    with pytest.raises(UnionClosureViolation) as info:
        validate([[1], [2], [3], [1, 2], [2, 3]], 3)
    assert info.value.pair == (frozenset({1, 2}), frozenset({2, 3}))


def test_ground_size_cap():
    set_config(NestoConfig(max_n=3))
    with pytest.raises(GroundTooLarge):
        validate([[i] for i in range(1, 5)], 4)


def test_complete_and_path_building_sets():
    assert len(complete_building_set(3)) == 7
    path = path_building_set(3)
    assert path.sets == (
        frozenset({1}), frozenset({2}), frozenset({3}),
        frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 2, 3}),
    )
    assert path.is_connected
    assert path.maxima == (frozenset({1, 2, 3}),)


def test_disconnected_maxima():
    b = singleton_building_set(2)
    assert not b.is_connected
    assert b.maxima == (frozenset({1}), frozenset({2}))
    assert [c.ground for c in b.components()] == [(1,), (2,)]
    assert maximal_elements(b) == [frozenset({1}), frozenset({2})]
    assert [c.ground for c in connected_components(b)] == [(1,), (2,)]


def test_restriction_and_contraction_keep_labels():
    k3 = complete_building_set(3)
    restricted = k3.restriction({1, 3})
    assert restricted.ground == (1, 3)
    assert restricted.sets == (frozenset({1}), frozenset({3}), frozenset({1, 3}))

    contracted = path_building_set(3).contraction({2})
    assert contracted.ground == (1, 3)
    assert contracted.sets == (frozenset({1}), frozenset({3}), frozenset({1, 3}))


def test_chordality():
    assert is_chordal(path_building_set(4))
    assert is_chordal(complete_building_set(3))
    star = star_building_set(2)
    assert not is_chordal(star)
    with pytest.raises(NotChordal):
        require_chordal(star)


def test_flag_property():
    assert is_flag(complete_building_set(3))
    assert not is_flag(validate([[1], [2], [3], [1, 2, 3]], 3))


def test_from_graph_directed_and_undirected():
    one_way = from_graph(DirectedGraph(2, frozenset({(1, 2)})))
    assert one_way.sets == (frozenset({1}), frozenset({2}))
    both_ways = from_graph(DirectedGraph.from_json({"n": 2, "arcs": [[1, 2]], "undirected": True}))
    assert frozenset({1, 2}) in both_ways


def test_graph_building_set_relabels_nodes():
    g = nx.Graph([("a", "b"), ("b", "c")])
    assert graph_building_set(g) == path_building_set(3)


def test_is_graphical_finds_a_directed_cycle():
    b = validate([[1], [2], [3], [1, 2, 3]], 3)
    graphical, witness = is_graphical(b)
    assert graphical
    assert from_graph(witness) == b


def test_json_round_trip_with_explicit_ground():
    b = BuildingSet.build([2, 5], [[2], [5], [2, 5]])
    data = b.to_json()
    assert data["ground"] == [2, 5]
    assert BuildingSet.from_json(data) == b


def test_undirected_graphical():
    square = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)
    assert is_undirected_graphical(path_building_set(3))
    assert is_undirected_graphical(complete_building_set(3))
    assert not is_undirected_graphical(square)
    assert is_graphical(square)[0]
    assert not is_undirected_graphical(validate([[1], [2], [3], [1, 2, 3]], 3))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_graph_building_sets_and_their_minors_validate(n):
    for g in all_graphs(n):
        b = from_graph(g)
        assert validate(b.sets, n) == b
        for s in subsets_of(b.ground):
            r = b.restriction(s)
            assert validate_on(r.ground, r.sets) == r
        for member in b.sets:
            c = b.contraction(member)
            assert validate_on(c.ground, c.sets) == c


def test_chordal_sets_are_flag_and_stay_chordal_under_restriction():
    family = [from_graph(g) for n in range(1, 5) for g in all_graphs(n)] + random_building_sets(4, 20, seed=1)
    family.append(path_building_set(4))
    chordal = [b for b in family if is_chordal(b)]
    assert path_building_set(4) in chordal
    for b in chordal:
        assert is_flag(b), b.label()
        assert all(is_chordal(b.restriction(s)) for s in subsets_of(b.ground)), b.label()
