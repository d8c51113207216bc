import io

import numpy as np
import pytest

from nesto.complex import Design, extended_nested_complex
from nesto.core import complete_building_set, path_building_set, validate
from nesto.errors import FaceMissing, NonGenericCost, NotMaximal
from nesto.geom import (
    axis_step,
    complete_geom_report,
    coordinate_matrix,
    coordinate_table,
    cost_orientation,
    cross_polytope,
    default_cost,
    extended_vertex_coords,
    geom_report,
    incidence,
    matches_flip_poset,
    nestohedron_vertex_coords,
    stellar_matches_nested,
    stellar_realization,
    stellar_subdivide,
    subdivision_order,
    write_csv,
)


def f(*items):
    return frozenset(items)


K2 = complete_building_set(2)
K3 = complete_building_set(3)
SQUARE = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)

# facets of the pentagon N□(B_{K_2})
A = f(Design(1), Design(2))
B = f(f(1), Design(2))
C = f(f(2), Design(1))
D = f(f(2), f(1, 2))
E = f(f(1), f(1, 2))


def test_cross_polytope():
    octahedron = cross_polytope([1, 2, 3])
    assert len(octahedron) == 8
    assert octahedron.facet_size() == 3


def test_subdivision_requires_a_face():
    square = cross_polytope([1, 2])
    with pytest.raises(FaceMissing):
        stellar_subdivide(square, [f(1), Design(1)], f(1, 2))
    pentagon = stellar_subdivide(square, [f(1), f(2)], f(1, 2))
    assert len(pentagon) == 5


def test_subdivision_order_is_largest_first():
    assert subdivision_order(K3) == [f(1, 2, 3), f(1, 2), f(1, 3), f(2, 3)]


@pytest.mark.parametrize("b", [K2, K3, path_building_set(4), SQUARE], ids=["K2", "K3", "P4", "square"])
def test_stellar_realization_matches_nested(b):
    assert stellar_matches_nested(b)


def test_stellar_realization_of_the_pentagon():
    assert set(stellar_realization(K2).facets) == {A, B, C, D, E}


def test_incidence():
    assert incidence(K2).tolist() == [[True, False], [False, True], [True, True]]


def test_extended_coordinates_on_k3():
    assert extended_vertex_coords(K3, {f(2), f(2, 3), Design(1)}).coords == (0, 4, 3)
    assert extended_vertex_coords(K3, {f(3), f(1, 3), f(1, 2, 3)}).coords == (3, 2, 4)


def test_nestohedron_coordinates_on_k3():
    assert nestohedron_vertex_coords(K3, {f(1), f(1, 2)}).coords == (1, 2, 4)
    sums = {sum(row.coords) for row in coordinate_table(K3, extended=False)}
    assert sums == {7}
    with pytest.raises(NotMaximal):
        nestohedron_vertex_coords(K3, {f(1), Design(2)})


def test_pentagon_coordinates():
    coords = {row.facet: row.coords for row in coordinate_table(K2)}
    assert coords == {A: (0, 0), B: (2, 0), C: (0, 2), E: (2, 1), D: (1, 2)}
    assert coordinate_matrix(coordinate_table(K2)).shape == (5, 2)
    assert coordinate_matrix([]).shape == (0, 0)


def test_write_csv():
    out = io.StringIO()
    write_csv(K2, coordinate_table(K2), out)
    lines = out.getvalue().splitlines()
    assert lines[0] == "facet,v1,v2"
    assert len(lines) == 6


def test_default_cost():
    assert default_cost(3).tolist() == [-3, -2, -1]
    assert default_cost(3, extended=False).tolist() == [3, 2, 1]


def test_pentagon_orientation():
    orientation = cost_orientation(K2)
    assert orientation.values == {A: 0, B: -4, C: -2, D: -4, E: -5}
    assert orientation.is_acyclic
    assert orientation.sources == [E]
    assert orientation.sinks == [A]
    assert orientation.graph.has_edge(D, C)
    assert orientation.to_dot().startswith("digraph orientation {")


def test_nestohedron_orientation_values():
    orientation = cost_orientation(K3, extended=False)
    assert sorted(orientation.values.values()) == [11, 12, 13, 15, 16, 17]


def test_adjacent_ties_are_rejected():
    with pytest.raises(NonGenericCost):
        cost_orientation(K2, [1, 1])
    with pytest.raises(ValueError):
        cost_orientation(K2, [1, 2, 3])


def test_axis_step():
    assert axis_step(np.array([0, 3, 0]))
    assert axis_step(np.array([2, 0, -2]))
    assert not axis_step(np.array([1, 1, 0]))
    assert not axis_step(np.array([1, -1, 1]))


@pytest.mark.parametrize("extended", [True, False])
def test_orientation_matches_flips_on_k3(extended):
    assert matches_flip_poset(K3, extended=extended)


@pytest.mark.parametrize("b", [K2, K3, path_building_set(3), SQUARE], ids=["K2", "K3", "P3", "square"])
def test_geom_report(b):
    report = geom_report(b)
    assert report.ok, report.first_failure


@pytest.mark.parametrize("n", [2, 3])
def test_complete_geom_report(n):
    report = complete_geom_report(n)
    assert report.ok, report.first_failure
    assert report.details["permutohedron_constant_sum"] == {"sums": [2 ** n - 1]}


def test_coordinates_vanish_only_on_designs():
    for row in coordinate_table(path_building_set(3)):
        for i, c in zip((1, 2, 3), row.coords):
            assert (c == 0) == (Design(i) in row.facet)
    assert len(extended_nested_complex(path_building_set(3))) == len(coordinate_table(path_building_set(3)))


def test_square_coordinates_collide():
    report = geom_report(SQUARE)
    assert report.ok
    assert report.flagged["coordinates_distinct"] is False
    assert report.flagged["zero_exactly_on_designs"] is False
    assert report.flagged["default_cost_is_generic"] is False
    chain = extended_vertex_coords(SQUARE, {f(1), f(1, 2), f(1, 2, 3)}).coords
    assert chain == extended_vertex_coords(SQUARE, {f(1), f(1, 2), Design(3)}).coords == (3, 2, 0)


def test_graph_building_sets_keep_coordinate_checks():
    report = geom_report(path_building_set(3))
    assert report.checks["coordinates_distinct"]
    assert report.checks["zero_exactly_on_designs"]
    assert "coordinates_distinct" not in report.flagged
