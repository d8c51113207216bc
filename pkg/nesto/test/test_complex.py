import pytest

from nesto.complex import (
    Design,
    SimplicialComplex,
    extended_nested_complex,
    independence_complex,
    independence_dot,
    independence_graph,
    is_extended_nested,
    is_flag_complex,
    is_isomorphic,
    is_nested,
    is_strong,
    link,
    m_size,
    minimal_non_faces,
    nested_complex,
    non_nested_violation,
    parse_vertex_label,
    strongly_connected_components,
    support,
    vertex_label,
)
from nesto.core import BuildingSet, complete_building_set, is_flag, path_building_set, validate
from nesto.errors import MemberNotInBuildingSet, VertexNotInComplex
from nesto.suite import graphical_family, random_building_sets


def f(*items):
    return frozenset(items)


def test_pentagon_facets_of_k2():
    complex_ = extended_nested_complex(complete_building_set(2))
    assert set(complex_.facets) == {
        f(Design(1), Design(2)),
        f(f(1), Design(2)),
        f(f(2), Design(1)),
        f(f(2), f(1, 2)),
        f(f(1), f(1, 2)),
    }
    assert complex_.is_pure and complex_.facet_size() == 2


def test_nested_complex_drops_maxima():
    complex_ = nested_complex(complete_building_set(3))
    assert len(complex_) == 6
    assert f(1, 2, 3) not in complex_.vertices
    assert complex_.facet_size() == 2


def test_empty_building_set_has_the_empty_complex():
    assert nested_complex(BuildingSet.empty()).facets == (frozenset(),)
    assert extended_nested_complex(BuildingSet.empty()).facets == (frozenset(),)


def test_extended_complex_is_pure_of_dimension_n():
    b = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)
    complex_ = extended_nested_complex(b)
    assert complex_.facet_sizes == (3,)


def test_nested_predicates():
    b = complete_building_set(3)
    assert is_nested(b, [[1], [1, 2]])
    assert not is_nested(b, [[1], [2]])
    assert not is_nested(b, [[1, 2], [1, 3]])
    assert not is_nested(b, [[1, 2, 3]])
    assert is_extended_nested(b, [[1, 2, 3]], [])
    assert is_extended_nested(b, [[1]], [2, 3])
    assert not is_extended_nested(b, [[1, 2]], [Design(2)])
    with pytest.raises(MemberNotInBuildingSet):
        is_nested(path_building_set(3), [[1, 3]])


def test_support_of_extended_face():
    assert support({f(1), f(1, 2), Design(3)}) == f(1, 2)
    assert support({Design(1)}) == frozenset()


def test_vertex_labels_round_trip():
    assert vertex_label(f(1, 2)) == "{1,2}"
    assert vertex_label(Design(3)) == "x_3"
    assert parse_vertex_label("{2,1}") == f(1, 2)
    assert parse_vertex_label("x_4") == Design(4)
    with pytest.raises(ValueError):
        parse_vertex_label("y")


def test_link_of_member_and_design():
    b = complete_building_set(2)
    member = link(b, f(1))
    assert member.verified
    assert set(member.explicit.facets) == {f(Design(2)), f(f(1, 2))}

    design = link(b, Design(1))
    assert design.verified
    assert set(design.explicit.facets) == {f(Design(2)), f(f(2))}


def test_link_of_missing_vertex():
    with pytest.raises(VertexNotInComplex):
        link(complete_building_set(2), f(1, 2), extended=False)


@pytest.mark.parametrize("b", [complete_building_set(3), path_building_set(4)])
def test_links_decompose_as_joins(b):
    complex_ = extended_nested_complex(b)
    for v in complex_.vertices:
        assert link(b, v).verified, vertex_label(v)


def test_hexagon_is_flag_and_strong():
    b = complete_building_set(3)
    assert is_flag_complex(nested_complex(b))
    assert all(len(s) == 2 for s in minimal_non_faces(nested_complex(b)))
    assert is_strong(b)


def test_square_is_not_strong():
    b = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)
    assert set(minimal_non_faces(nested_complex(b))) == {f(f(1), f(2)), f(f(3), f(1, 2))}
    assert not is_strong(b)
    assert strongly_connected_components(b) == [f(f(1), f(2)), f(f(3), f(1, 2))]


def test_isomorphism_search():
    square = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)
    path = path_building_set(3)
    assert is_isomorphic(nested_complex(square), nested_complex(complete_building_set(3))) is None
    mapping = is_isomorphic(extended_nested_complex(complete_building_set(2)), nested_complex(path))
    assert mapping is not None
    image = {frozenset(mapping[v] for v in facet) for facet in extended_nested_complex(complete_building_set(2)).facets}
    assert image == set(nested_complex(path).facets)


def test_complex_json_round_trip():
    complex_ = extended_nested_complex(complete_building_set(2))
    assert SimplicialComplex.from_json(complex_.to_json()) == complex_


def test_independence_complex_of_the_pentagon():
    pentagon = extended_nested_complex(complete_building_set(2))
    diagonals = independence_complex(pentagon)
    assert len(diagonals) == 5
    assert f(f(1), f(2)) in diagonals.facets
    assert f(Design(1), f(1, 2)) in diagonals.facets
    g = independence_graph(pentagon)
    assert g.number_of_nodes() == 5 and g.number_of_edges() == 5
    assert all(d == 2 for _, d in g.degree())


def test_m_size_of_two_points():
    k2 = complete_building_set(2)
    (component,) = strongly_connected_components(k2)
    assert component == f(f(1), f(2))
    assert m_size(k2, component) == 0


def test_independence_dot_of_two_points():
    dot = independence_dot(nested_complex(complete_building_set(2)), name="n2")
    assert dot.splitlines() == ["graph n2 {", '  "{1}";', '  "{2}";', '  "{1}" -- "{2}";', "}"]


TRIANGLE = validate([[1], [2], [3], [1, 2, 3]], 3)


@pytest.mark.parametrize("extended", [True, False])
@pytest.mark.parametrize("b", graphical_family(3), ids=lambda b: b.label())
def test_every_link_is_a_join(b, extended):
    complex_ = extended_nested_complex(b) if extended else nested_complex(b)
    for v in complex_.vertices:
        assert link(b, v, extended=extended).verified, vertex_label(v)


def test_flag_sets_are_those_with_flag_complexes():
    assert not is_flag(TRIANGLE)
    assert minimal_non_faces(nested_complex(TRIANGLE)) == [f(f(1), f(2), f(3))]
    assert not is_flag_complex(extended_nested_complex(TRIANGLE))
    for b in graphical_family(4) + random_building_sets(4, 10, seed=5):
        flag = is_flag(b)
        assert is_flag_complex(nested_complex(b)) == flag, b.label()
        assert is_flag_complex(extended_nested_complex(b)) == flag, b.label()


def test_minimal_non_nested_collections_of_the_path():
    non_faces = minimal_non_faces(nested_complex(path_building_set(3)))
    assert set(non_faces) == {f(f(1), f(2)), f(f(2), f(3)), f(f(1), f(2, 3)), f(f(3), f(1, 2)), f(f(1, 2), f(2, 3))}
    assert non_nested_violation(path_building_set(3)) is None


def test_minimal_non_nested_collections_have_unions_in_b():
    assert non_nested_violation(TRIANGLE) is None
    for b in graphical_family(4):
        assert non_nested_violation(b) is None, b.label()
