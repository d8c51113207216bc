import networkx as nx
import pytest

from nesto.complex import extended_nested_complex
from nesto.core import complete_building_set, path_building_set, singleton_building_set, validate
from nesto.counting import (
    IdentityReport,
    IntPolynomial,
    RationalInT,
    T,
    a_number,
    a_rational,
    ab_report,
    b_number,
    b_rational,
    component_product_report,
    f_extended_enum,
    f_extended_recursive,
    f_nested_enum,
    f_nested_recursive,
    f_of_dual,
    f_poly_enum,
    forest_linegraph_equal,
    gamma_extended,
    gamma_nested,
    gamma_poly,
    gamma_shaving_check,
    gamma_shaving_sweep,
    h_extended_enum,
    h_extended_recursive,
    h_nested_enum,
    h_poly,
    inverse_relations_check,
    is_dehn_sommerville,
    recursion_report,
    shaving_extensions,
)
from nesto.errors import CoefficientOverflow, NotAForest, NotSymmetric
from nesto.suite import graphical_family

SQUARE = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)


def test_polynomial_arithmetic():
    assert (T + 1) ** 2 == IntPolynomial.of(1, 2, 1)
    assert IntPolynomial.of(0, 0, 1).shift(-1) == IntPolynomial.of(1, -2, 1)
    assert IntPolynomial.of(1, 2).reverse(3) == IntPolynomial.of(0, 0, 2, 1)
    assert IntPolynomial.of(1, 3, 1)(-1) == -1
    assert IntPolynomial.of(1, 0, 0) == IntPolynomial.constant(1)
    assert str(IntPolynomial.of(1, -2, 1)) == "t^2 - 2t + 1"
    assert IntPolynomial().to_list() == [0]


def test_coefficient_overflow():
    with pytest.raises(CoefficientOverflow):
        IntPolynomial.of(2 ** 63)


def test_rational_equality_cross_multiplies():
    assert RationalInT(IntPolynomial.of(0, 1), 1, 1) == RationalInT(IntPolynomial.constant(1))
    assert RationalInT(IntPolynomial.of(1), -1, 1).at_minus_one() == 1


def test_hexagon_and_pentagon_numbers():
    k3, k2 = complete_building_set(3), complete_building_set(2)
    assert f_nested_enum(k3).to_list() == [6, 6, 1]
    assert h_nested_enum(k3).to_list() == [1, 4, 1]
    assert gamma_nested(k3).to_list() == [1, 2]
    assert f_extended_enum(k2).to_list() == [5, 5, 1]
    assert h_extended_enum(k2).to_list() == [1, 3, 1]
    assert gamma_extended(k2).to_list() == [1, 1]


def test_stellohedron_and_extended_path():
    assert h_extended_enum(complete_building_set(3)).to_list() == [1, 7, 7, 1]
    assert gamma_extended(complete_building_set(3)).to_list() == [1, 4]
    assert h_extended_enum(path_building_set(3)).to_list() == [1, 6, 6, 1]
    assert gamma_extended(path_building_set(3)).to_list() == [1, 3]


def test_gamma_rejects_asymmetric_h():
    with pytest.raises(NotSymmetric):
        gamma_poly(IntPolynomial.of(1, 2), 1)


def test_dehn_sommerville():
    assert is_dehn_sommerville(IntPolynomial.of(1, 7, 7, 1), 3)
    assert not is_dehn_sommerville(IntPolynomial.of(1, 7, 6, 1), 3)


@pytest.mark.parametrize(
    "b",
    [complete_building_set(3), path_building_set(4), singleton_building_set(3), SQUARE],
    ids=["K3", "P4", "discrete3", "square"],
)
def test_recursions_match_enumeration(b):
    report = recursion_report(b)
    assert report.ok, report.first_failure
    assert f_nested_recursive(b) == f_nested_enum(b)
    assert f_extended_recursive(b, 2) == f_extended_enum(b)
    assert h_extended_recursive(b) == h_extended_enum(b)


@pytest.mark.parametrize("b", [complete_building_set(3), path_building_set(3), SQUARE], ids=["K3", "P3", "square"])
def test_inverse_relations(b):
    report = inverse_relations_check(b)
    assert report.ok, report.first_failure


def test_unknown_extended_form():
    with pytest.raises(ValueError):
        f_extended_recursive(complete_building_set(2), 3)


def test_ab_numbers():
    k1 = validate([[1]], 1)
    k2 = complete_building_set(2)
    assert a_number(k2) == -1
    assert b_number(k2) == 0
    assert b_number(k1) == -1
    assert a_number(k1) == 0
    for b in (k1, k2, complete_building_set(3), SQUARE):
        report = ab_report(b)
        assert report.ok, report.first_failure


def test_forest_line_graph_equality():
    assert forest_linegraph_equal(nx.path_graph(3))
    assert forest_linegraph_equal(nx.star_graph(3))
    with pytest.raises(NotAForest):
        forest_linegraph_equal(nx.cycle_graph(3))


def test_gamma_shaving_adds_one_member():
    report = gamma_shaving_check(path_building_set(3), complete_building_set(3), {1, 3})
    assert report.ok
    assert report.details["via_b_prime"]["gamma"] == [1, 4]


def test_identity_report_flags_do_not_decide():
    report = IdentityReport("x")
    report.record("holds", True)
    report.flag("reading", False)
    assert report.ok
    report.record("fails", False, {"why": 1})
    assert not report.ok
    assert report.first_failure == "fails"
    assert report.to_json()["details"] == {"fails": {"why": 1}}


def test_face_numbers_of_the_pentagon():
    pentagon = extended_nested_complex(complete_building_set(2))
    assert f_poly_enum(pentagon).to_list() == [1, 5, 5]
    f_dual = f_of_dual(pentagon)
    assert f_dual.to_list() == [5, 5, 1]
    assert h_poly(f_dual).to_list() == [1, 3, 1]


def test_ab_rationals_evaluate_to_the_numbers():
    k2 = complete_building_set(2)
    assert a_rational(k2) == RationalInT(IntPolynomial.of(1, 3, 1), 1, 2)
    for b in (k2, complete_building_set(3), path_building_set(3)):
        assert a_rational(b).at_minus_one() == a_number(b)
        assert b_rational(b).at_minus_one() == b_number(b)


@pytest.mark.parametrize("b", [
    validate([[1], [2], [3], [1, 2]], 3),
    singleton_building_set(3),
    validate([[1], [2], [3], [4], [1, 2], [3, 4]], 4),
])
def test_numbers_multiply_over_components(b):
    report = component_product_report(b)
    assert report.ok, report.first_failure
    assert report.details["gamma_extended"]["whole"] == report.details["gamma_extended"]["product"]


def test_shaving_extensions_of_the_square():
    extensions = shaving_extensions(SQUARE)
    assert [i for i, _ in extensions] == [frozenset({1, 3}), frozenset({2, 3})]
    i, b_prime = extensions[1]
    assert b_prime.members == SQUARE.members | {i}
    assert gamma_shaving_check(SQUARE, b_prime, i).ok


def test_complete_graph_has_nothing_to_shave():
    assert shaving_extensions(complete_building_set(4)) == []


@pytest.mark.parametrize("b", graphical_family(4, connected_only=True), ids=lambda b: b.label())
def test_gamma_shaving_over_connected_graphs(b):
    report = gamma_shaving_sweep(b)
    assert report.ok, report.first_failure
    assert report.details["extensions"] == len(report.checks)
