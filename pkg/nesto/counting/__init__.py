from .polynomial import IntPolynomial, RationalInT, T, ONE, ZERO
from .report import IdentityReport
from .face_numbers import (
    f_poly_enum,
    f_of_dual,
    h_poly,
    gamma_poly,
    f_nested_enum,
    f_extended_enum,
    h_nested_enum,
    h_extended_enum,
    gamma_nested,
    gamma_extended,
    nested_dimension,
    is_dehn_sommerville,
)
from .recursions import (
    f_dual_nested_recursive,
    f_nested_recursive,
    h_nested_recursive,
    f_extended_recursive,
    h_extended_recursive,
    recursion_report,
    inverse_relations_check,
    line_graph_building_sets,
    forest_linegraph_equal,
    gamma_shaving_check,
    component_product_report,
    shaving_extensions,
    gamma_shaving_sweep,
)
from .ab_numbers import a_number, b_number, a_rational, b_rational, ab_report

__all__ = [
    'IntPolynomial', 'RationalInT', 'T', 'ONE', 'ZERO', 'IdentityReport',
    'f_poly_enum', 'f_of_dual', 'h_poly', 'gamma_poly',
    'f_nested_enum', 'f_extended_enum', 'h_nested_enum', 'h_extended_enum',
    'gamma_nested', 'gamma_extended', 'nested_dimension', 'is_dehn_sommerville',
    'f_dual_nested_recursive', 'f_nested_recursive', 'h_nested_recursive',
    'f_extended_recursive', 'h_extended_recursive', 'recursion_report', 'inverse_relations_check',
    'line_graph_building_sets', 'forest_linegraph_equal', 'gamma_shaving_check',
    'component_product_report', 'shaving_extensions', 'gamma_shaving_sweep',
    'a_number', 'b_number', 'a_rational', 'b_rational', 'ab_report',
]
