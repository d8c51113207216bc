from .forests import (
    RootedForest,
    forest_descents,
    forest_violation,
    validate_forest,
    require_forest,
    forest_to_nested,
    nested_to_forest,
    extended_forests,
)
from .topography import (
    PartialPermutation,
    Permutation,
    Landform,
    descents,
    des,
    topography,
    entries_of,
    peak_valley_sequence,
    intermediary_entries,
    has_final_descent,
    double_descents,
    leap,
    leap_range,
)
from .partial_perms import (
    all_partial_permutations,
    psi_square,
    is_b_partial,
    b_partial_permutations,
    b_partial_permutations_on,
    lex_min_forward,
    lex_min_backward,
    lex_min_extension,
    phi,
    phi_inverse,
    extended_b_permutations,
    is_extended_b_permutation,
    bijection_report,
)
from .hops import hop, hop_displacement, hop_classes, is_hat, h_via_descents, gamma_via_descents, hop_report

__all__ = [
    'RootedForest', 'forest_descents', 'forest_violation', 'validate_forest', 'require_forest',
    'forest_to_nested', 'nested_to_forest', 'extended_forests',
    'PartialPermutation', 'Permutation', 'Landform', 'descents', 'des', 'topography', 'entries_of',
    'peak_valley_sequence', 'intermediary_entries', 'has_final_descent', 'double_descents', 'leap', 'leap_range',
    'all_partial_permutations', 'psi_square', 'is_b_partial', 'b_partial_permutations', 'b_partial_permutations_on',
    'lex_min_forward', 'lex_min_backward', 'lex_min_extension', 'phi', 'phi_inverse',
    'extended_b_permutations', 'is_extended_b_permutation', 'bijection_report',
    'hop', 'hop_displacement', 'hop_classes', 'is_hat', 'h_via_descents', 'gamma_via_descents', 'hop_report',
]
