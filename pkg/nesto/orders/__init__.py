from .poset import Poset
from .weak_order import (
    InversionSet,
    weak_order,
    partial_weak_order,
    facet_of_word,
    partial_weak_report,
    flip_matches_weak_order,
    flip_report,
)
from .flip_poset import top_of, maximal_collections, adjacent_pairs, orient_flip, flip_edges, flip_poset
from .shelling import ShellingResult, verify_shelling, stellohedron_shelling_report

__all__ = [
    'Poset', 'InversionSet', 'weak_order', 'partial_weak_order', 'facet_of_word',
    'partial_weak_report', 'flip_matches_weak_order', 'flip_report',
    'top_of', 'maximal_collections', 'adjacent_pairs', 'orient_flip', 'flip_edges', 'flip_poset',
    'ShellingResult', 'verify_shelling', 'stellohedron_shelling_report',
]
