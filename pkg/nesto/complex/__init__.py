from .simplicial import Design, SimplicialComplex, Vertex, vertex_key, vertex_label, parse_vertex_label, join_all
from .nested import (
    is_nested,
    is_extended_nested,
    nested_complex,
    extended_nested_complex,
    maximal_nested_with_maxima,
    split_face,
    support,
)
from .link import LinkDecomposition, link
from .independence import (
    minimal_non_faces,
    independence_complex,
    independence_graph,
    independence_dot,
    strongly_connected_components,
    m_size,
    is_strong,
    is_flag_complex,
    non_nested_violation,
)
from .isomorphism import is_isomorphic, check_vertex_map

__all__ = [
    'Design', 'SimplicialComplex', 'Vertex', 'vertex_key', 'vertex_label', 'parse_vertex_label', 'join_all',
    'is_nested', 'is_extended_nested', 'nested_complex', 'extended_nested_complex',
    'maximal_nested_with_maxima', 'split_face', 'support',
    'LinkDecomposition', 'link',
    'minimal_non_faces', 'independence_complex', 'independence_graph', 'independence_dot',
    'strongly_connected_components', 'm_size', 'is_strong', 'is_flag_complex', 'non_nested_violation',
    'is_isomorphic', 'check_vertex_map',
]
