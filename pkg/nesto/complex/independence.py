from itertools import combinations
from typing import Optional

import networkx as nx

from ..core.building_set import BuildingSet
from .nested import nested_complex
from .simplicial import SimplicialComplex, face_key, vertex_key, vertex_label


def minimal_non_faces(complex_: SimplicialComplex) -> list[frozenset]:
    """Non-faces all of whose proper subsets are faces, found breadth-first by size.

    A minimal non-face has at most (largest facet size + 1) vertices.
    """
    vertices = complex_.vertices
    order = {v: k for k, v in enumerate(vertices)}
    bound = max(len(f) for f in complex_.facets) + 1
    result: list[frozenset] = []

    faces = {frozenset([v]) for v in vertices}
    for size in range(2, bound + 1):
        next_faces = set()
        candidates = set()
        for face in faces:
            top = max(order[v] for v in face)
            for v in vertices[top + 1:]:
                candidates.add(face | {v})
        for cand in candidates:
            if not all(cand - {v} in faces for v in cand):
                continue
            if complex_.is_face(cand):
                next_faces.add(cand)
            else:
                result.append(cand)
        faces = next_faces
        if not faces:
            break
    return sorted(result, key=face_key)


def independence_complex(complex_: SimplicialComplex) -> SimplicialComplex:
    """The complex whose facets are the minimal non-faces."""
    return SimplicialComplex.from_facets(minimal_non_faces(complex_))


def independence_graph(complex_: SimplicialComplex) -> nx.Graph:
    """1-skeleton of the independence complex, on every vertex of the original complex."""
    g = nx.Graph()
    g.add_nodes_from(complex_.vertices)
    for non_face in minimal_non_faces(complex_):
        g.add_edges_from(combinations(non_face, 2))
    return g


def independence_dot(complex_: SimplicialComplex, name: str = "independence") -> str:
    """Graphviz source of the independence graph, vertices and edges in canonical order."""
    g = independence_graph(complex_)
    lines = [f"graph {name} {{"]
    for v in sorted(g.nodes, key=vertex_key):
        lines.append(f'  "{vertex_label(v)}";')
    edges = sorted((tuple(sorted(e, key=vertex_key)) for e in g.edges), key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
    for u, v in edges:
        lines.append(f'  "{vertex_label(u)}" -- "{vertex_label(v)}";')
    lines.append("}")
    return "\n".join(lines)


def strongly_connected_components(b: BuildingSet) -> list[frozenset]:
    g = independence_graph(nested_complex(b))
    components = [frozenset(c) for c in nx.connected_components(g)]
    return sorted(components, key=lambda c: min(vertex_key(v) for v in c))


def m_size(b: BuildingSet, component) -> int:
    """Dimension of N(b) restricted to the vertices of one strongly connected component."""
    complex_ = nested_complex(b).induced(component)
    return complex_.dimension


def is_strong(b: BuildingSet) -> bool:
    """Every connected component of b is a single strongly connected component."""
    for c in b.components():
        g = independence_graph(nested_complex(c))
        if g.number_of_nodes() and not nx.is_connected(g):
            return False
    return True


def is_flag_complex(complex_: SimplicialComplex) -> bool:
    return all(len(s) == 2 for s in minimal_non_faces(complex_))


def non_nested_violation(b: BuildingSet) -> Optional[frozenset]:
    """First minimal non-face of N(b) whose union leaves b, or which has more than two members that meet.

    None when every minimal non-nested collection is either a pair or pairwise disjoint, with union in b.
    """
    for non_face in minimal_non_faces(nested_complex(b)):
        if frozenset().union(*non_face) not in b.members:
            return non_face
        if len(non_face) > 2 and any(x & y for x, y in combinations(non_face, 2)):
            return non_face
    return None
