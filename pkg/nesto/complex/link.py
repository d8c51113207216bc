import logging
from dataclasses import dataclass
from typing import Optional

from ..core.building_set import BuildingSet, Subset
from ..errors import VertexNotInComplex
from .nested import extended_nested_complex, nested_complex
from .simplicial import Design, SimplicialComplex, Vertex, join_all, vertex_label

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinkDecomposition:
    """The link of one vertex, symbolically and explicitly.

    Design vertex x_i of N□(B): `extended_parts` are the components of B|_{[n]∖i}.
    Member C: `nested_part` is B|_C and `extended_parts` holds the contraction B/C
    (extended for N□(B), plain for N(B)).
    """

    vertex: Vertex
    extended: bool
    nested_part: Optional[BuildingSet]
    extended_parts: tuple[BuildingSet, ...]
    explicit: SimplicialComplex
    join: SimplicialComplex
    verified: bool

    def to_json(self) -> dict:
        return {
            "vertex": vertex_label(self.vertex),
            "extended": self.extended,
            "nested_part": self.nested_part.to_json() if self.nested_part is not None else None,
            "parts": [p.to_json() for p in self.extended_parts],
            "facets": len(self.explicit),
            "verified": self.verified,
        }


def _lift_from_contraction(b: BuildingSet, c: Subset):
    """Vertex map B/C -> B: J' goes to J' ∪ C when that is a member, else to J' itself."""

    def lift(v):
        if isinstance(v, Design):
            return v
        grown = v | c
        return grown if grown in b.members else v

    return lift


def link(b: BuildingSet, vertex: Vertex, extended: bool = True) -> LinkDecomposition:
    complex_ = extended_nested_complex(b) if extended else nested_complex(b)
    if vertex not in complex_.vertices:
        raise VertexNotInComplex(vertex_label(vertex))
    explicit = complex_.link([vertex])

    if isinstance(vertex, Design):
        rest = b.restriction(b.ground_set - {vertex.index})
        parts = tuple(rest.components())
        joined = join_all(extended_nested_complex(p) for p in parts)
        decomposition = LinkDecomposition(vertex, extended, None, parts, explicit, joined, joined == explicit)
    else:
        c = frozenset(vertex)
        inner = b.restriction(c)
        outer = b.contraction(c)
        outer_complex = extended_nested_complex(outer) if extended else nested_complex(outer)
        lifted = outer_complex.relabel(_lift_from_contraction(b, c))
        joined = nested_complex(inner).join(lifted)
        decomposition = LinkDecomposition(vertex, extended, inner, (outer,), explicit, joined, joined == explicit)

    if not decomposition.verified:
        logger.warning(f"link of {vertex_label(vertex)} does not match its join decomposition")
    return decomposition
