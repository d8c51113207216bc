import logging
from itertools import product
from typing import Hashable, Iterable

from ..complex.nested import extended_nested_complex
from ..complex.simplicial import Design, SimplicialComplex, face_label
from ..core.building_set import BuildingSet, Subset, check_ground_size, subset_key
from ..errors import FaceMissing

logger = logging.getLogger(__name__)


def cross_polytope(ground: Iterable[int]) -> SimplicialComplex:
    """Boundary of the cross-polytope: e_i labelled {i}, -e_i labelled x_i."""
    choices = [(frozenset([i]), Design(i)) for i in sorted(ground)]
    return SimplicialComplex.from_facets(frozenset(pick) for pick in product(*choices))


def stellar_subdivide(c: SimplicialComplex, face: Iterable[Hashable], vertex: Hashable) -> SimplicialComplex:
    face = frozenset(face)
    if not c.is_face(face):
        raise FaceMissing(face_label(face))
    facets = []
    for f in c.facets:
        if face <= f:
            facets.extend((f - {u}) | {vertex} for u in face)
        else:
            facets.append(f)
    return SimplicialComplex.from_facets(facets)


def subdivision_order(b: BuildingSet) -> list[Subset]:
    """Non-singletons by decreasing cardinality, ties in canonical order."""
    members = [s for s in b if len(s) > 1]
    return sorted(members, key=lambda s: (-len(s), subset_key(s)))


def stellar_realization(b: BuildingSet) -> SimplicialComplex:
    """Cross-polytope boundary subdivided at {{i} : i ∈ I} for each non-singleton I, new vertex I."""
    check_ground_size(b.n)
    c = cross_polytope(b.ground)
    for member in subdivision_order(b):
        c = stellar_subdivide(c, (frozenset([i]) for i in member), member)
        logger.debug(f"subdivided at {sorted(member)}: {len(c)} facets")
    return c


def stellar_matches_nested(b: BuildingSet) -> bool:
    return set(stellar_realization(b).facets) == set(extended_nested_complex(b).facets)
