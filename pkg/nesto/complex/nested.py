import logging
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable

from ..core.building_set import BuildingSet, Subset, check_ground_size
from ..errors import MemberNotInBuildingSet
from .simplicial import Design, SimplicialComplex

logger = logging.getLogger(__name__)


def _check_members(b: BuildingSet, members: Iterable[Iterable[int]]) -> list[Subset]:
    result = []
    for m in members:
        m = frozenset(m)
        if m not in b.members:
            raise MemberNotInBuildingSet(m)
        result.append(m)
    return result


def has_disjoint_union_in(b: BuildingSet, members: list[Subset]) -> bool:
    """True if some k >= 2 pairwise-disjoint members have their union in b."""

    def extend(start: int, union: Subset, count: int) -> bool:
        for k in range(start, len(members)):
            m = members[k]
            if m & union:
                continue
            grown = union | m
            if count + 1 >= 2 and grown in b.members:
                return True
            if extend(k + 1, grown, count + 1):
                return True
        return False

    return extend(0, frozenset(), 0)


def nested_collection_violation(b: BuildingSet, members: list[Subset]) -> str | None:
    for first, second in combinations(members, 2):
        if first & second and not (first <= second or second <= first):
            return "N1"
    if has_disjoint_union_in(b, members):
        return "N2"
    return None


def is_nested(b: BuildingSet, members: Iterable[Iterable[int]]) -> bool:
    """(N1)+(N2) over B minus its maximal elements: a face of N(B)."""
    members = _check_members(b, members)
    if any(m in b.maxima for m in members):
        return False
    return nested_collection_violation(b, sorted(set(members), key=sorted)) is None


def is_extended_nested(
    b: BuildingSet,
    members: Iterable[Iterable[int]],
    designs: Iterable[int | Design],
) -> bool:
    """(E1) members nested (maxima allowed) and (E2) no member contains a design index: a face of N□(B)."""
    members = _check_members(b, members)
    indices = {d.index if isinstance(d, Design) else int(d) for d in designs}
    for i in indices:
        if i not in b.ground_set:
            raise ValueError(f"design index {i} is outside the ground set")
    if nested_collection_violation(b, sorted(set(members), key=sorted)) is not None:
        return False
    return not any(i in m for m in members for i in indices)


def split_face(face: Iterable) -> tuple[list[Subset], list[int]]:
    members, designs = [], []
    for v in face:
        if isinstance(v, Design):
            designs.append(v.index)
        else:
            members.append(frozenset(v))
    return members, designs


@lru_cache(maxsize=None)
def maximal_nested_with_maxima(b: BuildingSet) -> tuple[frozenset, ...]:
    """Maximal nested collections of b that contain every maximal element (the B-forests).

    For each component M the top of the tree is some r in M; below it sit the
    forests of B restricted to M minus r. Memoized on the (hashable) restriction.
    """
    if b.n == 0:
        return (frozenset(),)
    per_component = []
    for m in b.maxima:
        trees = []
        for root in sorted(m):
            below = b.restriction(m - {root})
            for forest in maximal_nested_with_maxima(below):
                trees.append(forest | {m})
        per_component.append(trees)
    return tuple(frozenset().union(*choice) for choice in product(*per_component))


def nested_complex(b: BuildingSet) -> SimplicialComplex:
    check_ground_size(b.n)
    maxima = set(b.maxima)
    facets = [f - maxima for f in maximal_nested_with_maxima(b)]
    return SimplicialComplex.from_facets(facets)


def extended_facets(b: BuildingSet) -> list[frozenset]:
    """Facets of N□(b): for each support S, the B|_S-forests plus designs for the complement."""
    facets = []
    ground = b.ground
    for k in range(len(ground) + 1):
        for support in combinations(ground, k):
            support = frozenset(support)
            designs = frozenset(Design(i) for i in ground if i not in support)
            for forest in maximal_nested_with_maxima(b.restriction(support)):
                facets.append(forest | designs)
    return facets


def extended_nested_complex(b: BuildingSet) -> SimplicialComplex:
    check_ground_size(b.n)
    complex_ = SimplicialComplex.from_facets(extended_facets(b))
    logger.debug(f"N□ of {b.label()} has {len(complex_)} facets")
    return complex_


def support(face: Iterable) -> frozenset[int]:
    """Ground elements covered by the members of an extended face."""
    members, _ = split_face(face)
    return frozenset().union(*members) if members else frozenset()
