import logging
from collections import defaultdict
from typing import Iterable

from ..complex.nested import extended_nested_complex, nested_complex, split_face
from ..complex.simplicial import Design, face_key
from ..core.building_set import BuildingSet, Subset
from ..errors import NotMaximal, fmt_set
from .poset import Poset

logger = logging.getLogger(__name__)


def top_of(collection: Iterable, member: Subset) -> int:
    """The unique element of `member` outside every smaller member of the collection."""
    members, _ = split_face(collection)
    rest = set(member)
    for j in members:
        if j < member:
            rest -= j
    if len(rest) != 1:
        raise NotMaximal(fmt_set(member))
    return rest.pop()


def maximal_collections(b: BuildingSet, extended: bool = True) -> list[frozenset]:
    """Facets of N□(b), or the maximal nested collections of b (maxima included)."""
    if extended:
        return list(extended_nested_complex(b).facets)
    maxima = frozenset(b.maxima)
    return sorted((f | maxima for f in nested_complex(b).facets), key=face_key)


def adjacent_pairs(collections: list[frozenset], fixed: frozenset = frozenset()) -> list[tuple[frozenset, frozenset]]:
    """Pairs of collections differing in exactly one element outside `fixed`."""
    by_ridge = defaultdict(list)
    for c in collections:
        for v in c - fixed:
            by_ridge[c - {v}].append(c)
    pairs = []
    for ridge in sorted(by_ridge, key=face_key):
        group = by_ridge[ridge]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                pairs.append((group[i], group[j]))
    return pairs


def orient_flip(n_face: frozenset, m_face: frozenset) -> tuple[frozenset, frozenset]:
    """Direction of the flip between two adjacent collections, as (source, target).

    Same support: N -> M when top_N(I) < top_M(J). Otherwise from the larger support to the smaller.
    """
    (i,) = n_face - m_face
    (j,) = m_face - n_face
    if isinstance(j, Design):
        return n_face, m_face
    if isinstance(i, Design):
        return m_face, n_face
    if top_of(n_face, i) < top_of(m_face, j):
        return n_face, m_face
    return m_face, n_face


def flip_edges(b: BuildingSet, extended: bool = True) -> list[tuple[frozenset, frozenset]]:
    collections = maximal_collections(b, extended)
    fixed = frozenset() if extended else frozenset(b.maxima)
    return [orient_flip(n_face, m_face) for n_face, m_face in adjacent_pairs(collections, fixed)]


def flip_poset(b: BuildingSet, extended: bool = True) -> Poset:
    """L□(b) (or L(b)): transitive closure of the flips; raises ValueError if they form a cycle."""
    collections = maximal_collections(b, extended)
    edges = flip_edges(b, extended)
    poset = Poset.from_edges(collections, edges)
    logger.debug(f"flip poset of {b.label()}: {len(poset)} collections, {len(edges)} flips")
    return poset
