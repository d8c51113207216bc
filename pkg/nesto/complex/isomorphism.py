import logging
from collections import deque
from typing import Hashable, Optional

from ..config import get_config
from ..errors import SearchBudgetExceeded
from .simplicial import SimplicialComplex, vertex_key

logger = logging.getLogger(__name__)


def _signature(c: SimplicialComplex) -> dict:
    skeleton = c.one_skeleton()
    return {v: (len(c.star_facets(v)), skeleton.degree(v)) for v in c.vertices}


def _search_order(c: SimplicialComplex) -> list:
    """Breadth-first over the 1-skeleton from the canonical first vertex of each component."""
    skeleton = c.one_skeleton()
    order, seen = [], set()
    for start in c.vertices:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(skeleton.neighbors(v), key=vertex_key):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def check_vertex_map(c1: SimplicialComplex, c2: SimplicialComplex, mapping: dict) -> bool:
    """True if `mapping` is a vertex bijection carrying the facets of c1 onto the facets of c2."""
    if set(mapping) != set(c1.vertices):
        return False
    if len(set(mapping.values())) != len(mapping) or set(mapping.values()) != set(c2.vertices):
        return False
    image = {frozenset(mapping[v] for v in f) for f in c1.facets}
    return image == set(c2.facets)


def is_isomorphic(
    c1: SimplicialComplex,
    c2: SimplicialComplex,
    budget: Optional[int] = None,
) -> Optional[dict[Hashable, Hashable]]:
    """Backtracking search for a facet-preserving vertex bijection c1 -> c2.

    Candidates are pruned by (facet count, skeleton degree) signatures, and every
    partial assignment must send faces to faces in both directions.
    """
    if budget is None:
        budget = get_config().search_budget
    if len(c1.vertices) != len(c2.vertices) or len(c1.facets) != len(c2.facets):
        return None
    if sorted(len(f) for f in c1.facets) != sorted(len(f) for f in c2.facets):
        return None

    sig1, sig2 = _signature(c1), _signature(c2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None

    order = _search_order(c1)
    candidates = {
        v: [w for w in c2.vertices if sig2[w] == sig1[v]]
        for v in order
    }
    facets1 = {v: c1.star_facets(v) for v in c1.vertices}
    facets2 = {w: c2.star_facets(w) for w in c2.vertices}

    forward: dict = {}
    backward: dict = {}
    visited = 0

    def consistent(v, w) -> bool:
        for f in facets1[v]:
            image = frozenset(forward[u] for u in f if u in forward)
            if not c2.is_face(image):
                return False
        for g in facets2[w]:
            preimage = frozenset(backward[u] for u in g if u in backward)
            if not c1.is_face(preimage):
                return False
        return True

    def extend(k: int) -> bool:
        nonlocal visited
        if k == len(order):
            return check_vertex_map(c1, c2, forward)
        v = order[k]
        for w in candidates[v]:
            if w in backward:
                continue
            visited += 1
            if visited > budget:
                raise SearchBudgetExceeded(budget)
            forward[v], backward[w] = w, v
            if consistent(v, w) and extend(k + 1):
                return True
            del forward[v], backward[w]
        return False

    if extend(0):
        logger.debug(f"isomorphism found after {visited} nodes")
        return dict(forward)
    return None
