import logging
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Optional, Sequence

import numpy as np

from ..complex.nested import extended_nested_complex
from ..complex.simplicial import Design
from ..config import get_config
from ..core.building_set import BuildingSet
from ..core.graphs import complete_building_set
from ..counting.report import IdentityReport
from ..errors import SizeCap
from ..perms.partial_perms import all_partial_permutations, b_partial_permutations, component_of, phi
from ..perms.topography import PartialPermutation, Permutation
from .flip_poset import flip_poset
from .poset import Poset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InversionSet:
    """Value pairs (a, b) with a > b and a written before b."""

    pairs: frozenset[tuple[int, int]]

    @classmethod
    def from_word(cls, w: Sequence[int]) -> "InversionSet":
        return cls(frozenset((a, b) for a, b in combinations(w, 2) if a > b))

    def __le__(self, other: "InversionSet") -> bool:
        return self.pairs <= other.pairs

    def __len__(self) -> int:
        return len(self.pairs)


def _inversion_masks(words: list[Sequence[int]], m: int) -> np.ndarray:
    """One bit per value pair (a > b) of 1..m, packed into uint64."""
    bit = {pair: k for k, pair in enumerate((a, b) for a in range(1, m + 1) for b in range(1, a))}
    masks = np.zeros(len(words), dtype=np.uint64)
    for i, w in enumerate(words):
        value = 0
        for pair in InversionSet.from_word(w).pairs:
            value |= 1 << bit[pair]
        masks[i] = value
    return masks


def _containment(masks: np.ndarray) -> np.ndarray:
    return (masks[:, None] & ~masks[None, :]) == 0


def weak_order(m: int) -> Poset:
    """𝔖_m ordered by containment of inversion sets."""
    cap = get_config().weak_order_max_m
    if m > cap:
        raise SizeCap(m, cap, "weak order")
    words = [Permutation(w) for w in permutations(range(1, m + 1))]
    return Poset(words, _containment(_inversion_masks(words, m)))


def partial_weak_order(n: int, b: Optional[BuildingSet] = None) -> Poset:
    """𝔓_n (or the B-partial permutations of b) with π <= σ iff φ(π) <= φ(σ) in weak order."""
    cap = get_config().partial_weak_order_max_n
    if n > cap:
        raise SizeCap(n, cap, "partial weak order")
    if b is None:
        words = list(all_partial_permutations(n))
    else:
        if b.n != n:
            raise ValueError(f"building set lives on {b.n} elements, not {n}")
        words = b_partial_permutations(b)
    images = [phi(w, n) for w in words]
    poset = Poset(words, _containment(_inversion_masks(images, n + 1)))
    logger.debug(f"partial weak order on {len(poset)} words, n={n}")
    return poset


def facet_of_word(b: BuildingSet, w: Sequence[int], extended: bool = True) -> frozenset:
    """F_w: for k = 1..r the member of b restricted to the first r-k+1 entries that is
    maximal and contains the last of them, plus designs for the unused elements.
    Without `extended` the maximal elements of b are dropped and no designs are added."""
    w = PartialPermutation(w)
    members = set()
    for length in range(len(w), 0, -1):
        prefix = frozenset(w[:length])
        members.add(component_of(b, prefix, w[length - 1]))
    if not extended:
        return frozenset(members - set(b.maxima))
    designs = {Design(i) for i in b.ground if i not in w.entries}
    return frozenset(members | designs)


def partial_weak_report(n: int) -> IdentityReport:
    """Lattice property, Möbius values, cover toggles and facet intervals on 𝔓_n against N□(B_{K_n})."""
    report = IdentityReport(f"P_{n}")
    poset = partial_weak_order(n)
    b = complete_building_set(n)
    complex_ = extended_nested_complex(b)

    lattice = poset.lattice_check()
    report.record("is_lattice", lattice["is_lattice"], lattice)
    values = poset.moebius_values()
    report.record("moebius_in_unit_range", values <= {-1, 0, 1}, {"values": sorted(values)})

    facets = {w: facet_of_word(b, w) for w in poset.elements}
    report.record("labelling_is_bijective", set(facets.values()) == set(complex_.facets))
    report.record(
        "covers_toggle_one_element",
        all(len(facets[x] - facets[y]) == 1 for x, y in poset.covers()),
    )

    intervals_ok = True
    for face in complex_.faces():
        holders = [w for w in poset.elements if face <= facets[w]]
        low = [w for w in holders if all(poset.le(w, v) for v in holders)]
        high = [w for w in holders if all(poset.le(v, w) for v in holders)]
        if len(low) != 1 or len(high) != 1 or set(poset.interval(low[0], high[0])) != set(holders):
            intervals_ok = False
            report.details["interval_failure"] = sorted(str(v) for v in face)
            break
    report.record("facets_over_a_face_form_an_interval", intervals_ok)
    return report


def flip_matches_weak_order(m: int) -> bool:
    """L(B_{K_m}) relabelled by F_w is the weak order on 𝔖_m."""
    b = complete_building_set(m)
    order = weak_order(m)
    # flip elements are maximal nested collections, maxima included
    maxima = frozenset(b.maxima)
    labels = {facet_of_word(b, w, extended=False) | maxima: w for w in order.elements}
    flips = flip_poset(b, extended=False)
    if set(labels) != set(flips.elements):
        return False
    return flips.relabel(labels).same_order(order)


def flip_report(n: int) -> IdentityReport:
    """L□(B_{K_n}) against the partial weak order, relabelled by F_π.

    The labelling is order preserving; the dual reading is evaluated too and
    reported under `flagged`.
    """
    report = IdentityReport(f"K_{n}")
    b = complete_building_set(n)
    order = partial_weak_order(n)
    labels = {facet_of_word(b, w): w for w in order.elements}
    flips = flip_poset(b, extended=True)
    report.record("labels_cover_facets", set(labels) == set(flips.elements))
    if not report.ok:
        return report
    relabelled = flips.relabel(labels)
    report.record("flip_poset_matches_partial_weak_order", relabelled.same_order(order))
    report.flag("flip_poset_is_dual", relabelled.same_order(order.dual()))
    return report
