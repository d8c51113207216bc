import logging
from typing import Sequence

import networkx as nx

from ..core.building_set import BuildingSet, require_chordal
from ..counting.face_numbers import gamma_extended, h_extended_enum
from ..counting.polynomial import ZERO, IntPolynomial, T
from ..counting.report import IdentityReport
from ..errors import LeapOutOfRange, NotIntermediary
from .partial_perms import (
    extended_b_permutations,
    is_extended_b_permutation,
    require_connected,
    require_extended_b_permutation,
)
from .topography import Landform, Permutation, des, entries_of, intermediary_entries, leap, leap_range, topography

logger = logging.getLogger(__name__)


def _require_descent_setting(b: BuildingSet):
    require_connected(b)
    require_chordal(b)


def hop_displacement(b: BuildingSet, w: Sequence[int], a: int) -> int:
    """Smallest |r| leap of a, in the direction its landform dictates, that stays in 𝔖□_{n+1}(b)."""
    _require_descent_setting(b)
    w = require_extended_b_permutation(b, w)
    kind = topography(w).get(a)
    if kind not in (Landform.ASCENT, Landform.DESCENT):
        raise NotIntermediary(tuple(w), a)
    low, high = leap_range(w, a)
    steps = range(1, high + 1) if kind == Landform.ASCENT else range(-1, low - 1, -1)
    for r in steps:
        if is_extended_b_permutation(b, leap(w, a, r)):
            return r
    raise LeapOutOfRange(high + 1 if kind == Landform.ASCENT else low - 1, low, high)


def hop(b: BuildingSet, w: Sequence[int], a: int) -> Permutation:
    r = hop_displacement(b, w, a)
    return leap(Permutation(w), a, r)


def is_hat(w: Sequence[int]) -> bool:
    """No final descent and no double descent, i.e. no descent-intermediary entry."""
    return not entries_of(w, Landform.DESCENT)


def hop_classes(b: BuildingSet) -> list[list[Permutation]]:
    """Hop-equivalence classes of 𝔖□_{n+1}(b), each sorted, ordered by their smallest word."""
    _require_descent_setting(b)
    words = extended_b_permutations(b)
    g = nx.Graph()
    g.add_nodes_from(words)
    for w in words:
        for a in intermediary_entries(w):
            g.add_edge(w, hop(b, w, a))
    classes = [sorted(c) for c in nx.connected_components(g)]
    return sorted(classes, key=lambda c: c[0])


def h_via_descents(b: BuildingSet) -> IntPolynomial:
    _require_descent_setting(b)
    total = ZERO
    for w in extended_b_permutations(b):
        total = total + T ** des(w)
    return total


def gamma_via_descents(b: BuildingSet) -> IntPolynomial:
    _require_descent_setting(b)
    total = ZERO
    for w in extended_b_permutations(b):
        if is_hat(w):
            total = total + T ** des(w)
    return total


def _class_sum(words: list[Permutation]) -> IntPolynomial:
    total = ZERO
    for u in words:
        total = total + T ** des(u)
    return total


def hop_report(b: BuildingSet) -> IdentityReport:
    """Descent-statistic h and γ against enumeration, plus the hop laws on every word.

    Each class must sum to t^des(w)(1+t)^(n-2des(w)) for its hat word w; the
    (t-1) reading of that identity is evaluated too and reported under `flagged`.
    """
    _require_descent_setting(b)
    report = IdentityReport(b.label())
    n = b.n
    words = extended_b_permutations(b)

    h = h_via_descents(b)
    gamma = gamma_via_descents(b)
    report.record("h_matches_enumeration", h == h_extended_enum(b), {"h": h.to_list()})
    report.record("gamma_matches_enumeration", gamma == gamma_extended(b), {"gamma": gamma.to_list()})

    involution = flips = odd = commute = True
    for w in words:
        middle = intermediary_entries(w)
        hopped = {}
        for a in middle:
            r = hop_displacement(b, w, a)
            u = leap(w, a, r)
            hopped[a] = u
            odd = odd and r % 2 == 1
            flips = flips and topography(u)[a] != topography(w)[a]
            involution = involution and hop(b, u, a) == w
        for a in middle:
            for c in middle:
                if a >= c:
                    continue
                try:
                    left = hop(b, hopped[c], a)
                    right = hop(b, hopped[a], c)
                except NotIntermediary:
                    continue
                commute = commute and left == right
    report.record("hop_is_involution", involution)
    report.record("hop_flips_landform", flips)
    report.record("hop_displacement_odd", odd)
    report.record("hops_commute", commute)

    classes = hop_classes(b)
    one_hat = True
    plus_form = minus_form = True
    for cls in classes:
        hats = [w for w in cls if is_hat(w)]
        if len(hats) != 1:
            one_hat = False
            continue
        d = des(hats[0])
        total = _class_sum(cls)
        plus_form = plus_form and total == T ** d * (T + 1) ** (n - 2 * d)
        minus_form = minus_form and total == T ** d * (T - 1) ** (n - 2 * d)
    report.record("one_hat_word_per_class", one_hat, {"classes": len(classes)})
    report.record("class_identity", plus_form)
    report.flag("class_identity_t_minus_one", minus_form)
    logger.info(f"{len(words)} extended permutations in {len(classes)} hop classes for {b.label()}")
    return report
