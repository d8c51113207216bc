import logging
from itertools import permutations
from typing import Iterator, Sequence

from ..complex.nested import extended_facets
from ..core.building_set import BuildingSet, Subset, check_ground_size, is_chordal, subsets_of
from ..counting.report import IdentityReport
from ..errors import NotConnected, NotExtendedBPermutation, fmt_set
from .forests import RootedForest, extended_forests, forest_to_nested, nested_to_forest
from .topography import PartialPermutation, Permutation, des, descents

logger = logging.getLogger(__name__)


def require_connected(b: BuildingSet):
    if not b.is_connected and b.n > 0:
        raise NotConnected(list(b.maxima))


def _require_standard_ground(b: BuildingSet):
    if b.ground != tuple(range(1, b.n + 1)):
        raise ValueError(f"expected the ground set 1..{b.n}, got {fmt_set(b.ground)}")


def _check_entries(b: BuildingSet, w: Sequence[int]) -> PartialPermutation:
    w = PartialPermutation(w)
    if not w.entries <= b.ground_set:
        raise ValueError(f"{list(w)} leaves the ground set {fmt_set(b.ground)}")
    return w


def component_of(b: BuildingSet, s: Subset, x: int) -> Subset:
    """Maximal element of b|s containing x."""
    for m in b.restriction(s).maxima:
        if x in m:
            return m
    raise ValueError(f"{x} is not in {fmt_set(s)}")


def all_partial_permutations(n: int) -> Iterator[PartialPermutation]:
    """The whole of 𝔓_n, shortest words first."""
    for s in subsets_of(range(1, n + 1)):
        for word in permutations(sorted(s)):
            yield PartialPermutation(word)


def psi_square(b: BuildingSet, w: Sequence[int]) -> RootedForest:
    """Extended B-forest of a partial permutation: one tree per component of b|S,
    rooted at the last entry of the component subword, grown recursively below it."""
    w = _check_entries(b, w)
    parent: dict[int, int] = {}

    def grow(word: tuple[int, ...]) -> list[int]:
        roots = []
        for m in b.restriction(set(word)).maxima:
            sub = tuple(x for x in word if x in m)
            root = sub[-1]
            for child in grow(sub[:-1]):
                parent[child] = root
            roots.append(root)
        return roots

    grow(tuple(w))
    return RootedForest.build(w.entries, parent)


def is_b_partial(b: BuildingSet, w: Sequence[int]) -> bool:
    """Each entry lies in the same component as the running maximum of its prefix."""
    require_connected(b)
    w = _check_entries(b, w)
    for i in range(len(w)):
        prefix = frozenset(w[: i + 1])
        if w[i] not in component_of(b, prefix, max(prefix)):
            return False
    return True


def _pick_backwards(b: BuildingSet, remaining: Subset) -> Iterator[tuple[int, ...]]:
    if not remaining:
        yield ()
        return
    for last in sorted(component_of(b, remaining, max(remaining))):
        for head in _pick_backwards(b, remaining - {last}):
            yield head + (last,)


def b_partial_permutations_on(b: BuildingSet, s: Subset) -> list[PartialPermutation]:
    """Words on S produced by the backward pick: w(s_k) from the component of max S, and so on."""
    require_connected(b)
    return [PartialPermutation(w) for w in _pick_backwards(b, frozenset(s))]


def b_partial_permutations(b: BuildingSet) -> list[PartialPermutation]:
    require_connected(b)
    check_ground_size(b.n)
    result = []
    for s in subsets_of(b.ground):
        result.extend(b_partial_permutations_on(b, s))
    return result


def lex_min_forward(f: RootedForest) -> PartialPermutation:
    """Repeatedly take the smallest leaf."""
    word = []
    while len(f):
        leaf = min(f.leaves())
        word.append(leaf)
        f = f.remove(leaf)
    return PartialPermutation(word)


def lex_min_backward(f: RootedForest) -> PartialPermutation:
    """Repeatedly peel the root of the tree holding the current maximum."""
    word = []
    while len(f):
        root = f.root_of(max(f.nodes))
        word.append(root)
        f = f.remove(root)
    return PartialPermutation(reversed(word))


def lex_min_extension(f: RootedForest) -> PartialPermutation:
    backward = lex_min_backward(f)
    forward = lex_min_forward(f)
    if backward != forward:
        raise AssertionError(f"linear extensions disagree: {list(backward)} vs {list(forward)}")
    return backward


def phi(w: Sequence[int], n: int) -> Permutation:
    """Append [n+1] minus the entries of w in descending order."""
    w = PartialPermutation(w)
    if any(x > n for x in w):
        raise ValueError(f"{list(w)} has entries beyond {n}")
    tail = sorted(set(range(1, n + 2)) - w.entries, reverse=True)
    return Permutation((*w, *tail))


def phi_inverse(w: Sequence[int], n: int) -> PartialPermutation:
    w = Permutation(w)
    if len(w) != n + 1:
        raise ValueError(f"{list(w)} is not a permutation of 1..{n + 1}")
    return PartialPermutation(w[: w.index(n + 1)])


def extended_b_permutations(b: BuildingSet) -> list[Permutation]:
    _require_standard_ground(b)
    return [phi(w, b.n) for w in b_partial_permutations(b)]


def is_extended_b_permutation(b: BuildingSet, w: Sequence[int]) -> bool:
    _require_standard_ground(b)
    try:
        w = Permutation(w)
    except ValueError:
        return False
    if len(w) != b.n + 1:
        return False
    k = w.index(b.n + 1)
    tail = list(w[k:])
    if tail != sorted(tail, reverse=True):
        return False
    return is_b_partial(b, w[:k])


def require_extended_b_permutation(b: BuildingSet, w: Sequence[int]) -> Permutation:
    if not is_extended_b_permutation(b, w):
        raise NotExtendedBPermutation(tuple(w))
    return Permutation(w)


def bijection_report(b: BuildingSet) -> IdentityReport:
    """Facets of N□(b), extended B-forests, B-partial and extended B-permutations line up."""
    require_connected(b)
    _require_standard_ground(b)
    report = IdentityReport(b.label())
    n = b.n
    facets = extended_facets(b)
    forests = extended_forests(b)
    partial = b_partial_permutations(b)
    extended = extended_b_permutations(b)
    counts = {"facets": len(facets), "forests": len(forests), "partial": len(partial), "extended": len(extended)}
    report.record("cardinalities_agree", len(set(counts.values())) == 1, counts)

    report.record(
        "forest_round_trip",
        all(nested_to_forest(b, forest_to_nested(b, f)) == f for f in forests),
    )
    generated = set(partial)
    everything = list(all_partial_permutations(n))
    report.record("predicate_matches_generator", all(is_b_partial(b, w) == (w in generated) for w in everything))
    report.record("psi_surjective", {psi_square(b, w) for w in everything} == set(forests))
    report.record("lex_min_inverts_psi", all(lex_min_extension(psi_square(b, w)) == w for w in partial))
    report.record("psi_inverts_lex_min", all(psi_square(b, lex_min_extension(f)) == f for f in forests))
    report.record(
        "phi_descent_shift",
        all(des(phi(w, n)) == des(w) + n - len(w) for w in everything),
    )
    report.record("phi_injective", len({phi(w, n) for w in everything}) == len(everything))
    if is_chordal(b):
        report.record(
            "word_and_forest_descents_agree",
            all(descents(w) == descents(psi_square(b, w)) for w in partial),
        )
    logger.info(f"bijection chain on {b.label()}: {counts}")
    return report
