import logging

from ..complex.nested import extended_nested_complex, nested_complex
from ..complex.simplicial import Design
from ..core.building_set import BuildingSet, Subset, is_interval, validate
from ..counting.face_numbers import f_of_dual
from ..counting.report import IdentityReport
from ..errors import NotIntervalBuildingSet, PreconditionIntervalsMissing
from .vertex_map import VertexMap

logger = logging.getLogger(__name__)


def interval(a: int, b: int) -> Subset:
    """[a, b] as a frozenset; empty when a > b."""
    return frozenset(range(a, b + 1))


def _require_standard_ground(b: BuildingSet):
    if b.ground != tuple(range(1, b.n + 1)):
        raise ValueError(f"expected ground 1..{b.n}, got {list(b.ground)}")


def require_interval_building_set(b: BuildingSet):
    _require_standard_ground(b)
    for member in b:
        if not is_interval(member):
            raise NotIntervalBuildingSet(member)


def _require_intervals(b: BuildingSet, wanted):
    for s in wanted:
        if s not in b:
            raise PreconditionIntervalsMissing(s)


def prefixes(n: int) -> list[Subset]:
    return [interval(1, k) for k in range(1, n + 1)]


def suffixes(n: int) -> list[Subset]:
    return [interval(k, n) for k in range(1, n + 1)]


def rotate(s: Subset, n: int) -> Subset:
    """Rotation on intervals of [n]; the empty set and [1, n] are swapped sentinels."""
    if not s:
        return interval(1, n)
    a, b = min(s), max(s)
    if a > 1:
        return interval(a - 1, b - 1)
    if b < n:
        return interval(b + 1, n)
    return frozenset()


def reflect(s: Subset, n: int) -> Subset:
    return frozenset(n + 1 - i for i in s)


def interval_extension(b: BuildingSet) -> tuple[BuildingSet, VertexMap]:
    """b' = b ∪ {[k, n+1]} with N□(b) ≅ N(b'): members fixed, x_i -> [i+1, n+1]."""
    require_interval_building_set(b)
    n = b.n
    extended = validate(list(b) + suffixes(n + 1), n + 1)

    def image(v):
        if isinstance(v, Design):
            return interval(v.index + 1, n + 1)
        return v

    vmap = VertexMap.from_function(extended_nested_complex(b).vertices, image)
    return extended, vmap


def interval_rotation(b: BuildingSet) -> tuple[BuildingSet, VertexMap]:
    """Needs every [1, k]. Returns Φ(b) and the vertex map N(b) -> N(Φ(b))."""
    require_interval_building_set(b)
    n = b.n
    _require_intervals(b, prefixes(n))
    rotated = validate([rotate(s, n) for s in b if len(s) < n] + [interval(1, n)], n)
    vmap = VertexMap.from_function(nested_complex(b).vertices, lambda s: rotate(s, n))
    return rotated, vmap


def extended_interval_rotation(b: BuildingSet) -> tuple[BuildingSet, VertexMap]:
    """Needs every [1, k] and [k, n]. Returns Φ□(b) and the vertex map N□(b) -> N□(Φ□(b)).

    [a, b] -> [a-1, b-1] for a > 1, [1, b] -> x_b, x_b -> [b, n].
    """
    require_interval_building_set(b)
    n = b.n
    _require_intervals(b, prefixes(n) + suffixes(n))
    rotated = validate([interval(min(s) - 1, max(s) - 1) for s in b if min(s) > 1] + suffixes(n), n)

    def image(v):
        if isinstance(v, Design):
            return interval(v.index, n)
        if min(v) > 1:
            return interval(min(v) - 1, max(v) - 1)
        return Design(max(v))

    vmap = VertexMap.from_function(extended_nested_complex(b).vertices, image)
    return rotated, vmap


def flip(b: BuildingSet) -> tuple[BuildingSet, VertexMap]:
    """Relabel i -> n+1-i; the map covers every vertex of N□(b)."""
    _require_standard_ground(b)
    n = b.n
    flipped = validate([reflect(s, n) for s in b], n)

    def image(v):
        if isinstance(v, Design):
            return Design(n + 1 - v.index)
        return reflect(v, n)

    vmap = VertexMap.from_function(extended_nested_complex(b).vertices, image)
    return flipped, vmap


def interval_report(b: BuildingSet) -> IdentityReport:
    """Every interval construction that applies to b, each checked as a simplicial isomorphism."""
    require_interval_building_set(b)
    n = b.n
    report = IdentityReport(b.label())
    source = extended_nested_complex(b)

    extended, vmap = interval_extension(b)
    target = nested_complex(extended)
    report.record("extension_is_isomorphism", vmap.confirms(source, target))
    report.record("extension_restricts_back", extended.restriction(range(1, n + 1)) == b)
    report.record("extension_keeps_f", f_of_dual(source) == f_of_dual(target, n))

    flipped, fmap = flip(b)
    report.record("flip_is_isomorphism", fmap.confirms(source, extended_nested_complex(flipped)))
    report.record("flip_is_involution", flip(flipped)[0] == b)

    if all(s in b for s in prefixes(n)):
        rotated, rmap = interval_rotation(b)
        nested = nested_complex(b)
        report.record("rotation_is_isomorphism", rmap.confirms(nested, nested_complex(rotated)))
        report.record("rotation_keeps_f", f_of_dual(nested, n - 1) == f_of_dual(nested_complex(rotated), n - 1))

    if all(s in b for s in prefixes(n) + suffixes(n)):
        rotated, emap = extended_interval_rotation(b)
        report.record("extended_rotation_is_isomorphism", emap.confirms(source, extended_nested_complex(rotated)))

    logger.debug(f"interval report for {b.label()}: ok={report.ok}")
    return report
