"""Isomorphisms that fall outside the interval and spider constructions."""
from ..complex.nested import extended_nested_complex, nested_complex
from ..complex.simplicial import Design
from ..core.building_set import BuildingSet, validate
from ..counting.report import IdentityReport
from .intervals import interval_extension
from .vertex_map import VertexMap


def non_strong_source() -> BuildingSet:
    return validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)


def non_strong_target() -> BuildingSet:
    return validate([[1], [2], [3], [4], [1, 3], [3, 4], [1, 3, 4], [2, 3, 4], [1, 2, 3, 4]], 4)


def non_strong_map() -> VertexMap:
    """N□({1,2,3,12,123}) -> N(non_strong_target()), sending [3] to a pair."""
    f = frozenset
    return VertexMap.from_dict({
        Design(1): f({2, 3, 4}),
        Design(2): f({3, 4}),
        Design(3): f({4}),
        f({1}): f({1, 3, 4}),
        f({2}): f({2}),
        f({3}): f({3}),
        f({1, 2}): f({1}),
        f({1, 2, 3}): f({1, 3}),
    })


def exotic_nested_map() -> tuple[BuildingSet, VertexMap]:
    """The extension of the source composed with the inverse of non_strong_map:
    an isomorphism between two nested complexes that is neither a rotation nor a spider flip."""
    extended, extension = interval_extension(non_strong_source())
    return extended, non_strong_map().inverse().then(extension)


def fixture_report() -> IdentityReport:
    report = IdentityReport("non-strong")
    source, target = non_strong_source(), non_strong_target()
    vmap = non_strong_map()
    report.record("map_is_isomorphism", vmap.confirms(extended_nested_complex(source), nested_complex(target)))
    report.record("ground_maps_to_pair", len(vmap(source.ground_set)) == 2)
    extended, composite = exotic_nested_map()
    report.record("composite_is_isomorphism", composite.confirms(nested_complex(target), nested_complex(extended)))
    return report
