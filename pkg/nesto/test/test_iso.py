import pytest

from nesto.complex import Design, extended_nested_complex, nested_complex
from nesto.core import (
    complete_building_set,
    path_building_set,
    singleton_building_set,
    star_building_set,
    validate,
)
from nesto.errors import NotIntervalBuildingSet, NotSpider, PreconditionIntervalsMissing
from nesto.iso import (
    OctopusSpec,
    SpiderSpec,
    VertexMap,
    check_spider,
    exotic_nested_map,
    extended_interval_rotation,
    fixture_report,
    flip,
    interval,
    interval_extension,
    interval_report,
    interval_rotation,
    non_strong_map,
    non_strong_source,
    non_strong_target,
    reflect,
    require_interval_building_set,
    rotate,
    spider_flip,
    spider_report,
    spider_to_octopus,
    spider_violation,
)


def f(*items):
    return frozenset(items)


PREFIXES_ONLY = validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)

WORKED_SPIDER = SpiderSpec((
    validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3),
    validate([[1], [2], [1, 2]], 2),
    validate([[1]], 1),
))


def test_interval_helpers():
    assert interval(2, 4) == f(2, 3, 4)
    assert interval(3, 2) == frozenset()
    assert reflect(f(1, 2), 3) == f(2, 3)


def test_rotation_swaps_the_sentinels():
    assert rotate(f(2, 3), 3) == f(1, 2)
    assert rotate(f(1), 3) == f(2, 3)
    assert rotate(f(1, 2, 3), 3) == frozenset()
    assert rotate(frozenset(), 3) == f(1, 2, 3)


def test_vertex_map_algebra():
    path = path_building_set(3)
    flipped, vmap = flip(path)
    assert flipped == path
    assert vmap(f(1)) == f(3)
    assert vmap(Design(1)) == Design(3)
    assert vmap.inverse() == vmap
    assert all(s == t for s, t in vmap.then(vmap).pairs)
    assert vmap.confirms(extended_nested_complex(path), extended_nested_complex(flipped))
    assert not vmap.restrict([f(1)]).confirms(extended_nested_complex(path), extended_nested_complex(flipped))
    assert vmap.to_json()[0] == ["{1}", "{3}"]


def test_vertex_map_inverse_needs_injectivity():
    with pytest.raises(ValueError):
        VertexMap.from_dict({f(1): f(1), f(2): f(1)}).inverse()


def test_interval_extension_appends_suffixes():
    extended, vmap = interval_extension(PREFIXES_ONLY)
    assert extended.n == 4
    assert f(2, 3, 4) in extended and f(4) in extended
    assert vmap(Design(1)) == f(2, 3, 4)
    assert vmap(f(1, 2)) == f(1, 2)


def test_interval_rotation_needs_prefixes():
    rotated, vmap = interval_rotation(PREFIXES_ONLY)
    assert vmap.confirms(nested_complex(PREFIXES_ONLY), nested_complex(rotated))
    with pytest.raises(PreconditionIntervalsMissing):
        interval_rotation(validate([[1], [2], [3], [2, 3], [1, 2, 3]], 3))


def test_extended_rotation_of_the_path():
    path = path_building_set(3)
    rotated, vmap = extended_interval_rotation(path)
    assert rotated == path
    assert vmap(f(1, 2)) == Design(2)
    assert vmap(Design(2)) == f(2, 3)
    with pytest.raises(PreconditionIntervalsMissing):
        extended_interval_rotation(PREFIXES_ONLY)


def test_non_interval_member_is_rejected():
    b = validate([[1], [2], [3], [1, 3], [1, 2, 3]], 3)
    with pytest.raises(NotIntervalBuildingSet):
        require_interval_building_set(b)
    with pytest.raises(NotIntervalBuildingSet):
        interval_report(b)


@pytest.mark.parametrize("b", [path_building_set(3), path_building_set(4), PREFIXES_ONLY], ids=["P3", "P4", "prefixes"])
def test_interval_report(b):
    report = interval_report(b)
    assert report.ok, report.first_failure


def test_interval_report_skips_missing_suffixes():
    report = interval_report(PREFIXES_ONLY)
    assert "rotation_is_isomorphism" in report.checks
    assert "extended_rotation_is_isomorphism" not in report.checks


def test_complete_spider_gives_the_star():
    spider = SpiderSpec.complete(3)
    assert spider.building_set == complete_building_set(3)
    octopus, vmap = spider_to_octopus(spider)
    assert octopus.building_set == star_building_set(3)
    assert vmap.confirms(extended_nested_complex(spider.building_set), nested_complex(octopus.building_set))


def test_single_path_leg_gives_a_longer_path():
    spider = SpiderSpec((path_building_set(3),))
    octopus, _ = spider_to_octopus(spider)
    assert octopus.building_set == path_building_set(4)


def test_worked_spider_octopus():
    assert WORKED_SPIDER.lengths == (3, 2, 1)
    assert WORKED_SPIDER.firsts() == [1, 4, 6]
    octopus, _ = spider_to_octopus(WORKED_SPIDER)
    assert octopus.lengths == (3, 2, 1)
    assert octopus.n == 7
    b = octopus.building_set
    for cup in [f(2), f(2, 3), f(2, 3, 4), f(5), f(5, 6), f(7)]:
        assert cup in b
    assert len([s for s in b if 1 in s]) == 24


@pytest.mark.parametrize(
    "spider",
    [SpiderSpec.complete(2), SpiderSpec.complete(3), SpiderSpec((path_building_set(3),)), WORKED_SPIDER],
    ids=["K2", "K3", "P3-leg", "worked"],
)
def test_spider_report(spider):
    report = spider_report(spider)
    assert report.ok, report.first_failure
    assert "octopus_holds_every_suffix" in report.flagged


def test_spider_flip_is_an_isomorphism():
    flipped, vmap = spider_flip(WORKED_SPIDER)
    assert flipped.lengths == WORKED_SPIDER.lengths
    assert vmap.confirms(nested_complex(WORKED_SPIDER.building_set), nested_complex(flipped.building_set))


def test_spider_conditions():
    assert spider_violation(complete_building_set(3), [1, 1, 1]) is None
    assert check_spider(complete_building_set(3), [1, 1, 1]) == SpiderSpec.complete(3)
    assert spider_violation(path_building_set(3), [1, 2]) is None
    with pytest.raises(NotSpider) as info:
        check_spider(singleton_building_set(2), [1, 1])
    assert info.value.condition == 2
    with pytest.raises(NotSpider):
        check_spider(complete_building_set(3), [1, 1])


def test_spider_spec_needs_legs():
    with pytest.raises(NotSpider):
        SpiderSpec(())
    with pytest.raises(NotSpider):
        SpiderSpec((singleton_building_set(2),))


def test_spider_json_round_trip():
    assert SpiderSpec.from_json(WORKED_SPIDER.to_json()) == WORKED_SPIDER


def test_octopus_from_spider_legs_round_trips():
    octopus, _ = spider_to_octopus(WORKED_SPIDER)
    assert OctopusSpec.from_json(octopus.to_json()) == octopus


def test_non_strong_fixture():
    vmap = non_strong_map()
    assert vmap(f(1, 2, 3)) == f(1, 3)
    assert vmap.confirms(extended_nested_complex(non_strong_source()), nested_complex(non_strong_target()))
    extended, composite = exotic_nested_map()
    assert extended.n == 4
    assert composite.confirms(nested_complex(non_strong_target()), nested_complex(extended))
    assert fixture_report().ok
