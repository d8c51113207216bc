from .vertex_map import VertexMap
from .intervals import (
    interval,
    rotate,
    reflect,
    require_interval_building_set,
    interval_extension,
    interval_rotation,
    extended_interval_rotation,
    flip,
    interval_report,
)
from .spider import (
    SpiderSpec,
    OctopusSpec,
    spider_violation,
    check_spider,
    octopus_leg,
    spider_to_octopus,
    spider_flip,
    spider_report,
)
from .fixtures import non_strong_source, non_strong_target, non_strong_map, exotic_nested_map, fixture_report

__all__ = [
    'VertexMap', 'interval', 'rotate', 'reflect', 'require_interval_building_set',
    'interval_extension', 'interval_rotation', 'extended_interval_rotation', 'flip', 'interval_report',
    'SpiderSpec', 'OctopusSpec', 'spider_violation', 'check_spider', 'octopus_leg',
    'spider_to_octopus', 'spider_flip', 'spider_report',
    'non_strong_source', 'non_strong_target', 'non_strong_map', 'exotic_nested_map', 'fixture_report',
]
