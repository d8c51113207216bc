from .base import SuiteBase, Priority, CheckEvent
from .job import Job
from .instances import random_building_set, random_building_sets, graphical_family, instance_family, forests, named_graph_family
from .suites import CoreSuite, CountingSuite, PermsSuite, OrdersSuite, IsoSuite, GeomSuite, SUITES
from .verify import verify_all

__all__ = [
    'SuiteBase', 'Priority', 'CheckEvent', 'Job',
    'random_building_set', 'random_building_sets', 'graphical_family', 'instance_family', 'forests', 'named_graph_family',
    'CoreSuite', 'CountingSuite', 'PermsSuite', 'OrdersSuite', 'IsoSuite', 'GeomSuite', 'SUITES',
    'verify_all',
]
