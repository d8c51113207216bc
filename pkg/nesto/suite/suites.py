from typing import Any

import networkx as nx

from ..complex.independence import is_flag_complex, non_nested_violation
from ..complex.link import link
from ..complex.nested import extended_nested_complex, nested_complex
from ..complex.simplicial import Design, face_label, vertex_label
from ..config import get_config
from ..core.building_set import BuildingSet, is_chordal, is_flag, subsets_of, validate, validate_on
from ..core.graphs import all_graphs, complete_building_set, from_graph, path_building_set, star_building_set
from ..counting.ab_numbers import ab_report
from ..counting.face_numbers import gamma_extended, h_extended_enum, h_nested_enum, is_dehn_sommerville, nested_dimension
from ..counting.recursions import (
    component_product_report,
    forest_linegraph_equal,
    gamma_shaving_sweep,
    inverse_relations_check,
    recursion_report,
)
from ..geom.coords import extended_vertex_coords, nestohedron_vertex_coords
from ..geom.orientation import complete_geom_report, geom_report
from ..geom.stellar import stellar_matches_nested
from ..iso.fixtures import fixture_report
from ..iso.intervals import interval_report
from ..iso.spider import SpiderSpec, spider_report, spider_to_octopus
from ..orders.flip_poset import flip_poset
from ..orders.shelling import stellohedron_shelling_report, verify_shelling
from ..orders.weak_order import flip_matches_weak_order, flip_report, partial_weak_order, partial_weak_report
from ..perms.hops import gamma_via_descents, h_via_descents, hop_report
from ..perms.partial_perms import bijection_report
from .base import SuiteBase
from .instances import (
    GRAPHICAL_FAMILY_MAX_N,
    forests,
    graphical_family,
    instance_family,
    named_graph_family,
    random_building_sets,
)

GRAPH_MINORS_MAX_N = 6
NON_NESTED_MAX_N = 5
LINKS_MAX_N = 4
SHAVING_MAX_N = 4
GAL_MAX_N = 6
PERMS_MAX_N = 5
ORDERS_MAX_N = 4
LATTICE_MAX_N = 5
GEOM_MAX_N = 5
FOREST_MAX_EDGES = 6


class CoreSuite(SuiteBase):
    def __init__(self, workers: int = 1):
        super().__init__("core", workers)

    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        samples = get_config().random_samples
        family = instance_family(max_n, seed, samples)
        events: list[tuple[str, Any]] = [("purity", b) for b in family]
        events += [("graph_minors", g) for n in range(1, min(max_n, GRAPH_MINORS_MAX_N) + 1) for g in all_graphs(n)]
        events += [("minors", b) for b in family]
        events += [("flag_complexes", b) for b in family]
        events += [("non_nested", b) for b in graphical_family(min(max_n, NON_NESTED_MAX_N))]
        events += [("links", b) for b in graphical_family(min(max_n, LINKS_MAX_N))]
        return events

    def handle_event(self, event_type: str, payload: Any):
        if event_type == "purity":
            return self._handle_purity(payload)
        elif event_type == "graph_minors":
            return self._handle_graph_minors(payload)
        elif event_type == "minors":
            return self._handle_minors(payload)
        elif event_type == "flag_complexes":
            return self._handle_flag_complexes(payload)
        elif event_type == "non_nested":
            return self._handle_non_nested(payload)
        elif event_type == "links":
            return self._handle_links(payload)
        self.logger.warning(f"Unknown event type: {event_type}")
        return {"ok": False, "error": f"unknown check {event_type}"}

    def _handle_purity(self, b: BuildingSet) -> dict:
        """Every facet of N□(b) has n elements."""
        complex_ = extended_nested_complex(b)
        return {"subject": b.label(), "ok": complex_.is_pure and complex_.facet_size() == b.n}

    def _handle_graph_minors(self, g: nx.Graph) -> dict:
        # validate_on raises on the first output that is not a building set
        b = from_graph(g)
        validate_on(b.ground, b.sets)
        restrictions, contractions = _minors(b)
        return {"subject": sorted(map(list, g.edges)), "ok": True, "minors": restrictions + contractions}

    def _handle_minors(self, b: BuildingSet) -> dict:
        """Restrictions and contractions stay building sets; chordal sets are flag and restrict to chordal sets."""
        _minors(b)
        chordal = is_chordal(b)
        restricted = all(is_chordal(b.restriction(s)) for s in subsets_of(b.ground)) if chordal else None
        ok = not chordal or (is_flag(b) and restricted)
        return {"subject": b.label(), "ok": ok, "chordal": chordal, "restrictions_chordal": restricted}

    def _handle_flag_complexes(self, b: BuildingSet) -> dict:
        """b is flag exactly when both of its complexes have only 2-element minimal non-faces."""
        flag = is_flag(b)
        nested, extended = is_flag_complex(nested_complex(b)), is_flag_complex(extended_nested_complex(b))
        return {"subject": b.label(), "ok": flag == nested == extended, "flag": flag}

    def _handle_non_nested(self, b: BuildingSet) -> dict:
        violation = non_nested_violation(b)
        witness = None if violation is None else face_label(violation)
        return {"subject": b.label(), "ok": violation is None, "witness": witness}

    def _handle_links(self, b: BuildingSet) -> dict:
        failures = [
            f"{'extended' if extended else 'nested'} {vertex_label(v)}"
            for extended, complex_ in ((True, extended_nested_complex(b)), (False, nested_complex(b)))
            for v in complex_.vertices
            if not link(b, v, extended=extended).verified
        ]
        return {"subject": b.label(), "ok": not failures, "failures": failures}


def _minors(b: BuildingSet) -> tuple[int, int]:
    """Validate every restriction and every contraction by a member; returns how many of each."""
    restrictions = contractions = 0
    for s in subsets_of(b.ground):
        r = b.restriction(s)
        validate_on(r.ground, r.sets)
        restrictions += 1
    for member in b.sets:
        c = b.contraction(member)
        validate_on(c.ground, c.sets)
        contractions += 1
    return restrictions, contractions


class CountingSuite(SuiteBase):
    def __init__(self, workers: int = 1):
        super().__init__("counting", workers)

    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        samples = get_config().random_samples
        family = instance_family(max_n, seed, samples)
        events = []
        for b in family:
            events += [("recursions", b), ("inverse_relations", b), ("dehn_sommerville", b), ("ab_numbers", b)]
            if is_flag(b):
                events.append(("gal_flag", b))
            if not b.is_connected:
                events.append(("component_products", b))
        for n in range(GRAPHICAL_FAMILY_MAX_N + 1, min(max_n, GAL_MAX_N) + 1):
            events += [("gal_flag", b) for b in named_graph_family(n)]
        events += [("gamma_shaving", b) for b in graphical_family(min(max_n, SHAVING_MAX_N), connected_only=True)]
        events += [("forest_line_graph", g) for g in forests(min(FOREST_MAX_EDGES, max_n + 1))]
        return events

    def handle_event(self, event_type: str, payload: Any):
        if event_type == "recursions":
            return recursion_report(payload)
        elif event_type == "inverse_relations":
            return inverse_relations_check(payload)
        elif event_type == "dehn_sommerville":
            return self._handle_dehn_sommerville(payload)
        elif event_type == "ab_numbers":
            return ab_report(payload)
        elif event_type == "gal_flag":
            return self._handle_gal(payload)
        elif event_type == "component_products":
            return component_product_report(payload)
        elif event_type == "gamma_shaving":
            return gamma_shaving_sweep(payload)
        elif event_type == "forest_line_graph":
            return self._handle_forest(payload)
        self.logger.warning(f"Unknown event type: {event_type}")
        return {"ok": False, "error": f"unknown check {event_type}"}

    def _handle_dehn_sommerville(self, b: BuildingSet) -> dict:
        h_sq, h_p = h_extended_enum(b), h_nested_enum(b)
        ok = is_dehn_sommerville(h_sq, b.n) and is_dehn_sommerville(h_p, nested_dimension(b))
        return {"subject": b.label(), "ok": ok, "h_extended": h_sq.to_list(), "h_nested": h_p.to_list()}

    def _handle_gal(self, b: BuildingSet) -> dict:
        gamma = gamma_extended(b).to_list()
        return {"subject": b.label(), "ok": all(g >= 0 for g in gamma), "gamma": gamma}

    def _handle_forest(self, g: nx.Graph) -> dict:
        return {"subject": sorted(map(list, g.edges)), "ok": forest_linegraph_equal(g)}


class PermsSuite(SuiteBase):
    def __init__(self, workers: int = 1):
        super().__init__("perms", workers)

    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        top = min(max_n, PERMS_MAX_N)
        connected = graphical_family(top, connected_only=True)
        for n in range(2, top + 1):
            connected += [b for b in random_building_sets(n, get_config().random_samples, seed) if b.is_connected]
        events: list[tuple[str, Any]] = [("bijections", b) for b in connected]
        events += [("descents", b) for b in graphical_family(top, connected_only=True) if is_chordal(b)]
        if top >= 2:
            events.append(("pentagon_anchor", complete_building_set(2)))
        return events

    def handle_event(self, event_type: str, payload: Any):
        if event_type == "bijections":
            return bijection_report(payload)
        elif event_type == "descents":
            return hop_report(payload)
        elif event_type == "pentagon_anchor":
            return self._handle_anchor(payload)
        self.logger.warning(f"Unknown event type: {event_type}")
        return {"ok": False, "error": f"unknown check {event_type}"}

    def _handle_anchor(self, b: BuildingSet) -> dict:
        h, gamma = h_via_descents(b).to_list(), gamma_via_descents(b).to_list()
        return {"subject": b.label(), "ok": h == [1, 3, 1] and gamma == [1, 1], "h": h, "gamma": gamma}


class OrdersSuite(SuiteBase):
    def __init__(self, workers: int = 1):
        super().__init__("orders", workers)

    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        top = min(max_n, ORDERS_MAX_N)
        events: list[tuple[str, Any]] = []
        for n in range(1, top + 1):
            events += [("partial_weak", n), ("flip_vs_partial_weak", n), ("weak_order_flips", n)]
            events.append(("shelling", (n, seed)))
        if min(max_n, LATTICE_MAX_N) > ORDERS_MAX_N:
            events.append(("lattice", LATTICE_MAX_N))
        events += [("flip_acyclic", b) for b in graphical_family(top)]
        if max_n >= 2:
            events.append(("bad_shelling", complete_building_set(2)))
        return events

    def handle_event(self, event_type: str, payload: Any):
        if event_type == "partial_weak":
            return partial_weak_report(payload)
        elif event_type == "flip_vs_partial_weak":
            return flip_report(payload)
        elif event_type == "weak_order_flips":
            return {"subject": f"S_{payload}", "ok": flip_matches_weak_order(payload)}
        elif event_type == "shelling":
            n, seed = payload
            return stellohedron_shelling_report(n, get_config().shelling_samples, seed)
        elif event_type == "lattice":
            return {"subject": f"P_{payload}", **self._lattice(payload)}
        elif event_type == "flip_acyclic":
            return self._handle_flip_acyclic(payload)
        elif event_type == "bad_shelling":
            return self._handle_bad_shelling(payload)
        self.logger.warning(f"Unknown event type: {event_type}")
        return {"ok": False, "error": f"unknown check {event_type}"}

    def _lattice(self, n: int) -> dict:
        check = partial_weak_order(n).lattice_check()
        return {"ok": check["is_lattice"], "witness": check["witness"]}

    def _handle_flip_acyclic(self, b: BuildingSet) -> dict:
        # flip_poset raises ValueError on a cycle
        extended, plain = flip_poset(b, extended=True), flip_poset(b, extended=False)
        return {"subject": b.label(), "ok": True, "sizes": [len(extended), len(plain)]}

    def _handle_bad_shelling(self, b: BuildingSet) -> dict:
        """A facet followed by one it does not meet must fail with a witness."""
        facets = list(extended_nested_complex(b).facets)
        first = facets[0]
        apart = next(f for f in facets if not f & first)
        order = [first, apart] + [f for f in facets if f not in (first, apart)]
        result = verify_shelling(extended_nested_complex(b), order)
        return {"subject": b.label(), "ok": not result.ok and result.witness is not None, "result": result.to_json()}


class IsoSuite(SuiteBase):
    def __init__(self, workers: int = 1):
        super().__init__("iso", workers)

    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        events: list[tuple[str, Any]] = []
        for n in range(1, min(max_n, 5) + 1):
            events.append(("intervals", path_building_set(n)))
            events.append(("intervals", validate([[i] for i in range(1, n + 1)] + [range(1, k + 1) for k in range(2, n + 1)], n)))
            events.append(("path_spider", n))
        for k in range(1, min(max_n, 4) + 1):
            events.append(("complete_spider", k))
        if max_n >= 6:
            events.append(("spider", worked_spider()))
        if max_n >= 3:
            events.append(("fixtures", None))
        return events

    def handle_event(self, event_type: str, payload: Any):
        if event_type == "intervals":
            return interval_report(payload)
        elif event_type == "spider":
            return spider_report(payload)
        elif event_type == "complete_spider":
            return self._handle_complete_spider(payload)
        elif event_type == "path_spider":
            return self._handle_path_spider(payload)
        elif event_type == "fixtures":
            return fixture_report()
        self.logger.warning(f"Unknown event type: {event_type}")
        return {"ok": False, "error": f"unknown check {event_type}"}

    def _handle_complete_spider(self, k: int) -> dict:
        """B_{K_k} -> the star with k leaves."""
        spider = SpiderSpec.complete(k)
        octopus, _ = spider_to_octopus(spider)
        report = spider_report(spider)
        report.record("octopus_is_star", octopus.building_set == star_building_set(k))
        return {"subject": f"K_{k}", "ok": report.ok, "report": report.to_json()}

    def _handle_path_spider(self, n: int) -> dict:
        """B_{P_n} -> B_{P_{n+1}}."""
        spider = SpiderSpec((path_building_set(n),))
        octopus, _ = spider_to_octopus(spider)
        report = spider_report(spider)
        report.record("octopus_is_path", octopus.building_set == path_building_set(n + 1))
        return {"subject": f"P_{n}", "ok": report.ok, "report": report.to_json()}


def worked_spider() -> SpiderSpec:
    """Three legs of lengths 3, 2, 1 with leg sets {2}, {3} on the first and {2} on the second."""
    return SpiderSpec((
        validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3),
        validate([[1], [2], [1, 2]], 2),
        validate([[1]], 1),
    ))


class GeomSuite(SuiteBase):
    def __init__(self, workers: int = 1):
        super().__init__("geom", workers)

    def plan(self, max_n: int, seed: int) -> list[tuple[str, Any]]:
        top = min(max_n, GEOM_MAX_N)
        events: list[tuple[str, Any]] = [("stellar", b) for b in graphical_family(top)]
        if max_n >= 3:
            events.append(("stellar", validate([[1], [2], [3], [1, 2], [1, 2, 3]], 3)))
            events.append(("coordinates_example", complete_building_set(3)))
        events += [("geometry", b) for b in graphical_family(top, connected_only=True)]
        events += [("complete", n) for n in range(1, min(max_n, 3) + 1)]
        return events

    def handle_event(self, event_type: str, payload: Any):
        if event_type == "stellar":
            return {"subject": payload.label(), "ok": stellar_matches_nested(payload)}
        elif event_type == "coordinates_example":
            return self._handle_coordinates(payload)
        elif event_type == "geometry":
            return geom_report(payload)
        elif event_type == "complete":
            return complete_geom_report(payload)
        self.logger.warning(f"Unknown event type: {event_type}")
        return {"ok": False, "error": f"unknown check {event_type}"}

    def _handle_coordinates(self, b: BuildingSet) -> dict:
        f = frozenset
        first = extended_vertex_coords(b, {f({2}), f({2, 3}), Design(1)}).coords
        second = extended_vertex_coords(b, {f({3}), f({1, 3}), f({1, 2, 3})}).coords
        chain = nestohedron_vertex_coords(b, {f({1}), f({1, 2})}).coords
        ok = first == (0, 4, 3) and second == (3, 2, 4) and chain == (1, 2, 4)
        return {"subject": b.label(), "ok": ok, "coordinates": [list(first), list(second), list(chain)]}


SUITES = {
    "core": CoreSuite,
    "counting": CountingSuite,
    "perms": PermsSuite,
    "orders": OrdersSuite,
    "iso": IsoSuite,
    "geom": GeomSuite,
}
