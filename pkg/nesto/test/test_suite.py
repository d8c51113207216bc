import networkx as nx
import pytest

from nesto.config import NestoConfig, get_config, load_config, set_config
from nesto.core import all_graphs, path_building_set, validate
from nesto.errors import SizeCap
from nesto.suite.instances import union_closure
from nesto.suite import (
    SUITES,
    CheckEvent,
    CoreSuite,
    CountingSuite,
    Job,
    Priority,
    SuiteBase,
    forests,
    graphical_family,
    named_graph_family,
    random_building_sets,
    verify_all,
)


class EchoSuite(SuiteBase):
    """Turns each payload straight into an outcome."""

    def __init__(self, workers: int = 1):
        super().__init__("echo", workers)

    def plan(self, max_n, seed):
        return [("echo", k) for k in range(max_n)] + [("missing", max_n), ("crash", max_n)]

    def handle_event(self, event_type, payload):
        if event_type == "echo":
            return {"subject": str(payload), "value": payload}
        elif event_type == "missing":
            return validate([[1]], 2)
        elif event_type == "crash":
            raise RuntimeError("boom")
        self.logger.warning(f"Unknown event type: {event_type}")
        return False


def test_check_events_order_by_priority_then_sequence():
    urgent = CheckEvent("a", None, Priority.HIGH, seq=5)
    early = CheckEvent("b", None, Priority.NORMAL, seq=1)
    late = CheckEvent("c", None, Priority.NORMAL, seq=2)
    assert sorted([late, early, urgent]) == [urgent, early, late]


@pytest.mark.parametrize("workers", [1, 3])
def test_results_come_back_in_dispatch_order(workers):
    results = EchoSuite(workers).run(5, 0)
    assert [r["check"] for r in results] == ["echo"] * 5 + ["missing", "crash"]
    assert [r["value"] for r in results[:5]] == [0, 1, 2, 3, 4]
    assert all(r["ok"] for r in results[:5])


def test_errors_become_failed_results():
    results = EchoSuite().run(0, 0)
    missing, crash = results
    assert not missing["ok"]
    assert missing["error"]["error"] == "MissingSingleton"
    assert missing["error"]["witness"] == 2
    assert crash["error"] == {"error": "RuntimeError", "message": "boom"}
    assert crash["subject"] == "0"


def test_dispatch_before_start_is_ignored():
    suite = EchoSuite()
    suite.dispatch("echo", 1)
    assert not suite.has_pending_event
    assert suite.results() == []


def test_unknown_event_type_fails():
    suite = CoreSuite()
    assert suite.handle_event("no-such-check", None) == {"ok": False, "error": "unknown check no-such-check"}


def test_job_respects_the_size_cap():
    set_config(NestoConfig(max_n=4))
    with pytest.raises(SizeCap):
        Job("verify-all", max_n=5)
    with pytest.raises(ValueError):
        Job("verify-all", max_n=-1)
    assert Job("verify-all").effective_max_n == 4
    assert Job("verify-all", max_n=3).effective_max_n == 3


def test_job_json_round_trip():
    job = Job("counts", input="k3.json", max_n=3, seed=7, options={"extended": True})
    assert Job.from_json(job.to_json()) == job
    assert Job.from_json({"command": "validate"}).seed == 0


def test_union_closure():
    closed = union_closure({frozenset({1, 2}), frozenset({2, 3}), frozenset({4})})
    assert frozenset({1, 2, 3}) in closed
    assert frozenset({1, 2, 3, 4}) not in closed


def test_random_building_sets_are_seeded():
    assert random_building_sets(4, 5, seed=3) == random_building_sets(4, 5, seed=3)
    assert all(b.n == 4 for b in random_building_sets(4, 5, seed=3))


def test_graphical_family_and_forests():
    assert len(graphical_family(3)) == 7
    assert len(graphical_family(3, connected_only=True)) == 4
    assert len(forests(1)) == 3
    assert all(nx.is_forest(g) for g in forests(3))


def test_core_suite(small_samples):
    results = CoreSuite().run(3, 0)
    assert results
    assert all(r["ok"] for r in results)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_passes_on_small_grounds(name, small_samples):
    results = SUITES[name]().run(2, 0)
    failed = [r for r in results if not r["ok"]]
    assert not failed, failed[0]


def test_verify_all_is_deterministic(small_samples):
    job = Job("verify-all", max_n=2, seed=11)
    first = verify_all(job, suites=["core", "counting"])
    second = verify_all(job, suites=["core", "counting"], workers=2)
    assert first == second
    assert first["ok"]
    assert first["first_failure"] is None
    assert first["seed"] == 11 and first["max_n"] == 2
    assert list(first["suites"]) == ["core", "counting"]


def test_verify_all_rejects_unknown_suites():
    with pytest.raises(ValueError):
        verify_all(Job("verify-all", max_n=1), suites=["nope"])


def test_config_from_environment(monkeypatch):
    monkeypatch.setenv("NESTO_MAX_N", "9")
    monkeypatch.setenv("NESTO_RANDOM_SAMPLES", "not-a-number")
    config = load_config()
    assert config.max_n == 9
    assert config.random_samples == 100
    assert config.with_max_n(None) is config
    assert config.with_max_n(4).max_n == 4


def test_set_config_is_process_wide():
    set_config(NestoConfig(max_n=5))
    assert get_config().max_n == 5


def test_core_suite_plans_every_structural_check(small_samples):
    events = CoreSuite().plan(4, 0)
    assert {kind for kind, _ in events} == {"purity", "graph_minors", "minors", "flag_complexes", "non_nested", "links"}
    assert len([g for kind, g in events if kind == "graph_minors"]) == len(all_graphs(4)) + 7


def test_core_suite_checks_graph_minors_and_links():
    suite = CoreSuite()
    minors = suite.handle_event("graph_minors", all_graphs(3)[-1])
    assert minors["ok"] and minors["minors"] == 8 + 7
    assert suite.handle_event("links", path_building_set(3))["ok"]
    assert suite.handle_event("minors", path_building_set(3))["chordal"]


def test_named_graph_family():
    family = named_graph_family(6)
    assert len(family) == 4
    assert all(b.n == 6 and b.is_connected for b in family)


def test_counting_suite_reaches_six_through_named_graphs(small_samples):
    events = CountingSuite().plan(6, 0)
    assert len([b for kind, b in events if kind == "gal_flag" and b.n == 6]) == 4
    assert {"component_products", "gamma_shaving"} <= {kind for kind, _ in events}
    gal = CountingSuite().handle_event("gal_flag", path_building_set(6))
    assert gal["ok"]
    assert gal["gamma"][0] == 1
