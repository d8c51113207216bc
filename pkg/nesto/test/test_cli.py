import io
import json

import pytest

from nesto import __version__
from nesto.cli import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from nesto.formats import dump_json, load_json

K2 = json.dumps({"n": 2, "sets": [[1], [2], [1, 2]]})
K3 = json.dumps({"n": 3, "sets": [[1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]]})
P3 = json.dumps({"n": 3, "sets": [[1], [2], [3], [1, 2], [2, 3], [1, 2, 3]]})


@pytest.fixture(autouse=True)
def quiet_environment(monkeypatch):
    monkeypatch.setenv("NESTO_RANDOM_SAMPLES", "3")
    monkeypatch.setenv("NESTO_SHELLING_SAMPLES", "2")
    monkeypatch.delenv("NESTO_MAX_N", raising=False)


def run_json(capsys, *argv):
    code = run(list(argv))
    return code, json.loads(capsys.readouterr().out)


def test_counts_of_the_hexagon(capsys):
    code, result = run_json(capsys, "counts", "--h", "--input", K3)
    assert code == EXIT_OK
    assert result == {"h": [1, 4, 1], "seed": 0, "version": __version__}


def test_counts_of_the_pentagon(capsys):
    code, result = run_json(capsys, "counts", "--extended", "--input", K2)
    assert code == EXIT_OK
    assert result["f"] == [5, 5, 1]
    assert result["h"] == [1, 3, 1]
    assert result["gamma"] == [1, 1]
    assert (result["a"], result["b"]) == (-1, 0)


def test_counts_positional_selection(capsys):
    code, result = run_json(capsys, "counts", "gamma", "--input", K3)
    assert code == EXIT_OK
    assert result["gamma"] == [1, 2]
    assert "f" not in result


def test_validate_reports_properties(capsys):
    code, result = run_json(capsys, "validate", "--input", K3)
    assert code == EXIT_OK
    assert result["ok"]
    assert result["maxima"] == [[1, 2, 3]]
    assert result["chordal"] and result["flag"] and result["strong"]
    assert result["graphical"] is True


def test_validate_missing_singleton_fails(capsys):
    code, result = run_json(capsys, "validate", "--input", '{"n": 2, "sets": [[1], [1, 2]]}')
    assert code == EXIT_FAILED
    assert result["ok"] is False
    assert result["error"] == "MissingSingleton"
    assert result["witness"] == 2
    assert result["command"] == "validate"


def test_malformed_input_is_invalid(capsys):
    code, result = run_json(capsys, "validate", "--input", '{"n": 2}')
    assert code == EXIT_FAILED
    assert result["error"] == "InvalidInput"


def test_from_graph(capsys):
    code, result = run_json(capsys, "from-graph", "--input", '{"n": 3, "edges": [[1, 2], [2, 3]]}')
    assert code == EXIT_OK
    assert result["building_set"] == json.loads(P3)


def test_complex(capsys):
    code, result = run_json(capsys, "complex", "extended", "--input", K2)
    assert code == EXIT_OK
    assert result["pure"]
    assert result["facet_sizes"] == [2]


def test_perms_list(capsys):
    code, result = run_json(capsys, "perms", "list", "--input", K2)
    assert code == EXIT_OK
    assert result["count"] == 5
    assert result["partial"] == [[], [1], [2], [2, 1], [1, 2]]


def test_perms_gamma_chordal(capsys):
    code, result = run_json(capsys, "perms", "gamma-chordal", "--input", P3)
    assert code == EXIT_OK
    assert result["h"] == result["h_enumerated"] == [1, 6, 6, 1]
    assert result["gamma"] == [1, 3]


def test_order_partial_weak_as_dot(capsys):
    code = run(["order", "partial-weak", "--n", "2", "--format", "dot"])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.startswith(f"// nesto {__version__} seed=0\ndigraph partial_weak_2 {{")
    assert '"12";' in out and '"∅";' in out


def test_order_partial_weak_as_json(capsys):
    code, result = run_json(capsys, "order", "partial-weak", "--n", "2", "--moebius")
    assert code == EXIT_OK
    assert result["is_lattice"]
    assert len(result["elements"]) == 5
    assert set(result["moebius_values"]) <= {-1, 0, 1}


def test_order_shell(capsys):
    code, result = run_json(capsys, "order", "shell", "--n", "2", "--samples", "3", "--seed", "5")
    assert code == EXIT_OK
    assert result["ok"]
    assert result["seed"] == 5


def test_order_flip(capsys):
    code, result = run_json(capsys, "order", "flip", "--input", K2)
    assert code == EXIT_OK
    assert len(result["elements"]) == 5


def test_iso_check_finds_a_map(capsys):
    data = json.dumps({"source": json.loads(K2), "target": json.loads(P3), "extended": [True, False]})
    code, result = run_json(capsys, "iso", "check", "--input", data)
    assert code == EXIT_OK
    assert result["isomorphism"]


def test_iso_rotate_with_flip(capsys):
    code, result = run_json(capsys, "iso", "rotate", "--flip", "--input", P3)
    assert code == EXIT_OK
    assert result["building_set"] == json.loads(P3)
    assert result["report"]["ok"]


def test_iso_spider_from_lengths(capsys):
    data = json.dumps({**json.loads(K3), "lengths": [1, 1, 1]})
    code, result = run_json(capsys, "iso", "spider2octopus", "--input", data)
    assert code == EXIT_OK
    assert result["octopus_building_set"]["n"] == 4


def test_geom_coords_as_csv(capsys):
    code = run(["geom", "coords", "--format", "csv", "--input", K2])
    lines = capsys.readouterr().out.splitlines()
    assert code == EXIT_OK
    assert lines[0] == "facet,v1,v2"
    assert len(lines) == 6


def test_geom_orient(capsys):
    code, result = run_json(capsys, "geom", "orient", "--input", K2)
    assert code == EXIT_OK
    assert result["acyclic"]
    assert len(result["sources"]) == 1 and len(result["sinks"]) == 1
    assert sorted(result["values"].values()) == [-5, -4, -4, -2, 0]


def test_geom_orient_with_tied_cost_fails(capsys):
    code, result = run_json(capsys, "geom", "orient", "--cost", "1,1", "--input", K2)
    assert code == EXIT_FAILED
    assert result["error"] == "NonGenericCost"


@pytest.mark.parametrize(
    "argv",
    [
        ["no-such-command"],
        ["counts", "zzz", "--input", K3],
        ["order", "partial-weak"],
        ["validate", "--format", "dot", "--input", K3],
        ["validate", "--max-n", "99", "--input", K3],
        ["validate", "--input", "does/not/exist.json"],
        ["order", "shell", "--n", "2", "--format", "csv"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == EXIT_USAGE
    assert capsys.readouterr().out == ""


def test_max_n_caps_the_input(capsys):
    code, result = run_json(capsys, "validate", "--max-n", "2", "--input", K3)
    assert code == EXIT_FAILED
    assert result["error"] == "GroundTooLarge"


def test_verify_all_is_reproducible(capsys):
    argv = ["verify-all", "--max-n", "2", "--suite", "core", "--seed", "3"]
    assert run(argv) == EXIT_OK
    first = capsys.readouterr().out
    assert run(argv) == EXIT_OK
    assert capsys.readouterr().out == first
    report = json.loads(first)
    assert report["ok"] and list(report["suites"]) == ["core"]
    assert report["seed"] == 3 and report["version"] == __version__


def test_output_file(tmp_path, capsys):
    target = tmp_path / "reports" / "h.json"
    assert run(["counts", "--h", "--input", K3, "--output", str(target)]) == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["h"] == [1, 4, 1]


def test_input_file(tmp_path, capsys):
    source = tmp_path / "k3.json"
    source.write_text(K3)
    code, result = run_json(capsys, "counts", "--f", "--input", str(source))
    assert code == EXIT_OK
    assert result["f"] == [6, 6, 1]


def test_json_helpers():
    assert load_json(None, stdin=io.StringIO('{"n": 1}')) == {"n": 1}
    assert load_json(" [1, 2]") == [1, 2]
    assert dump_json({"b": 1, "a": "∅"}) == '{\n  "a": "∅",\n  "b": 1\n}\n'


def test_verify_all_passes_at_four(capsys):
    assert run(["verify-all", "--max-n", "4", "--seed", "7"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["ok"], report["first_failure"]
    assert report["max_n"] == 4
    assert sorted(report["suites"]) == ["core", "counting", "geom", "iso", "orders", "perms"]


def test_complex_independence_graph_as_dot(capsys):
    code = run(["complex", "extended", "--format", "dot", "--input", K2])
    out = capsys.readouterr().out
    assert code == EXIT_OK
    assert out.startswith(f"// nesto {__version__} seed=0\ngraph independence_extended {{")
    assert out.count(" -- ") == 5
    assert '"{1}" -- "{2}";' in out
    assert '"{1,2}" -- "x_1";' in out


def test_perms_forest(capsys):
    data = json.dumps({**json.loads(K2), "word": [1, 2]})
    code, result = run_json(capsys, "perms", "forest", "--input", data)
    assert code == EXIT_OK
    assert result["forest"] == {"nodes": [1, 2], "parent": {"1": 2}}
    assert result["facet"] == "{{1}, {1,2}}"


def test_perms_forest_as_dot(capsys):
    data = json.dumps({**json.loads(K2), "word": [1, 2]})
    assert run(["perms", "forest", "--format", "dot", "--input", data]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[1:] == ['digraph forest {', '  "1" [shape=circle];', '  "2" [shape=doublecircle];', '  "1" -> "2";', '}']


def test_perms_forest_needs_a_word(capsys):
    assert run(["perms", "forest", "--input", K2]) == EXIT_USAGE
