import json
import logging
import os
import sys
from typing import Any, Optional, TextIO

from .core.building_set import BuildingSet
from .core.graphs import DirectedGraph, from_graph

logger = logging.getLogger(__name__)

FORMATS = ("json", "dot", "csv")


def dump_json(data: Any) -> str:
    """Canonical JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_json(source: Optional[str], stdin: Optional[TextIO] = None) -> Any:
    """Read JSON from inline text, a file path, or stdin when `source` is None or "-"."""
    if source is None or source == "-":
        return json.load(stdin or sys.stdin)
    text = source.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    if not os.path.exists(source):
        raise FileNotFoundError(f"input file not found: {source}")
    with open(source, "r") as f:
        return json.load(f)


def building_set_from_data(data: dict) -> BuildingSet:
    """Graph payloads ("arcs" or "edges") go through from_graph, everything else is a building set."""
    if "arcs" in data or "edges" in data:
        return from_graph(DirectedGraph.from_json(data))
    return BuildingSet.from_json(data)


def dot_header(version: str, seed: int) -> str:
    return f"// nesto {version} seed={seed}\n"


def write_output(text: str, output: Optional[str]):
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(output)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(output, "w", newline="") as f:
        f.write(text)
    logger.info(f"wrote {output}")
