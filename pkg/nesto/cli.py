import argparse
import io
import logging
import sys
from typing import Callable, Optional, Sequence, Union

from dotenv import load_dotenv

from . import __version__
from .complex.independence import independence_dot, is_strong
from .complex.isomorphism import is_isomorphic
from .complex.nested import extended_nested_complex, nested_complex
from .complex.simplicial import face_label, parse_vertex_label
from .config import get_config, load_config, set_config
from .core.building_set import BuildingSet, is_chordal, is_flag
from .core.graphs import is_graphical
from .counting.ab_numbers import a_number, b_number
from .counting.face_numbers import (
    f_extended_enum,
    f_nested_enum,
    gamma_extended,
    gamma_nested,
    h_extended_enum,
    h_nested_enum,
)
from .errors import GroundTooLarge, NestoError, SizeCap
from .formats import FORMATS, building_set_from_data, dot_header, dump_json, load_json, write_output
from .geom.coords import coordinate_table, write_csv
from .geom.orientation import cost_orientation, matches_flip_poset
from .geom.stellar import stellar_matches_nested, stellar_realization
from .iso.intervals import extended_interval_rotation, flip, interval_extension, interval_report, interval_rotation
from .iso.spider import SpiderSpec, check_spider, spider_report, spider_to_octopus
from .iso.vertex_map import VertexMap
from .orders.flip_poset import flip_poset
from .orders.shelling import stellohedron_shelling_report
from .orders.weak_order import partial_weak_order
from .perms.forests import forest_to_nested
from .perms.hops import gamma_via_descents, h_via_descents, hop_classes
from .perms.partial_perms import b_partial_permutations, extended_b_permutations, psi_square
from .suite.job import Job
from .suite.suites import SUITES
from .suite.verify import verify_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Output = Union[dict, str]

COUNTS = ("f", "h", "gamma", "ab")
SUITE_SIZED = ("verify-all",)


class UsageError(Exception):
    pass


def _word(w: Sequence[int]) -> str:
    return "".join(str(x) for x in w) or "∅"


def _building_set(job: Job) -> BuildingSet:
    return building_set_from_data(load_json(job.input))


def _require_format(job: Job, *allowed: str):
    if job.format not in allowed:
        raise UsageError(f"{job.command} does not support --format {job.format} (use {'|'.join(allowed)})")


def _cmd_validate(job: Job, args) -> Output:
    _require_format(job, "json")
    b = _building_set(job)
    try:
        graphical, witness = is_graphical(b)
    except GroundTooLarge:
        graphical, witness = None, None
    return {
        "ok": True,
        "building_set": b.to_json(),
        "maxima": [sorted(m) for m in b.maxima],
        "connected": b.is_connected,
        "chordal": is_chordal(b),
        "flag": is_flag(b),
        "strong": is_strong(b),
        "graphical": graphical,
        "graph": witness.to_json() if witness is not None else None,
    }


def _cmd_from_graph(job: Job, args) -> Output:
    _require_format(job, "json")
    data = load_json(job.input)
    if "arcs" not in data and "edges" not in data:
        raise UsageError("from-graph expects {\"n\": .., \"arcs\": [[u, v], ..]}")
    return {"ok": True, "building_set": building_set_from_data(data).to_json()}


def _cmd_complex(job: Job, args) -> Output:
    _require_format(job, "json", "dot")
    b = _building_set(job)
    complex_ = extended_nested_complex(b) if args.kind == "extended" else nested_complex(b)
    if job.format == "dot":
        return independence_dot(complex_, name=f"independence_{args.kind}")
    return {
        "ok": True,
        "kind": args.kind,
        "pure": complex_.is_pure,
        "facet_sizes": list(complex_.facet_sizes),
        **complex_.to_json(),
    }


def _cmd_counts(job: Job, args) -> Output:
    _require_format(job, "json")
    b = _building_set(job)
    unknown = [w for w in args.which if w not in COUNTS]
    if unknown:
        raise UsageError(f"unknown count(s) {', '.join(unknown)}; choose from {', '.join(COUNTS)}")
    wanted = set(args.which) | {name for name in COUNTS if getattr(args, f"want_{name}")}
    if not wanted:
        wanted = set(COUNTS)
    extended = args.extended
    result: dict = {}
    if "f" in wanted:
        result["f"] = (f_extended_enum(b) if extended else f_nested_enum(b)).to_list()
    if "h" in wanted:
        result["h"] = (h_extended_enum(b) if extended else h_nested_enum(b)).to_list()
    if "gamma" in wanted:
        result["gamma"] = (gamma_extended(b) if extended else gamma_nested(b)).to_list()
    if "ab" in wanted:
        result["a"] = a_number(b)
        result["b"] = b_number(b)
    return result


def _cmd_perms(job: Job, args) -> Output:
    if args.action == "forest":
        return _perms_forest(job)
    _require_format(job, "json")
    b = _building_set(job)
    if args.action == "list":
        partial = b_partial_permutations(b)
        extended = extended_b_permutations(b)
        return {
            "ok": True,
            "count": len(extended),
            "partial": [w.to_json() for w in partial],
            "extended": [w.to_json() for w in extended],
        }
    if args.action == "hops":
        classes = hop_classes(b)
        return {"ok": True, "classes": [[w.to_json() for w in c] for c in classes]}
    h, gamma = h_via_descents(b), gamma_via_descents(b)
    expected = h_extended_enum(b)
    return {
        "ok": h == expected and gamma == gamma_extended(b),
        "h": h.to_list(),
        "gamma": gamma.to_list(),
        "h_enumerated": expected.to_list(),
    }


def _perms_forest(job: Job) -> Output:
    """Extended B-forest of the partial permutation under "word"."""
    _require_format(job, "json", "dot")
    data = load_json(job.input)
    if "word" not in data:
        raise UsageError("perms forest expects a building set with \"word\": [..]")
    b = building_set_from_data(data)
    forest = psi_square(b, data["word"])
    if job.format == "dot":
        return forest.to_dot()
    return {
        "ok": True,
        "word": list(data["word"]),
        "forest": forest.to_json(),
        "facet": face_label(forest_to_nested(b, forest)),
    }


def _cmd_order(job: Job, args) -> Output:
    if args.action == "shell":
        _require_format(job, "json")
        n = _order_n(args)
        samples = args.samples if args.samples is not None else get_config().shelling_samples
        return stellohedron_shelling_report(n, samples, job.seed).to_json()

    _require_format(job, "json", "dot")
    if args.action == "partial-weak":
        n = _order_n(args)
        poset = partial_weak_order(n)
        if job.format == "dot":
            return poset.to_dot(label=_word, name=f"partial_weak_{n}")
        result = {"ok": True, "n": n, **poset.to_json(label=_word), **poset.lattice_check()}
        if args.moebius:
            result["moebius_values"] = sorted(poset.moebius_values())
        return result

    b = _building_set(job)
    extended = not args.nested
    poset = flip_poset(b, extended)
    if job.format == "dot":
        return poset.to_dot(label=face_label, name="flip")
    return {"ok": True, "extended": extended, **poset.to_json(label=face_label)}


def _order_n(args) -> int:
    if args.n is None:
        raise UsageError("--n is required for this order")
    return args.n


def _spider(data: dict) -> SpiderSpec:
    if "legs" in data:
        return SpiderSpec.from_json(data)
    if "lengths" not in data:
        raise UsageError("spider input needs \"legs\" or a building set with \"lengths\"")
    return check_spider(BuildingSet.from_json(data), data["lengths"])


def _cmd_iso(job: Job, args) -> Output:
    _require_format(job, "json")
    data = load_json(job.input)

    if args.action == "spider2octopus":
        spider = _spider(data)
        octopus, vmap = spider_to_octopus(spider)
        report = spider_report(spider)
        return {
            "ok": report.ok,
            "spider": spider.building_set.to_json(),
            "octopus": octopus.to_json(),
            "octopus_building_set": octopus.building_set.to_json(),
            "map": vmap.to_json(),
            "report": report.to_json(),
        }

    if args.action == "check":
        return _check_isomorphism(data)

    b = building_set_from_data(data)
    if args.action == "interval":
        image, vmap = interval_extension(b)
        confirmed = vmap.confirms(extended_nested_complex(b), nested_complex(image))
    elif args.extended:
        image, vmap = extended_interval_rotation(b)
        confirmed = vmap.confirms(extended_nested_complex(b), extended_nested_complex(image))
    elif args.flip:
        image, vmap = flip(b)
        confirmed = vmap.confirms(extended_nested_complex(b), extended_nested_complex(image))
    else:
        image, vmap = interval_rotation(b)
        confirmed = vmap.confirms(nested_complex(b), nested_complex(image))
    return {
        "ok": confirmed,
        "building_set": image.to_json(),
        "map": vmap.to_json(),
        "report": interval_report(b).to_json(),
    }


def _complex_of(data: dict, extended: bool):
    b = building_set_from_data(data)
    return extended_nested_complex(b) if extended else nested_complex(b)


def _check_isomorphism(data: dict) -> dict:
    """{"source": b, "target": b, "map": [[label, label], ..]?, "extended": [bool, bool]?}"""
    if "source" not in data or "target" not in data:
        raise UsageError("iso check expects {\"source\": .., \"target\": ..}")
    source_extended, target_extended = data.get("extended", [True, True])
    source = _complex_of(data["source"], source_extended)
    target = _complex_of(data["target"], target_extended)
    if "map" in data:
        vmap = VertexMap.from_dict({parse_vertex_label(s): parse_vertex_label(t) for s, t in data["map"]})
        confirmed = vmap.confirms(source, target)
        return {"ok": confirmed, "isomorphism": confirmed, "map": vmap.to_json()}
    found = is_isomorphic(source, target)
    return {
        "ok": found is not None,
        "isomorphism": found is not None,
        "map": VertexMap.from_dict(found).to_json() if found is not None else None,
    }


def _cmd_geom(job: Job, args) -> Output:
    b = _building_set(job)
    extended = not args.nested

    if args.action == "stellar":
        _require_format(job, "json")
        matches = stellar_matches_nested(b)
        return {"ok": matches, "matches_nested": matches, **stellar_realization(b).to_json()}

    if args.action == "coords":
        _require_format(job, "json", "csv")
        rows = coordinate_table(b, extended)
        if job.format == "csv":
            buffer = io.StringIO()
            write_csv(b, rows, buffer)
            return buffer.getvalue()
        return {
            "ok": True,
            "extended": extended,
            "vertices": sorted(([face_label(r.facet), list(r.coords)] for r in rows), key=lambda r: r[0]),
        }

    _require_format(job, "json", "dot")
    cost = [int(x) for x in args.cost.split(",")] if args.cost else None
    orientation = cost_orientation(b, cost, extended)
    if job.format == "dot":
        return orientation.to_dot()
    return {
        "ok": orientation.is_acyclic,
        "acyclic": orientation.is_acyclic,
        "values": {face_label(v): value for v, value in orientation.values.items()},
        "edges": sorted([face_label(a), face_label(c)] for a, c in orientation.graph.edges),
        "sources": [face_label(v) for v in orientation.sources],
        "sinks": [face_label(v) for v in orientation.sinks],
        "matches_flip_poset": matches_flip_poset(b, extended, cost),
    }


def _cmd_verify_all(job: Job, args) -> Output:
    _require_format(job, "json")
    return verify_all(job, suites=args.suite, workers=args.workers)


COMMANDS: dict[str, Callable] = {
    "validate": _cmd_validate,
    "from-graph": _cmd_from_graph,
    "complex": _cmd_complex,
    "counts": _cmd_counts,
    "perms": _cmd_perms,
    "order": _cmd_order,
    "iso": _cmd_iso,
    "geom": _cmd_geom,
    "verify-all": _cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--input', type=str, help='Input JSON file, inline JSON, or - for stdin')
    common.add_argument('--output', type=str, help='Write the report here instead of stdout')
    common.add_argument('--max-n', type=int, help='Cap on ground-set sizes (default: NESTO_MAX_N or 16)')
    common.add_argument('--seed', type=int, default=0, help='Seed for every randomized check (default: 0)')
    common.add_argument('--format', choices=FORMATS, default="json", help='Output format (default: json)')

    parser = argparse.ArgumentParser(prog="nesto", description="Building sets, nested complexes and nestohedra")
    parser.add_argument('--version', action='version', version=f"nesto {__version__}")
    parser.add_argument('--log-level', type=str, help='Logging level (default: NESTO_LOG_LEVEL or WARNING)')
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("validate", parents=[common], help="Check (B1)/(B2) and report structural properties")
    sub.add_parser("from-graph", parents=[common], help="Building set of a (directed) graph")

    p = sub.add_parser("complex", parents=[common], help="Nested or extended nested complex")
    p.add_argument('kind', choices=["nested", "extended"])

    p = sub.add_parser("counts", parents=[common], help="f, h, gamma polynomials and a/b numbers")
    p.add_argument('which', nargs="*", default=[], help='Any of f, h, gamma, ab (default: all)')
    for name in COUNTS:
        p.add_argument(f'--{name}', dest=f"want_{name}", action='store_true', help=f'Include {name}')
    p.add_argument('--extended', action='store_true', help='Count the extended nestohedron instead')

    p = sub.add_parser("perms", parents=[common], help="B-partial and extended B-permutations")
    p.add_argument('action', choices=["list", "hops", "gamma-chordal", "forest"])

    p = sub.add_parser("order", parents=[common], help="Partial weak order, flip posets and shellings")
    p.add_argument('action', choices=["partial-weak", "flip", "shell"])
    p.add_argument('--n', type=int, help='Ground size for partial-weak and shell')
    p.add_argument('--nested', action='store_true', help='Use the nested complex instead of the extended one')
    p.add_argument('--moebius', action='store_true', help='Also report the Möbius values of every interval')
    p.add_argument('--samples', type=int, help='Random linear extensions to shell (default: NESTO_SHELLING_SAMPLES)')

    p = sub.add_parser("iso", parents=[common], help="Interval and spider isomorphisms")
    p.add_argument('action', choices=["interval", "rotate", "spider2octopus", "check"])
    p.add_argument('--extended', action='store_true', help='rotate: use the extended rotation')
    p.add_argument('--flip', action='store_true', help='rotate: apply the flip instead')

    p = sub.add_parser("geom", parents=[common], help="Stellar realization, vertex coordinates, orientations")
    p.add_argument('action', choices=["stellar", "coords", "orient"])
    p.add_argument('--nested', action='store_true', help='Use the nestohedron instead of the extended one')
    p.add_argument('--cost', type=str, help='Comma-separated cost vector (default: the generic one)')

    p = sub.add_parser("verify-all", parents=[common], help="Run the verification suites")
    p.add_argument('--suite', action='append', choices=sorted(SUITES), help='Suite to run (repeatable, default: all)')
    p.add_argument('--workers', type=int, default=1, help='Worker threads per suite (default: 1)')
    return parser


def _failure(job: Optional[Job], error: dict) -> dict:
    return {"ok": False, "command": job.command if job else None, **error}


def _emit(job: Job, result: Output):
    if isinstance(result, str):
        text = result if result.endswith("\n") else result + "\n"
        if job.format == "dot":
            text = dot_header(__version__, job.seed) + text
        write_output(text, job.output)
        return
    write_output(dump_json({**result, "version": __version__, "seed": job.seed}), job.output)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    config = load_config()
    logging.basicConfig(level=(args.log_level or config.log_level).upper())
    set_config(config)

    try:
        job = Job(
            command=args.command,
            input=args.input,
            output=args.output,
            max_n=args.max_n,
            seed=args.seed,
            format=args.format,
        )
    except (SizeCap, ValueError) as e:
        parser.print_usage(sys.stderr)
        print(f"nesto: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    # verify-all reads --max-n as the suite size; its instances may extend past it
    if job.command not in SUITE_SIZED:
        set_config(config.with_max_n(job.max_n))
    logger.info(f"running {job.command} (seed={job.seed}, max_n={job.effective_max_n})")
    try:
        result = COMMANDS[job.command](job, args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"nesto: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as e:
        print(f"nesto: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except NestoError as e:
        logger.info(f"{job.command} failed: {e}")
        _emit(job, _failure(job, e.to_dict()))
        return EXIT_FAILED
    except (ValueError, KeyError, TypeError) as e:
        _emit(job, _failure(job, {"error": "InvalidInput", "message": str(e), "witness": None}))
        return EXIT_FAILED
    finally:
        set_config(config)

    _emit(job, result)
    if isinstance(result, dict) and result.get("ok") is False:
        return EXIT_FAILED
    return EXIT_OK


def main():
    load_dotenv()
    sys.exit(run())


if __name__ == "__main__":
    main()
