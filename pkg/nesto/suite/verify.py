import logging
import time
from typing import Iterable, Optional

from .. import __version__
from .job import Job
from .suites import SUITES

logger = logging.getLogger(__name__)


def verify_all(job: Job, suites: Optional[Iterable[str]] = None, workers: int = 1) -> dict:
    """Run the selected suites (all by default) and assemble one canonical report."""
    names = list(SUITES) if suites is None else list(suites)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")

    max_n = job.effective_max_n
    report = {"version": __version__, "seed": job.seed, "max_n": max_n, "suites": {}}
    failures = []
    for name in names:
        started = time.perf_counter()
        suite = SUITES[name](workers=workers)
        results = suite.run(max_n, job.seed)
        failed = [r for r in results if not r["ok"]]
        report["suites"][name] = {"checks": len(results), "failed": len(failed), "results": results}
        failures.extend({"suite": name, **r} for r in failed)
        logger.info(f"suite {name}: {len(results)} checks, {len(failed)} failed in {time.perf_counter() - started:.1f}s")

    report["ok"] = not failures
    report["first_failure"] = failures[0] if failures else None
    return report
