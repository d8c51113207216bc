import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..complex.nested import extended_nested_complex
from ..complex.simplicial import SimplicialComplex, face_label
from ..core.graphs import complete_building_set
from ..counting.report import IdentityReport
from .weak_order import facet_of_word, partial_weak_order

logger = logging.getLogger(__name__)


@dataclass
class ShellingResult:
    ok: bool
    witness: Optional[tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"ok": self.ok, "witness": list(self.witness) if self.witness else None}


def verify_shelling(complex_: SimplicialComplex, order: Sequence[frozenset]) -> ShellingResult:
    """Every earlier F_i meets F_j inside some earlier ridge F_l ∩ F_j of size d - 1.

    The witness is the first failing (i, j), 0-based.
    """
    d = complex_.facet_size()
    facets = [frozenset(f) for f in order]
    if sorted(facets, key=face_label) != sorted(complex_.facets, key=face_label):
        raise ValueError("order must list every facet exactly once")
    for j in range(1, len(facets)):
        ridges = [facets[l] & facets[j] for l in range(j)]
        ridges = [r for r in ridges if len(r) == d - 1]
        for i in range(j):
            common = facets[i] & facets[j]
            if not any(common <= r for r in ridges):
                return ShellingResult(False, (i, j))
    return ShellingResult(True)


def stellohedron_shelling_report(n: int, samples: int, seed: int) -> IdentityReport:
    """Random linear extensions of the partial weak order shell N□(B_{K_n})."""
    report = IdentityReport(f"K_{n}")
    rng = np.random.default_rng(seed)
    b = complete_building_set(n)
    complex_ = extended_nested_complex(b)
    order = partial_weak_order(n)
    failures = []
    for _ in range(samples):
        extension = order.random_linear_extension(rng)
        result = verify_shelling(complex_, [facet_of_word(b, w) for w in extension])
        if not result:
            failures.append({"extension": [list(w) for w in extension], "witness": list(result.witness)})
    report.record("linear_extensions_shell", not failures, {"samples": samples, "seed": seed})
    if failures:
        report.details["failure"] = failures[0]
    logger.info(f"checked {samples} linear extensions of P_{n}")
    return report
