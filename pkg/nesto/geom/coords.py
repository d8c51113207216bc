import csv
import logging
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from ..complex.nested import extended_nested_complex, is_nested, nested_complex, split_face
from ..complex.simplicial import face_key, face_label
from ..core.building_set import BuildingSet
from ..errors import NotMaximal
from ..perms.forests import nested_to_forest

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexCoordinates:
    """Integer vertex of the (extended) nestohedron dual to one facet, indexed by the ground order."""

    facet: frozenset
    coords: tuple[int, ...]

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coords, dtype=np.int64)

    def to_row(self, ground: Iterable[int]) -> dict:
        return {"facet": face_label(self.facet), **{f"v{i}": c for i, c in zip(ground, self.coords)}}


def incidence(b: BuildingSet) -> np.ndarray:
    """members x ground boolean matrix."""
    index = {g: k for k, g in enumerate(b.ground)}
    matrix = np.zeros((len(b), b.n), dtype=bool)
    for row, s in enumerate(b):
        matrix[row, [index[i] for i in s]] = True
    return matrix


def extended_vertex_coords(b: BuildingSet, facet: Iterable) -> VertexCoordinates:
    """v_k = 0 when x_k is in the facet, else |{I ∋ k}| - |F_{<=k}| + 1."""
    facet = frozenset(facet)
    forest = nested_to_forest(b, facet)
    containing = incidence(b).sum(axis=0)
    coords = []
    for k, i in enumerate(b.ground):
        if i in forest.nodes:
            coords.append(int(containing[k]) - len(forest.descendants(i)) + 1)
        else:
            coords.append(0)
    return VertexCoordinates(facet, tuple(coords))


def nestohedron_vertex_coords(b: BuildingSet, facet: Iterable) -> VertexCoordinates:
    """v_i = |{I ∈ b : i ∈ I ⊆ T_{<=i}}| over the tree of the maximal nested collection."""
    facet = frozenset(facet)
    members, designs = split_face(facet)
    if designs or not is_nested(b, members):
        raise NotMaximal(face_label(facet))
    forest = nested_to_forest(b, facet | set(b.maxima))
    matrix = incidence(b)
    index = {g: k for k, g in enumerate(b.ground)}
    coords = []
    for i in b.ground:
        below = np.zeros(b.n, dtype=bool)
        below[[index[j] for j in forest.descendants(i)]] = True
        inside = ~(matrix & ~below).any(axis=1)
        coords.append(int((matrix[:, index[i]] & inside).sum()))
    return VertexCoordinates(facet, tuple(coords))


def coordinate_table(b: BuildingSet, extended: bool = True) -> list[VertexCoordinates]:
    if extended:
        return [extended_vertex_coords(b, f) for f in extended_nested_complex(b).facets]
    return [nestohedron_vertex_coords(b, f) for f in nested_complex(b).facets]


def coordinate_matrix(rows: list[VertexCoordinates]) -> np.ndarray:
    if not rows:
        return np.zeros((0, 0), dtype=np.int64)
    return np.stack([row.array for row in rows])


def write_csv(b: BuildingSet, rows: list[VertexCoordinates], out: TextIO):
    fieldnames = ["facet"] + [f"v{i}" for i in b.ground]
    writer = csv.DictWriter(out, fieldnames=fieldnames)
    writer.writeheader()
    for row in sorted(rows, key=lambda r: face_key(r.facet)):
        writer.writerow(row.to_row(b.ground))
