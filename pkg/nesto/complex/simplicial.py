import re
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Callable, Hashable, Iterable, Iterator, Union

import networkx as nx

from ..errors import NotPure, fmt_set


@dataclass(frozen=True, order=True)
class Design:
    """The design vertex x_i marking that ground element i is absent from a collection's support."""

    index: int

    def __str__(self) -> str:
        return f"x_{self.index}"


Vertex = Union[frozenset, Design]

_DESIGN_LABEL = re.compile(r"^x_(\d+)$")
_MEMBER_LABEL = re.compile(r"^\{([\d,\s]*)\}$")


def vertex_key(v: Any) -> tuple:
    """Members first in canonical subset order, then designs by index, then anything else by str."""
    if isinstance(v, frozenset):
        items = tuple(sorted(v))
        return (0, len(items), items)
    if isinstance(v, Design):
        return (1, v.index, ())
    return (2, 0, (str(v),))


def vertex_label(v: Any) -> str:
    if isinstance(v, frozenset):
        return fmt_set(v)
    return str(v)


def parse_vertex_label(label: str) -> Vertex:
    design = _DESIGN_LABEL.match(label)
    if design:
        return Design(int(design.group(1)))
    member = _MEMBER_LABEL.match(label)
    if member:
        body = member.group(1).strip()
        return frozenset(int(x) for x in body.split(",")) if body else frozenset()
    raise ValueError(f"unrecognised vertex label {label!r}")


def face_key(face: Iterable[Hashable]) -> tuple:
    keys = sorted(vertex_key(v) for v in face)
    return (len(keys), tuple(keys))


def face_label(face: Iterable[Hashable]) -> str:
    return "{" + ", ".join(vertex_label(v) for v in sorted(face, key=vertex_key)) + "}"


def maximal_only(faces: Iterable[frozenset]) -> list[frozenset]:
    unique = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    for f in unique:
        if not any(f < g for g in kept):
            kept.append(f)
    return kept


@dataclass(frozen=True)
class SimplicialComplex:
    """A complex given by its facets. Vertices are opaque hashable labels.

    The complex {∅} (one empty facet) is the complex of the empty building set.
    """

    facets: tuple[frozenset, ...]

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Hashable]]) -> "SimplicialComplex":
        kept = maximal_only(frozenset(f) for f in facets)
        if not kept:
            kept = [frozenset()]
        return cls(tuple(sorted(kept, key=face_key)))

    @cached_property
    def vertices(self) -> tuple:
        verts = set()
        for f in self.facets:
            verts |= f
        return tuple(sorted(verts, key=vertex_key))

    @cached_property
    def facet_sizes(self) -> tuple[int, ...]:
        return tuple(sorted({len(f) for f in self.facets}))

    @property
    def is_pure(self) -> bool:
        return len(self.facet_sizes) == 1

    def facet_size(self) -> int:
        """Common facet cardinality; raises NotPure otherwise."""
        if not self.is_pure:
            raise NotPure(self.facet_sizes)
        return self.facet_sizes[0]

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def is_face(self, s: Iterable[Hashable]) -> bool:
        s = frozenset(s)
        return any(s <= f for f in self.facets)

    def faces(self) -> Iterator[frozenset]:
        """Every face including the empty one, each exactly once."""
        seen: set[frozenset] = set()
        for f in self.facets:
            items = sorted(f, key=vertex_key)
            for k in range(len(items) + 1):
                for combo in combinations(items, k):
                    face = frozenset(combo)
                    if face not in seen:
                        seen.add(face)
                        yield face

    def faces_of_size(self, k: int) -> set[frozenset]:
        result = set()
        for f in self.facets:
            for combo in combinations(f, k):
                result.add(frozenset(combo))
        return result

    def star_facets(self, vertex: Hashable) -> list[frozenset]:
        return [f for f in self.facets if vertex in f]

    def link(self, face: Iterable[Hashable]) -> "SimplicialComplex":
        face = frozenset(face)
        return SimplicialComplex.from_facets(f - face for f in self.facets if face <= f)

    def induced(self, vertices: Iterable[Hashable]) -> "SimplicialComplex":
        keep = frozenset(vertices)
        return SimplicialComplex.from_facets(f & keep for f in self.facets)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        return SimplicialComplex.from_facets(f | g for f in self.facets for g in other.facets)

    def relabel(self, mapping: Union[dict, Callable]) -> "SimplicialComplex":
        fn = mapping.get if isinstance(mapping, dict) else mapping
        return SimplicialComplex.from_facets(frozenset(fn(v) for v in f) for f in self.facets)

    def one_skeleton(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for f in self.facets:
            g.add_edges_from(combinations(f, 2))
        return g

    def __len__(self) -> int:
        return len(self.facets)

    def __str__(self) -> str:
        return "[" + ", ".join(face_label(f) for f in self.facets) + "]"

    def to_json(self) -> dict:
        return {
            "vertices": [vertex_label(v) for v in self.vertices],
            "facets": [[vertex_label(v) for v in sorted(f, key=vertex_key)] for f in self.facets],
        }

    @classmethod
    def from_json(cls, data: dict) -> "SimplicialComplex":
        """Parse {"facets": [[label, ..], ..]}; labels "{1,2}" and "x_3" become members and designs"""
        return cls.from_facets(
            frozenset(parse_vertex_label(v) if isinstance(v, str) else v for v in facet)
            for facet in data["facets"]
        )


def join_all(complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    result = SimplicialComplex.from_facets([frozenset()])
    for c in complexes:
        result = result.join(c)
    return result
