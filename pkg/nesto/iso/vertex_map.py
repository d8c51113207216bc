from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable

from ..complex.isomorphism import check_vertex_map
from ..complex.simplicial import SimplicialComplex, vertex_key, vertex_label


@dataclass(frozen=True)
class VertexMap:
    """A finite vertex bijection, kept as (source, target) pairs in source order."""

    pairs: tuple[tuple[Hashable, Hashable], ...]

    @classmethod
    def from_dict(cls, mapping: dict) -> "VertexMap":
        return cls(tuple(sorted(mapping.items(), key=lambda p: vertex_key(p[0]))))

    @classmethod
    def from_function(cls, vertices: Iterable[Hashable], fn: Callable[[Any], Any]) -> "VertexMap":
        return cls.from_dict({v: fn(v) for v in vertices})

    @cached_property
    def mapping(self) -> dict:
        return dict(self.pairs)

    def __call__(self, v: Hashable) -> Hashable:
        return self.mapping[v]

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping.values())) == len(self.mapping)

    def inverse(self) -> "VertexMap":
        if not self.is_injective:
            raise ValueError("map is not injective")
        return VertexMap.from_dict({t: s for s, t in self.pairs})

    def then(self, other: "VertexMap") -> "VertexMap":
        """self followed by other."""
        return VertexMap.from_dict({s: other(t) for s, t in self.pairs})

    def restrict(self, vertices: Iterable[Hashable]) -> "VertexMap":
        keep = set(vertices)
        return VertexMap.from_dict({s: t for s, t in self.pairs if s in keep})

    def confirms(self, source: SimplicialComplex, target: SimplicialComplex) -> bool:
        """True when the map is a simplicial isomorphism source -> target."""
        if set(self.mapping) != set(source.vertices):
            return False
        return check_vertex_map(source, target, self.mapping)

    def to_json(self) -> list[list[str]]:
        return [[vertex_label(s), vertex_label(t)] for s, t in self.pairs]
