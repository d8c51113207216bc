import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from ..complex.nested import extended_facets, has_disjoint_union_in, is_extended_nested, split_face
from ..complex.simplicial import Design
from ..core.building_set import BuildingSet, Subset
from ..errors import ForestConditionViolated, NotMaximal, fmt_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RootedForest:
    """Rooted forest on a node set; `parent` holds (child, parent) pairs sorted by child.

    Viewed as a poset the roots are the maximal elements, so i ⋖ j means i is a child of j.
    """

    nodes: frozenset[int]
    parent: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for child, up in self.parent:
            if child not in self.nodes or up not in self.nodes:
                raise ValueError(f"edge {child}->{up} leaves the node set {fmt_set(self.nodes)}")
        if len({child for child, _ in self.parent}) != len(self.parent):
            raise ValueError("a node has more than one parent")
        # Every upward walk must end at a root
        parents = dict(self.parent)
        for start in self.nodes:
            seen = {start}
            node = start
            while node in parents:
                node = parents[node]
                if node in seen:
                    raise ValueError(f"cycle through {node}")
                seen.add(node)

    @classmethod
    def build(cls, nodes: Iterable[int], parent: Optional[dict[int, int]] = None) -> "RootedForest":
        parent = parent or {}
        return cls(frozenset(nodes), tuple(sorted(parent.items())))

    @classmethod
    def empty(cls) -> "RootedForest":
        return cls(frozenset())

    @cached_property
    def parent_map(self) -> dict[int, int]:
        return dict(self.parent)

    @cached_property
    def roots(self) -> tuple[int, ...]:
        return tuple(sorted(i for i in self.nodes if i not in self.parent_map))

    def children(self, i: int) -> tuple[int, ...]:
        return tuple(sorted(c for c, p in self.parent if p == i))

    @cached_property
    def _below(self) -> dict[int, frozenset[int]]:
        below = {i: {i} for i in self.nodes}
        for i in self.nodes:
            node = i
            while node in self.parent_map:
                node = self.parent_map[node]
                below[node].add(i)
        return {i: frozenset(s) for i, s in below.items()}

    def descendants(self, i: int) -> frozenset[int]:
        """F≤i: the node set of the subtree rooted at i, including i."""
        return self._below[i]

    def root_of(self, i: int) -> int:
        while i in self.parent_map:
            i = self.parent_map[i]
        return i

    def comparable(self, i: int, j: int) -> bool:
        return i in self.descendants(j) or j in self.descendants(i)

    def covers(self) -> list[tuple[int, int]]:
        return list(self.parent)

    def remove(self, i: int) -> "RootedForest":
        """Drop node i; its children become roots."""
        kept = {c: p for c, p in self.parent if c != i and p != i}
        return RootedForest.build(self.nodes - {i}, kept)

    def leaves(self) -> tuple[int, ...]:
        ups = set(self.parent_map.values())
        return tuple(sorted(i for i in self.nodes if i not in ups))

    def __len__(self) -> int:
        return len(self.nodes)

    def to_json(self) -> dict:
        return {"nodes": sorted(self.nodes), "parent": {str(c): p for c, p in self.parent}}

    @classmethod
    def from_json(cls, data: dict) -> "RootedForest":
        """Parse {"nodes": [..], "parent": {"child": parent, ..}}"""
        parent = {int(c): int(p) for c, p in data.get("parent", {}).items()}
        return cls.build(data["nodes"], parent)

    def to_dot(self, name: str = "forest") -> str:
        """Graphviz source with edges child -> parent and double-circled roots."""
        lines = [f"digraph {name} {{"]
        for i in sorted(self.nodes):
            shape = "doublecircle" if i in self.roots else "circle"
            lines.append(f'  "{i}" [shape={shape}];')
        for child, up in self.parent:
            lines.append(f'  "{child}" -> "{up}";')
        lines.append("}")
        return "\n".join(lines)


def forest_descents(f: RootedForest) -> set[tuple[int, int]]:
    """Covers i ⋖ j (i a child of j) with i > j."""
    return {(child, up) for child, up in f.parent if child > up}


def forest_violation(b: BuildingSet, f: RootedForest) -> Optional[tuple[str, str]]:
    """First failing forest condition as (name, detail), or None for an extended B-forest."""
    if not f.nodes <= b.ground_set:
        raise ValueError(f"forest nodes {fmt_set(f.nodes)} leave the ground set {fmt_set(b.ground)}")
    for i in sorted(f.nodes):
        below = f.descendants(i)
        if below not in b.members:
            return "F1", f"F≤{i} = {fmt_set(below)} is not in B"
    blocks = [f.descendants(i) for i in sorted(f.nodes)]
    if has_disjoint_union_in(b, blocks):
        return "F2", "a union over incomparable nodes lies in B"
    tops = {f.descendants(r) for r in f.roots}
    maxima = set(b.restriction(f.nodes).maxima)
    if tops != maxima:
        return "F3", "root subtrees " + ", ".join(fmt_set(s) for s in sorted(tops, key=sorted)) + " differ from the components of B|S"
    return None


def validate_forest(b: BuildingSet, f: RootedForest) -> bool:
    return forest_violation(b, f) is None


def require_forest(b: BuildingSet, f: RootedForest):
    violation = forest_violation(b, f)
    if violation is not None:
        raise ForestConditionViolated(*violation)


def forest_to_nested(b: BuildingSet, f: RootedForest) -> frozenset:
    """{F≤i : i in S} together with the designs x_i for i outside S."""
    require_forest(b, f)
    members = {f.descendants(i) for i in f.nodes}
    designs = {Design(i) for i in b.ground if i not in f.nodes}
    return frozenset(members | designs)


def _top(member: Subset, smaller: list[Subset]) -> int:
    rest = member.difference(*smaller) if smaller else member
    if len(rest) != 1:
        raise NotMaximal(fmt_set(member))
    return next(iter(rest))


def nested_to_forest(b: BuildingSet, face: Iterable) -> RootedForest:
    """Inverse of forest_to_nested on maximal extended nested collections."""
    face = frozenset(face)
    members, designs = split_face(face)
    if not is_extended_nested(b, members, designs) or len(face) != b.n:
        raise NotMaximal(sorted(str(v) for v in face))
    nodes = b.ground_set - set(designs)
    top = {}
    for m in members:
        top[m] = _top(m, [j for j in members if j < m])
    parent = {}
    for m in members:
        above = [j for j in members if m < j]
        if above:
            parent[top[m]] = top[min(above, key=len)]
    forest = RootedForest.build(nodes, parent)
    if set(top.values()) != nodes:
        raise NotMaximal(sorted(str(v) for v in face))
    logger.debug(f"face of size {len(face)} -> forest with roots {forest.roots}")
    return forest


def extended_forests(b: BuildingSet) -> list[RootedForest]:
    """All extended B-forests, one per facet of N□(b)."""
    return [nested_to_forest(b, facet) for facet in extended_facets(b)]
