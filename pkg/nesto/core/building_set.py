import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Optional

from ..config import get_config
from ..errors import (
    GroundTooLarge,
    MissingSingleton,
    NotChordal,
    UnionClosureViolation,
    fmt_set,
)

logger = logging.getLogger(__name__)

Subset = frozenset[int]


def subset_key(s: Iterable[int]) -> tuple:
    """Canonical subset order: cardinality first, then lexicographic on the sorted elements."""
    items = tuple(sorted(s))
    return (len(items), items)


def canonical(sets: Iterable[Iterable[int]]) -> tuple[Subset, ...]:
    unique = {frozenset(s) for s in sets}
    return tuple(sorted(unique, key=subset_key))


def is_interval(s: Iterable[int]) -> bool:
    items = sorted(s)
    return bool(items) and items[-1] - items[0] + 1 == len(items)


def subsets_of(items: Iterable[int], proper: bool = False) -> Iterable[Subset]:
    """All subsets (empty one first, by size then lex); `proper` drops the full set."""
    items = tuple(sorted(items))
    top = len(items) - 1 if proper else len(items)
    for k in range(top + 1):
        for combo in combinations(items, k):
            yield frozenset(combo)


def check_ground_size(n: int, what: str = "enumeration"):
    cap = get_config().max_n
    if n > cap:
        raise GroundTooLarge(n, cap, what)


@dataclass(frozen=True)
class BuildingSet:
    """A building set on an explicit ground set.

    `ground` keeps the original labels through restriction and contraction, so
    label-sensitive predicates (chordality, intervals) stay meaningful.
    `sets` is deduplicated and sorted in canonical subset order.
    """

    ground: tuple[int, ...]
    sets: tuple[Subset, ...]

    @classmethod
    def build(cls, ground: Iterable[int], sets: Iterable[Iterable[int]]) -> "BuildingSet":
        """Canonicalize without checking (B1)/(B2). Use validate() for untrusted input."""
        return cls(tuple(sorted(set(ground))), canonical(sets))

    @classmethod
    def empty(cls) -> "BuildingSet":
        return cls((), ())

    @property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def members(self) -> frozenset[Subset]:
        return frozenset(self.sets)

    @cached_property
    def ground_set(self) -> Subset:
        return frozenset(self.ground)

    def __contains__(self, s) -> bool:
        return frozenset(s) in self.members

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)

    @cached_property
    def maxima(self) -> tuple[Subset, ...]:
        """Inclusion-maximal members, in canonical order."""
        result = []
        for s in self.sets:
            if not any(s < t for t in self.sets):
                result.append(s)
        return tuple(result)

    @property
    def is_connected(self) -> bool:
        return self.ground_set in self.members

    def restriction(self, s: Iterable[int]) -> "BuildingSet":
        s = frozenset(s)
        if not s <= self.ground_set:
            raise ValueError(f"{fmt_set(s)} is not a subset of the ground set {fmt_set(self.ground)}")
        return BuildingSet(tuple(sorted(s)), tuple(j for j in self.sets if j <= s))

    def contraction(self, c: Iterable[int]) -> "BuildingSet":
        c = frozenset(c)
        if not c <= self.ground_set:
            raise ValueError(f"{fmt_set(c)} is not a subset of the ground set {fmt_set(self.ground)}")
        return BuildingSet.build(self.ground_set - c, (j - c for j in self.sets if not j <= c))

    def components(self) -> list["BuildingSet"]:
        return [self.restriction(m) for m in self.maxima]

    def relabel(self, mapping: dict[int, int]) -> "BuildingSet":
        return BuildingSet.build(
            (mapping[i] for i in self.ground),
            ({mapping[i] for i in s} for s in self.sets),
        )

    @property
    def is_even(self) -> bool:
        return all(len(m) % 2 == 0 for m in self.maxima)

    @property
    def is_odd(self) -> bool:
        return all(len(m) % 2 == 1 for m in self.maxima)

    def label(self) -> str:
        return "{" + ", ".join(fmt_set(s) for s in self.sets) + "}"

    def __str__(self) -> str:
        return f"BuildingSet(ground={fmt_set(self.ground)}, sets={self.label()})"

    def to_json(self) -> dict:
        data = {"n": self.n, "sets": [sorted(s) for s in self.sets]}
        if self.ground != tuple(range(1, self.n + 1)):
            data["ground"] = list(self.ground)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "BuildingSet":
        """Parse {"n": .., "sets": [[..], ..]} (optionally with an explicit "ground") and validate it"""
        ground = data.get("ground")
        if ground is None:
            return validate(data["sets"], int(data["n"]))
        return validate_on(ground, data["sets"])


def validate_on(ground: Iterable[int], sets: Iterable[Iterable[int]]) -> BuildingSet:
    """Check (B1) and (B2) over an arbitrary ground set and return the canonical building set."""
    ground_set = frozenset(ground)
    check_ground_size(len(ground_set))
    family = canonical(sets)

    for s in family:
        if not s:
            raise ValueError("building set members must be nonempty")
        if not s <= ground_set:
            raise ValueError(f"{fmt_set(s)} is not contained in the ground set {fmt_set(ground_set)}")

    members = set(family)
    for i in sorted(ground_set):
        if frozenset([i]) not in members:
            raise MissingSingleton(i)

    for first, second in combinations(family, 2):
        if first & second and (first | second) not in members:
            raise UnionClosureViolation(first, second)

    return BuildingSet(tuple(sorted(ground_set)), family)


def validate(sets: Iterable[Iterable[int]], n: int) -> BuildingSet:
    if n < 0:
        raise ValueError(f"ground-set size must be nonnegative, got {n}")
    return validate_on(range(1, n + 1), sets)


def restriction(b: BuildingSet, s: Iterable[int]) -> BuildingSet:
    return b.restriction(s)


def contraction(b: BuildingSet, i: Iterable[int]) -> BuildingSet:
    return b.contraction(i)


def maximal_elements(b: BuildingSet) -> list[Subset]:
    return list(b.maxima)


def connected_components(b: BuildingSet) -> list[BuildingSet]:
    return b.components()


def chordal_violation(b: BuildingSet) -> Optional[tuple[Subset, Subset]]:
    """First (member, missing suffix) pair in canonical order, or None when b is chordal."""
    for s in b.sets:
        items = sorted(s)
        for k in range(1, len(items)):
            suffix = frozenset(items[k:])
            if suffix not in b.members:
                return s, suffix
    return None


def is_chordal(b: BuildingSet) -> bool:
    return chordal_violation(b) is None


def require_chordal(b: BuildingSet):
    violation = chordal_violation(b)
    if violation is not None:
        raise NotChordal(*violation)


def flag_violation(b: BuildingSet) -> Optional[Subset]:
    for s in b.sets:
        if len(s) < 2:
            continue
        if not any(j < s and (s - j) in b.members for j in b.sets):
            return s
    return None


def is_flag(b: BuildingSet) -> bool:
    """Every non-singleton member splits as a disjoint union of two members."""
    return flag_violation(b) is None
