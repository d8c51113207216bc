import logging
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Optional

from ..complex.nested import extended_nested_complex, nested_complex
from ..complex.simplicial import Design
from ..core.building_set import BuildingSet, Subset, is_interval, validate, validate_on
from ..counting.face_numbers import f_of_dual
from ..counting.report import IdentityReport
from ..errors import NotSpider, fmt_set
from .intervals import interval, interval_extension, interval_rotation, flip, reflect, rotate
from .vertex_map import VertexMap

logger = logging.getLogger(__name__)


def _leg_problem(leg: BuildingSet, first: int) -> Optional[str]:
    """Why `leg` is not an interval building set on first..ℓ holding every [first, k]."""
    length = len(leg.ground)
    if leg.ground != tuple(range(first, first + length)) and not (first == 1 and length == 0):
        return f"leg ground {list(leg.ground)} is not {first}..{first + length - 1}"
    for s in leg:
        if not is_interval(s):
            return f"{fmt_set(s)} is not an interval"
    for k in range(max(first, 1), first + length):
        if interval(first, k) not in leg:
            return f"prefix {fmt_set(interval(first, k))} is missing"
    return None


class _Legs:
    """Consecutive leg layout shared by spiders and octopuses."""

    legs: tuple[BuildingSet, ...]
    head: int

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(max(leg.ground, default=0) for leg in self.legs)

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        offsets, total = [], self.head
        for length in self.lengths:
            offsets.append(total)
            total += length
        return tuple(offsets)

    @property
    def n(self) -> int:
        return self.head + sum(self.lengths)

    def leg_positions(self, i: int) -> Subset:
        return interval(self.offsets[i] + 1, self.offsets[i] + self.lengths[i])

    def leg_of(self, g: int) -> int:
        for i in range(len(self.legs)):
            if g in self.leg_positions(i):
                return i
        raise ValueError(f"{g} lies on no leg")

    def local(self, i: int, s: Iterable[int]) -> Subset:
        return frozenset(g - self.offsets[i] for g in s if g in self.leg_positions(i))

    def to_global(self, i: int, s: Iterable[int]) -> Subset:
        return frozenset(self.head if p == 0 else self.offsets[i] + p for p in s)

    def to_json(self) -> dict:
        return {"legs": [leg.to_json() for leg in self.legs]}


@dataclass(frozen=True)
class SpiderSpec(_Legs):
    """Interval legs on local labels 1..ℓ_i, position 1 touching the body.

    Legs are laid out consecutively on 1..n. Body sets are every nonempty union
    of one prefix [1, k] (or nothing) per leg.
    """

    legs: tuple[BuildingSet, ...]
    head = 0

    def __post_init__(self):
        if not self.legs:
            raise NotSpider(1, "a spider needs at least one leg")
        for i, leg in enumerate(self.legs):
            if leg.n == 0:
                raise NotSpider(1, f"leg {i + 1} is empty")
            problem = _leg_problem(leg, 1)
            if problem:
                raise NotSpider(1, f"leg {i + 1}: {problem}")

    @classmethod
    def complete(cls, m: int) -> "SpiderSpec":
        """B_{K_m}: m legs of length one."""
        return cls(tuple(validate([[1]], 1) for _ in range(m)))

    @classmethod
    def from_json(cls, data: dict) -> "SpiderSpec":
        """Parse {"legs": [{"n": .., "sets": ..}, ..]}"""
        return cls(tuple(BuildingSet.from_json(leg) for leg in data["legs"]))

    def firsts(self) -> list[int]:
        return [offset + 1 for offset in self.offsets]

    @cached_property
    def building_set(self) -> BuildingSet:
        leg_sets = [
            self.to_global(i, s)
            for i, leg in enumerate(self.legs)
            for s in leg
            if 1 not in s
        ]
        choices = [
            [frozenset()] + [self.to_global(i, interval(1, k)) for k in range(1, length + 1)]
            for i, length in enumerate(self.lengths)
        ]
        body = [frozenset().union(*pick) for pick in product(*choices)]
        return validate(leg_sets + [s for s in body if s], self.n)


@dataclass(frozen=True)
class OctopusSpec(_Legs):
    """Interval legs on local labels 0..ℓ_i, 0 being the head *.

    The head gets global label 1 and legs follow consecutively. Each leg holds every
    [0, k] and every suction cup prefix [1, k].
    """

    legs: tuple[BuildingSet, ...]
    head = 1

    def __post_init__(self):
        if not self.legs:
            raise NotSpider(1, "an octopus needs at least one leg")
        for i, leg in enumerate(self.legs):
            problem = _leg_problem(leg, 0) or _leg_problem(leg.restriction(leg.ground_set - {0}), 1)
            if problem:
                raise NotSpider(1, f"octopus leg {i + 1}: {problem}")

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(leg.ground) - 1 for leg in self.legs)

    @classmethod
    def from_json(cls, data: dict) -> "OctopusSpec":
        """Parse {"legs": [{"n": .., "ground": [0, ..], "sets": ..}, ..]}"""
        return cls(tuple(BuildingSet.from_json(leg) for leg in data["legs"]))

    def suffix_condition_holds(self) -> bool:
        """Whether every leg also holds each [k, ℓ]."""
        return all(
            interval(k, length) in leg
            for leg, length in zip(self.legs, self.lengths)
            for k in range(1, length + 1)
        )

    @cached_property
    def building_set(self) -> BuildingSet:
        leg_sets = [self.to_global(i, s) for i, leg in enumerate(self.legs) for s in leg if 0 not in s]
        choices = [[self.to_global(i, s) for s in leg if 0 in s] for i, leg in enumerate(self.legs)]
        body = [frozenset().union(*pick) for pick in product(*choices)]
        return validate_on(range(1, self.n + 1), leg_sets + body)


def spider_violation(b: BuildingSet, lengths: Iterable[int]) -> Optional[NotSpider]:
    """Literal check of the three spider conditions for legs of the given lengths laid out on 1..n."""
    lengths = list(lengths)
    if b.ground != tuple(range(1, sum(lengths) + 1)) or not lengths or min(lengths) < 1:
        return NotSpider(1, f"legs {lengths} do not tile the ground {list(b.ground)}")
    starts = [1 + sum(lengths[:i]) for i in range(len(lengths))]
    legs = [interval(start, start + length - 1) for start, length in zip(starts, lengths)]
    restricted = [b.restriction(leg) for leg in legs]

    for i, (start, leg, part) in enumerate(zip(starts, legs, restricted)):
        local = part.relabel({g: g - start + 1 for g in leg})
        problem = _leg_problem(local, 1)
        if problem:
            return NotSpider(1, f"leg {i + 1}: {problem}")
        for s in b:
            if s & leg and not s <= leg and start not in s:
                return NotSpider(1, f"{fmt_set(s)} meets leg {i + 1} without containing {start}")

    body = [s for s in b if any(start in s for start in starts)]
    for first, second in combinations(body, 2):
        if (first | second) not in b:
            return NotSpider(2, f"{fmt_set(first | second)} is missing")

    for s in b:
        for i, (leg, part) in enumerate(zip(legs, restricted)):
            if s & leg and (s & leg) not in part:
                return NotSpider(3, f"{fmt_set(s)} restricts to {fmt_set(s & leg)} outside leg {i + 1}")
    return None


def check_spider(b: BuildingSet, lengths: Iterable[int]) -> SpiderSpec:
    lengths = list(lengths)
    violation = spider_violation(b, lengths)
    if violation is not None:
        raise violation
    starts = [sum(lengths[:i]) for i in range(len(lengths))]
    return SpiderSpec(tuple(
        b.restriction(range(start + 1, start + length + 1)).relabel(
            {start + p: p for p in range(1, length + 1)}
        )
        for start, length in zip(starts, lengths)
    ))


def octopus_leg_image(v, length: int) -> Subset:
    """One spider leg vertex (member, design, or the empty restriction) through
    extension, rotation, flip and the shift k -> k-1."""
    if isinstance(v, Design):
        s = interval(v.index + 1, length + 1)
    else:
        s = frozenset(v)
    s = reflect(rotate(s, length + 1), length + 1)
    return frozenset(p - 1 for p in s)


def octopus_leg(leg: BuildingSet) -> BuildingSet:
    extended, _ = interval_extension(leg)
    rotated, _ = interval_rotation(extended)
    flipped, _ = flip(rotated)
    return flipped.relabel({p: p - 1 for p in flipped.ground})


def spider_to_octopus(spider: SpiderSpec) -> tuple[OctopusSpec, VertexMap]:
    """The octopus whose nested complex is isomorphic to N□(spider), with the vertex map."""
    octopus = OctopusSpec(tuple(octopus_leg(leg) for leg in spider.legs))
    b = spider.building_set
    firsts = set(spider.firsts())

    def image(v):
        if isinstance(v, Design):
            i = spider.leg_of(v.index)
            local = Design(v.index - spider.offsets[i])
            return octopus.to_global(i, octopus_leg_image(local, spider.lengths[i]))
        if v & firsts:
            parts = [
                octopus.to_global(i, octopus_leg_image(spider.local(i, v), length))
                for i, length in enumerate(spider.lengths)
            ]
            return frozenset().union(*parts)
        i = spider.leg_of(min(v))
        return octopus.to_global(i, octopus_leg_image(spider.local(i, v), spider.lengths[i]))

    vmap = VertexMap.from_function(extended_nested_complex(b).vertices, image)
    logger.debug(f"spider with legs {spider.lengths} -> octopus on {octopus.n} elements")
    return octopus, vmap


def spider_flip(spider: SpiderSpec) -> tuple[SpiderSpec, VertexMap]:
    """The spider with legs flip(Φ(B_i)) and the vertex map N(B) -> N(B')."""
    flipped = SpiderSpec(tuple(flip(interval_rotation(leg)[0])[0] for leg in spider.legs))
    b = spider.building_set
    firsts = set(spider.firsts())

    def leg_image(i: int, s: Subset) -> Subset:
        length = spider.lengths[i]
        return spider.to_global(i, reflect(rotate(s, length), length))

    def image(v):
        if v & firsts:
            return frozenset().union(*(leg_image(i, spider.local(i, v)) for i in range(len(spider.legs))))
        i = spider.leg_of(min(v))
        return leg_image(i, spider.local(i, v))

    return flipped, VertexMap.from_function(nested_complex(b).vertices, image)


def spider_report(spider: SpiderSpec) -> IdentityReport:
    b = spider.building_set
    report = IdentityReport(b.label())
    octopus, vmap = spider_to_octopus(spider)
    source = extended_nested_complex(b)
    target = nested_complex(octopus.building_set)
    report.record("octopus_map_is_isomorphism", vmap.confirms(source, target))
    report.record("octopus_keeps_f", f_of_dual(source) == f_of_dual(target, b.n))

    flipped, fmap = spider_flip(spider)
    report.record(
        "spider_flip_is_isomorphism",
        fmap.confirms(nested_complex(b), nested_complex(flipped.building_set)),
    )
    report.flag("octopus_holds_every_suffix", octopus.suffix_condition_holds())
    return report
