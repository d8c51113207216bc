from typing import Any, Iterable


def fmt_set(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


class NestoError(Exception):
    """Base class for every failure the library reports. `witness` is JSON-friendly."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        return {"error": self.code, "message": str(self), "witness": self.witness}


# Building sets

class MissingSingleton(NestoError):
    def __init__(self, i: int):
        super().__init__(f"singleton {{{i}}} is missing", witness=i)
        self.element = i


class UnionClosureViolation(NestoError):
    def __init__(self, first: Iterable[int], second: Iterable[int]):
        first, second = sorted(first), sorted(second)
        super().__init__(
            f"{fmt_set(first)} and {fmt_set(second)} intersect but their union is missing",
            witness=[first, second],
        )
        self.pair = (frozenset(first), frozenset(second))


class GroundTooLarge(NestoError):
    def __init__(self, n: int, cap: int, what: str = "enumeration"):
        super().__init__(f"ground set of size {n} exceeds the {what} cap {cap}", witness=[n, cap])


class SizeCap(NestoError):
    def __init__(self, size: int, cap: int, what: str):
        super().__init__(f"{what} of size {size} exceeds cap {cap}", witness=[size, cap])


class NotConnected(NestoError):
    def __init__(self, maxima: list):
        super().__init__(
            "building set is not connected: maxima " + ", ".join(fmt_set(m) for m in maxima),
            witness=[sorted(m) for m in maxima],
        )


class NotChordal(NestoError):
    def __init__(self, member: Iterable[int], suffix: Iterable[int]):
        super().__init__(
            f"suffix {fmt_set(suffix)} of {fmt_set(member)} is not a member",
            witness=[sorted(member), sorted(suffix)],
        )


class NotFlag(NestoError):
    def __init__(self, member: Iterable[int] | None = None, reason: str | None = None):
        if member is not None:
            message = f"{fmt_set(member)} is not a disjoint union of two members"
            witness = sorted(member)
        else:
            message = reason or "building set is not flag"
            witness = None
        super().__init__(message, witness=witness)


class NotAForest(NestoError):
    def __init__(self, reason: str = "graph has a cycle"):
        super().__init__(reason)


class NotIntervalBuildingSet(NestoError):
    def __init__(self, member: Iterable[int]):
        super().__init__(f"{fmt_set(member)} is not an interval", witness=sorted(member))


class PreconditionIntervalsMissing(NestoError):
    def __init__(self, interval: Iterable[int]):
        super().__init__(f"required interval {fmt_set(interval)} is missing", witness=sorted(interval))


class NotSpider(NestoError):
    def __init__(self, condition: int, detail: str):
        super().__init__(f"spider condition {condition} fails: {detail}", witness=condition)
        self.condition = condition


# Complexes

class MemberNotInBuildingSet(NestoError):
    def __init__(self, member: Iterable[int]):
        super().__init__(f"{fmt_set(member)} is not a member of the building set", witness=sorted(member))


class VertexNotInComplex(NestoError):
    def __init__(self, vertex: Any):
        super().__init__(f"{vertex} is not a vertex of the complex", witness=str(vertex))


class NotPure(NestoError):
    def __init__(self, sizes: Iterable[int]):
        sizes = sorted(set(sizes))
        super().__init__(f"complex is not pure, facet sizes {sizes}", witness=sizes)


class NotMaximal(NestoError):
    def __init__(self, face: Any = None):
        super().__init__(f"collection {face} is not maximal", witness=str(face))


class SearchBudgetExceeded(NestoError):
    def __init__(self, budget: int):
        super().__init__(f"isomorphism search exceeded {budget} nodes", witness=budget)


# Polynomials

class NotSymmetric(NestoError):
    def __init__(self, coeffs: list[int], d: int):
        super().__init__(f"h = {coeffs} is not symmetric of degree {d}", witness=coeffs)


class CoefficientOverflow(NestoError):
    def __init__(self, value: int):
        super().__init__(f"coefficient {value} does not fit in 64 bits", witness=str(value))


# Forests and permutations

class ForestConditionViolated(NestoError):
    def __init__(self, condition: str, detail: str):
        super().__init__(f"forest condition {condition} fails: {detail}", witness=condition)
        self.condition = condition


class NotIntermediary(NestoError):
    def __init__(self, word: tuple, a: int):
        super().__init__(f"{a} is not an intermediary entry of {list(word)}", witness=[list(word), a])


class LeapOutOfRange(NestoError):
    def __init__(self, r: int, low: int, high: int):
        super().__init__(f"leap r={r} outside [{low}, {high}]", witness=[r, low, high])


class NotExtendedBPermutation(NestoError):
    def __init__(self, word: tuple):
        super().__init__(f"{list(word)} is not an extended B-permutation", witness=list(word))


# Orders

class NotComparable(NestoError):
    def __init__(self, x: Any, y: Any):
        super().__init__(f"{x} and {y} are not comparable", witness=[str(x), str(y)])


# Geometry

class FaceMissing(NestoError):
    def __init__(self, face: Any):
        super().__init__(f"face {face} is not in the complex", witness=str(face))


class NonGenericCost(NestoError):
    def __init__(self, first: Any, second: Any, value: int):
        super().__init__(
            f"cost ties at {value} on adjacent vertices {first} and {second}",
            witness=[str(first), str(second), value],
        )
