from enum import Enum
from typing import Sequence, Union

from ..errors import LeapOutOfRange, NotIntermediary
from .forests import RootedForest, forest_descents


class PartialPermutation(tuple):
    """A word of distinct positive integers; its entry set is the S it permutes."""

    def __new__(cls, word: Sequence[int] = ()):
        word = tuple(int(x) for x in word)
        if len(set(word)) != len(word):
            raise ValueError(f"repeated entries in {list(word)}")
        if any(x < 1 for x in word):
            raise ValueError(f"entries must be positive: {list(word)}")
        return super().__new__(cls, word)

    @property
    def entries(self) -> frozenset[int]:
        return frozenset(self)

    def to_json(self) -> list[int]:
        return list(self)


class Permutation(PartialPermutation):
    """A word using each of 1..m exactly once."""

    def __new__(cls, word: Sequence[int] = ()):
        perm = super().__new__(cls, word)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise ValueError(f"{list(perm)} is not a permutation of 1..{len(perm)}")
        return perm


class Landform(str, Enum):
    PEAK = "peak"
    VALLEY = "valley"
    ASCENT = "ascent-intermediary"
    DESCENT = "descent-intermediary"


def word_descents(w: Sequence[int]) -> set[tuple[int, int]]:
    return {(w[i], w[i + 1]) for i in range(len(w) - 1) if w[i] > w[i + 1]}


def descents(x: Union[Sequence[int], RootedForest]) -> set[tuple[int, int]]:
    """Adjacent drops of a word, or child-above-parent covers of a forest."""
    if isinstance(x, RootedForest):
        return forest_descents(x)
    return word_descents(x)


def des(x: Union[Sequence[int], RootedForest]) -> int:
    return len(descents(x))


def _padded(w: Sequence[int]) -> list[int]:
    return [0, *w, 0]


def topography(w: Sequence[int]) -> dict[int, Landform]:
    """Landform of every entry, with w(0) = w(m+1) = 0."""
    p = _padded(w)
    result = {}
    for i in range(1, len(p) - 1):
        left, here, right = p[i - 1], p[i], p[i + 1]
        if left < here > right:
            result[here] = Landform.PEAK
        elif left > here < right:
            result[here] = Landform.VALLEY
        elif left < here:
            result[here] = Landform.ASCENT
        else:
            result[here] = Landform.DESCENT
    return result


def entries_of(w: Sequence[int], kind: Landform) -> list[int]:
    """Entries of the given landform in word order."""
    marks = topography(w)
    return [x for x in w if marks[x] == kind]


def peak_valley_sequence(w: Sequence[int]) -> list[int]:
    marks = topography(w)
    return [x for x in w if marks[x] in (Landform.PEAK, Landform.VALLEY)]


def intermediary_entries(w: Sequence[int]) -> list[int]:
    marks = topography(w)
    return [x for x in w if marks[x] in (Landform.ASCENT, Landform.DESCENT)]


def has_final_descent(w: Sequence[int]) -> bool:
    return len(w) >= 2 and w[-2] > w[-1]


def double_descents(w: Sequence[int]) -> list[tuple[int, int, int]]:
    """Triples of consecutive drops, reading a trailing 0 after the last entry."""
    p = [*w, 0]
    return [(p[i], p[i + 1], p[i + 2]) for i in range(len(p) - 2) if p[i] > p[i + 1] > p[i + 2]]


def _slopes(w: Sequence[int], a: int) -> tuple[list[int], list[int], int]:
    """Padded word without a, the gaps a fits into, and the index of a's own gap."""
    if a not in w:
        raise NotIntermediary(tuple(w), a)
    if topography(w)[a] not in (Landform.ASCENT, Landform.DESCENT):
        raise NotIntermediary(tuple(w), a)
    p = _padded(w)
    i = p.index(a)
    rest = p[:i] + p[i + 1:]
    # gap j sits between rest[j-1] and rest[j]
    gaps = [j for j in range(1, len(rest)) if min(rest[j - 1], rest[j]) < a < max(rest[j - 1], rest[j])]
    return rest, gaps, gaps.index(i)


def leap_range(w: Sequence[int], a: int) -> tuple[int, int]:
    """[r_min, r_max] for which L_a^r(w) is defined."""
    _, gaps, q = _slopes(w, a)
    return -q, len(gaps) - 1 - q


def leap(w: Sequence[int], a: int, r: int) -> Permutation | PartialPermutation:
    """L_a^r(w): move the intermediary entry a across |r| slopes, rightwards for r > 0."""
    rest, gaps, q = _slopes(w, a)
    low, high = -q, len(gaps) - 1 - q
    if not low <= r <= high:
        raise LeapOutOfRange(r, low, high)
    j = gaps[q + r]
    moved = rest[:j] + [a] + rest[j:]
    word = moved[1:-1]
    return Permutation(word) if isinstance(w, Permutation) else PartialPermutation(word)
