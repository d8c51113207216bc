import logging
from functools import cached_property
from typing import Any, Callable, Hashable, Iterable, Optional, Sequence

import networkx as nx
import numpy as np

from ..errors import NotComparable

logger = logging.getLogger(__name__)


class Poset:
    """Finite poset stored as a dense boolean matrix, leq[i, j] meaning elements[i] <= elements[j]."""

    def __init__(self, elements: Iterable[Hashable], leq: np.ndarray):
        self.elements = list(elements)
        self.leq = np.asarray(leq, dtype=bool)
        self.index = {x: i for i, x in enumerate(self.elements)}
        size = len(self.elements)
        if self.leq.shape != (size, size):
            raise ValueError(f"relation matrix has shape {self.leq.shape}, expected {(size, size)}")
        if len(self.index) != size:
            raise ValueError("poset elements must be distinct")
        if not self.leq.diagonal().all():
            raise ValueError("relation is not reflexive")
        if ((self.leq & self.leq.T) != np.eye(size, dtype=bool)).any():
            raise ValueError("relation is not antisymmetric")

    @classmethod
    def from_function(cls, elements: Sequence[Hashable], le: Callable[[Any, Any], bool]) -> "Poset":
        elements = list(elements)
        leq = np.array([[le(x, y) for y in elements] for x in elements], dtype=bool).reshape(len(elements), len(elements))
        return cls(elements, leq)

    @classmethod
    def from_edges(cls, elements: Sequence[Hashable], edges: Iterable[tuple]) -> "Poset":
        """Reflexive-transitive closure of an acyclic relation."""
        elements = list(elements)
        g = nx.DiGraph()
        g.add_nodes_from(range(len(elements)))
        index = {x: i for i, x in enumerate(elements)}
        g.add_edges_from((index[a], index[b]) for a, b in edges)
        if not nx.is_directed_acyclic_graph(g):
            raise ValueError("relation has a cycle")
        closure = nx.transitive_closure_dag(g)
        leq = np.eye(len(elements), dtype=bool)
        for a, b in closure.edges():
            leq[a, b] = True
        return cls(elements, leq)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def le(self, x, y) -> bool:
        return bool(self.leq[self.index[x], self.index[y]])

    def lt(self, x, y) -> bool:
        return x != y and self.le(x, y)

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        lt = self.leq & ~np.eye(len(self), dtype=bool)
        # boolean product: (i, j) is True when some k has i < k < j
        return lt & ~(lt @ lt)

    def covers(self) -> list[tuple]:
        rows, cols = np.nonzero(self.cover_matrix)
        return [(self.elements[i], self.elements[j]) for i, j in zip(rows, cols)]

    def covers_of(self, x) -> list:
        """Elements covering x."""
        return [self.elements[j] for j in np.nonzero(self.cover_matrix[self.index[x]])[0]]

    @cached_property
    def _down_sizes(self) -> np.ndarray:
        return self.leq.sum(axis=0)

    def linear_order(self) -> list:
        """A fixed linear extension: by down-set size, ties in element order."""
        order = np.argsort(self._down_sizes, kind="stable")
        return [self.elements[i] for i in order]

    def minimal(self) -> list:
        return [x for x, size in zip(self.elements, self._down_sizes) if size == 1]

    def maximal(self) -> list:
        ups = self.leq.sum(axis=1)
        return [x for x, size in zip(self.elements, ups) if size == 1]

    @property
    def bottom(self) -> Optional[Any]:
        low = self.minimal()
        return low[0] if len(low) == 1 else None

    @property
    def top(self) -> Optional[Any]:
        high = self.maximal()
        return high[0] if len(high) == 1 else None

    def _bound(self, i: int, j: int, sets: np.ndarray) -> Optional[int]:
        # sets[:, k] is the set of elements on the far side of k
        common = sets[:, i] & sets[:, j]
        candidates = np.nonzero(common)[0]
        if not len(candidates):
            return None
        sub = sets[np.ix_(candidates, candidates)]
        best = np.nonzero(sub.all(axis=0))[0]
        return int(candidates[best[0]]) if len(best) else None

    def meet(self, x, y) -> Optional[Any]:
        k = self._bound(self.index[x], self.index[y], self.leq)
        return None if k is None else self.elements[k]

    def join(self, x, y) -> Optional[Any]:
        k = self._bound(self.index[x], self.index[y], self.leq.T)
        return None if k is None else self.elements[k]

    def _first_missing(self, sets: np.ndarray) -> Optional[tuple[int, int]]:
        sizes = sets.sum(axis=0)
        for i in range(len(self)):
            common = sets[:, i][:, None] & sets
            count = common.sum(axis=0)
            has_bound = (common & (sizes[:, None] == count[None, :])).any(axis=0)
            missing = np.nonzero(~has_bound)[0]
            if len(missing):
                return i, int(missing[0])
        return None

    def lattice_check(self) -> dict:
        """{"is_lattice": bool, "witness": [x, y, "meet"|"join"] or None}."""
        for sets, kind in ((self.leq, "meet"), (self.leq.T, "join")):
            pair = self._first_missing(sets)
            if pair is not None:
                i, j = pair
                return {"is_lattice": False, "witness": [str(self.elements[i]), str(self.elements[j]), kind]}
        return {"is_lattice": True, "witness": None}

    def interval(self, u, v) -> list:
        i, j = self.index[u], self.index[v]
        if not self.leq[i, j]:
            raise NotComparable(u, v)
        inside = self.leq[i] & self.leq[:, j]
        return [self.elements[k] for k in np.nonzero(inside)[0]]

    def _moebius_row(self, i: int) -> np.ndarray:
        mu = np.zeros(len(self), dtype=np.int64)
        above = np.nonzero(self.leq[i])[0]
        above = above[np.argsort(self._down_sizes[above], kind="stable")]
        mu[i] = 1
        for z in above[1:]:
            below = self.leq[i] & self.leq[:, z]
            below[z] = False
            mu[z] = -mu[below].sum()
        return mu

    def moebius(self, u, v) -> int:
        """μ(u, v); zero when u is not below v."""
        i, j = self.index[u], self.index[v]
        if not self.leq[i, j]:
            return 0
        return int(self._moebius_row(i)[j])

    def moebius_values(self) -> set[int]:
        values = set()
        for i in range(len(self)):
            row = self._moebius_row(i)
            values |= {int(x) for x in row[self.leq[i]]}
        return values

    def is_linear_extension(self, order: Sequence) -> bool:
        if sorted(map(self.index.__getitem__, order)) != list(range(len(self))):
            return False
        position = {x: k for k, x in enumerate(order)}
        return all(position[a] < position[b] for a, b in self.covers())

    def random_linear_extension(self, rng: np.random.Generator) -> list:
        """Topological sort picking uniformly among the currently available minimal elements."""
        pending = self.cover_matrix.sum(axis=0).astype(np.int64)
        available = sorted(np.nonzero(pending == 0)[0].tolist())
        order = []
        while available:
            k = available.pop(int(rng.integers(len(available))))
            order.append(self.elements[k])
            for j in np.nonzero(self.cover_matrix[k])[0]:
                pending[j] -= 1
                if pending[j] == 0:
                    available.append(int(j))
            available.sort()
        return order

    def dual(self) -> "Poset":
        return Poset(self.elements, self.leq.T.copy())

    def relabel(self, mapping: dict) -> "Poset":
        return Poset([mapping[x] for x in self.elements], self.leq.copy())

    def same_order(self, other: "Poset") -> bool:
        """Equal as posets on the same element labels, regardless of element order."""
        if set(self.index) != set(other.index):
            return False
        perm = [other.index[x] for x in self.elements]
        return bool((other.leq[np.ix_(perm, perm)] == self.leq).all())

    def hasse(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(self.elements)
        g.add_edges_from(self.covers())
        return g

    def to_dot(self, label: Callable[[Any], str] = str, name: str = "poset") -> str:
        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for x in self.elements:
            lines.append(f'  "{label(x)}";')
        for a, b in self.covers():
            lines.append(f'  "{label(a)}" -> "{label(b)}";')
        lines.append("}")
        return "\n".join(lines)

    def to_json(self, label: Callable[[Any], Any] = str) -> dict:
        return {
            "elements": [label(x) for x in self.elements],
            "covers": [[label(a), label(b)] for a, b in self.covers()],
        }
