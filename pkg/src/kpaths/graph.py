"""Minimal immutable simple graph on vertices 0..n-1, stored as row bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph.

    ``rows[v]`` is an int whose bit ``u`` is set iff ``{u, v}`` is an edge.
    The bitmask rows form a packed symmetric incidence, cheap to hash and
    compare, and immutable so graphs can be shared between workers.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(self.rows)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or (row >> v) & 1:
                raise ValueError(f"row {v} has out-of-range bits or a loop")
            r = row
            while r:
                low = r & -r
                u = low.bit_length() - 1
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"asymmetric adjacency at ({u}, {v})")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        out = []
        r = self.rows[v]
        while r:
            low = r & -r
            out.append(low.bit_length() - 1)
            r ^= low
        return out

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v``, sorted."""
        for v in range(self.n):
            for u in self.neighbors(v):
                if u > v:
                    yield (v, u)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            r = frontier
            while r:
                low = r & -r
                nxt |= self.rows[low.bit_length() - 1]
                r ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self.rows[v] | (1 << v)) & mask == mask for v in vs)

    def remove_vertex(self, v: int) -> Graph:
        """Graph with ``v`` deleted; higher vertices shift down by one."""
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.rows):
            if u == v:
                continue
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(self.n - 1, tuple(rows))

    def relabel(self, perm: list[int]) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))
