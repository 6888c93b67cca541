"""k-path graphs: construction from color sequences and recognition back to them."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidOrder, LengthMismatch, NotKPath
from .graph import Graph
from .seqcore import ColorSequence, alternating, normalize, reverse_canonical


@dataclass(frozen=True)
class CoreTrace:
    """Clique path F_1..F_{n-k} with the vertex removed and added at each step."""

    cliques: tuple[frozenset[int], ...]
    removed: tuple[int, ...]
    added: tuple[int, ...]


@dataclass(frozen=True)
class KPathGraph(Graph):
    """A k-path graph together with the construction that produced it.

    Vertices ``0..k`` form the base clique and carry colors ``1..k+1``;
    vertex ``k + i`` is the i-th added vertex.
    """

    k: int = 0
    coloring: tuple[int, ...] = ()
    vertex_order: tuple[int, ...] = ()
    trace: CoreTrace | None = field(default=None, compare=False)

    def as_graph(self) -> Graph:
        return Graph(self.n, self.rows)


def expected_edges(k: int, n: int) -> int:
    return k * n - k * (k + 1) // 2


def _check_order(k: int, n: int, minimum: int | None = None) -> None:
    if k < 2:
        raise InvalidOrder(f"k must be >= 2, got {k}")
    minimum = k + 1 if minimum is None else minimum
    if n < minimum:
        raise InvalidOrder(f"order n={n} is below the minimum {minimum} for k={k}")


def _construct(k: int, n: int, entries) -> tuple[list[int], list[int], CoreTrace]:
    """Rows, coloring and trace for any restricted sequence over colors 1..k+1."""
    rows = [0] * n
    base = (1 << (k + 1)) - 1
    for v in range(k + 1):
        rows[v] = base & ~(1 << v)
    coloring = list(range(1, k + 2)) + [0] * (n - k - 1)
    holder = list(range(k + 1))  # holder[color - 1] = clique vertex with that color
    clique = frozenset(range(k + 1))
    cliques = [clique]
    removed = []
    added = []
    for i, color in enumerate(entries):
        v = k + 1 + i
        out = holder[color - 1]
        for u in holder:
            if u != out:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        holder[color - 1] = v
        coloring[v] = color
        clique = (clique - {out}) | {v}
        cliques.append(clique)
        removed.append(out)
        added.append(v)
    return rows, coloring, CoreTrace(tuple(cliques), tuple(removed), tuple(added))


def build_from_sequence(c: ColorSequence, n: int | None = None) -> KPathGraph:
    """The unique k-path graph whose color sequence is ``c``.

    Each step adds a vertex with color ``c_i``; it replaces the clique member
    of that color and is joined to the other k members.
    """
    k = c.k
    if n is None:
        n = c.order
    _check_order(k, n)
    if len(c.entries) != n - k - 1:
        raise LengthMismatch(f"sequence of length {len(c.entries)} cannot describe order {n} (need {n - k - 1})")
    rows, coloring, trace = _construct(k, n, c.entries)
    return KPathGraph(
        n=n,
        rows=tuple(rows),
        k=k,
        coloring=tuple(coloring),
        vertex_order=tuple(range(n)),
        trace=trace,
    )


def _walk(g: Graph, k: int, start: int) -> tuple[list[int], list[int]]:
    """Follow the clique path from the end clique containing ``start``.

    Returns the visiting order (start clique first, in a fixed order, then the
    added vertices) and the raw color sequence read off along the way.
    """
    n = g.n
    first = [start] + g.neighbors(start)
    if len(first) != k + 1 or not g.is_clique(first):
        raise NotKPath(f"vertex {start} does not close a (k+1)-clique")
    # start is removed first, so it receives the color of the first step;
    # the labels are arbitrary since the result is normalized afterwards
    color = {v: i + 1 for i, v in enumerate(first)}
    clique = set(first)
    placed = set(first)
    order = list(first)
    raw = []
    while len(order) < n:
        candidates = []
        for v in range(n):
            if v in placed:
                continue
            inside = [u for u in clique if g.has_edge(u, v)]
            if len(inside) == k:
                candidates.append((v, inside))
        if len(candidates) != 1:
            raise NotKPath(f"clique path is not unique at step {len(raw) + 1} ({len(candidates)} candidates)")
        v, inside = candidates[0]
        (out,) = clique.difference(inside)
        color[v] = color[out]
        raw.append(color[v])
        clique.remove(out)
        clique.add(v)
        placed.add(v)
        order.append(v)
    return order, raw


def derive_color_sequence(g: Graph, k: int) -> ColorSequence:
    """Canonical color sequence of a k-path graph (inverse of the builder).

    Raises NotKPath unless ``g`` is exactly the graph rebuilt from the
    sequence it yields, under the vertex order found while walking.
    """
    if k < 2:
        raise InvalidOrder(f"k must be >= 2, got {k}")
    n = g.n
    if n < k + 1:
        raise NotKPath(f"order {n} is below k+1")
    if g.num_edges() != expected_edges(k, n):
        raise NotKPath(f"{g.num_edges()} edges, a {k}-path of order {n} has {expected_edges(k, n)}")
    if n == k + 1:
        if not g.is_clique(range(n)):
            raise NotKPath("graph on k+1 vertices is not complete")
        return ColorSequence(k, ())

    ends = [v for v in range(n) if g.degree(v) == k]
    if len(ends) != 2:
        raise NotKPath(f"expected two end vertices of degree {k}, found {len(ends)}")

    found = []
    for start in ends:
        order, raw = _walk(g, k, start)
        if order[-1] not in ends:
            raise NotKPath("clique path does not terminate at an end vertex")
        try:
            seq = normalize(raw, k)
        except ValueError as exc:
            raise NotKPath(str(exc)) from exc
        # edge counts already agree, so containment means equality
        rebuilt, _, _ = _construct(k, n, raw)
        position = {v: i for i, v in enumerate(order)}
        for u, v in g.edges():
            if not (rebuilt[position[u]] >> position[v]) & 1:
                raise NotKPath(f"edge ({u}, {v}) is not explained by the clique path")
        found.append(seq)
    if found[1] != reverse_canonical(found[0]):
        raise NotKPath("the two ends disagree on the clique path")
    return min(found)


def generalized_fan(k: int, n: int) -> Graph:
    """K_{k-1} joined with a path on n-k+1 vertices.

    Vertices ``0..k-2`` form the clique, ``k-1..n-1`` the path.
    """
    _check_order(k, n)
    edges = []
    hub = range(k - 1)
    path = list(range(k - 1, n))
    for i in hub:
        for j in range(i + 1, k - 1):
            edges.append((i, j))
        for v in path:
            edges.append((i, v))
    edges.extend(zip(path, path[1:]))
    return Graph.from_edges(n, edges)


def ribbon(k: int, n: int) -> Graph:
    """k-th power of the path P_n: i ~ j iff 0 < |i - j| <= k."""
    _check_order(k, n)
    return Graph.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, min(n, i + k + 1))))


def fan_sequence(k: int, n: int) -> ColorSequence:
    _check_order(k, n)
    return ColorSequence(k, tuple(alternating(n - k - 1)))


def ribbon_sequence(k: int, n: int) -> ColorSequence:
    _check_order(k, n)
    return ColorSequence(k, tuple(i % (k + 1) + 1 for i in range(n - k - 1)))


def weak_fan_sequence(k: int, n: int) -> ColorSequence:
    """``1 2 1 2 ... 1 2 3`` of length n-k-1 (normalized for the shortest cases)."""
    _check_order(k, n, minimum=k + 2)
    length = n - k - 1
    return normalize(alternating(length - 1) + [3], k)


def weak_generalized_fan(k: int, n: int) -> KPathGraph:
    """The k-path whose last added vertex leaves K_{k-1} v P_{n-k} when removed."""
    return build_from_sequence(weak_fan_sequence(k, n), n)
