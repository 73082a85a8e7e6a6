"""Immutable simple graphs, hop distances, and item coordinates.

Vertices are dense integer indices ``0..n-1``.  Human-readable names such as
``"b_0"`` live in an optional side map so that arbitrary input graphs need no
labels at all.  An *item* is either a vertex or an edge; the canonical item
order is all vertices by index followed by the edges in canonical edge order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

import numpy as np

from metdim.errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateLandmark,
    GraphError,
    IndexOutOfRange,
    SelfLoop,
    UnknownLabel,
)

Edge = tuple[int, int]


@dataclass(frozen=True, order=True)
class VertexItem:
    v: int

    def describe(self, labels: Mapping[int, str] | None = None) -> str:
        return _name(self.v, labels)


@dataclass(frozen=True, order=True)
class EdgeItem:
    u: int
    v: int

    def __post_init__(self) -> None:
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    @property
    def endpoints(self) -> Edge:
        return (self.u, self.v)

    def describe(self, labels: Mapping[int, str] | None = None) -> str:
        return _name(self.u, labels) + _name(self.v, labels)


Item = Union[VertexItem, EdgeItem]


def _name(v: int, labels: Mapping[int, str] | None) -> str:
    if labels and v in labels:
        return labels[v]
    return str(v)


@dataclass(frozen=True, eq=False)
class Graph:
    """A connected simple undirected graph.

    Build instances with :func:`build_graph`; the constructor does not
    validate.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]
    labels: Mapping[int, str] = field(default_factory=dict)
    name: str = ""

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._edge_set

    @property
    def _edge_set(self) -> frozenset[Edge]:
        cached = self.__dict__.get("_edge_set_cache")
        if cached is None:
            cached = frozenset(self.edges)
            object.__setattr__(self, "_edge_set_cache", cached)
        return cached

    def items(self, kind: str = "mixed") -> list[Item]:
        """Items of the requested domain in canonical order.

        ``kind`` is one of ``"vertex"``, ``"edge"`` or ``"mixed"``.
        """
        out: list[Item] = []
        if kind in ("vertex", "mixed"):
            out.extend(VertexItem(v) for v in range(self.n))
        if kind in ("edge", "mixed"):
            out.extend(EdgeItem(u, v) for u, v in self.edges)
        if kind not in ("vertex", "edge", "mixed"):
            raise ValueError(f"unknown item domain {kind!r}")
        return out

    def index_of(self, label: str) -> int:
        """Vertex index for a label, or for a decimal index string."""
        inverse = self.__dict__.get("_inverse_labels")
        if inverse is None:
            inverse = {name: v for v, name in self.labels.items()}
            object.__setattr__(self, "_inverse_labels", inverse)
        if label in inverse:
            return inverse[label]
        text = label.strip()
        if text.isdigit() and int(text) < self.n:
            return int(text)
        raise UnknownLabel(f"no vertex labelled {label!r}")

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Image of the graph under vertex map ``v -> perm[v]``."""
        return build_graph(
            self.n,
            [(perm[u], perm[v]) for u, v in self.edges],
            labels=self.labels,
            name=self.name,
        )


def build_graph(
    n: int,
    edge_pairs: Iterable[Sequence[int]],
    labels: Mapping[int, str] | None = None,
    name: str = "",
) -> Graph:
    """Validate an edge list and return a connected simple :class:`Graph`."""
    if n < 2:
        raise GraphError(f"graph needs at least 2 vertices, got n={n}")
    seen: set[Edge] = set()
    for pair in edge_pairs:
        u, v = int(pair[0]), int(pair[1])
        for x in (u, v):
            if not 0 <= x < n:
                raise IndexOutOfRange(f"endpoint {x} of edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)

    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in seen:
        adj[u].append(v)
        adj[v].append(u)

    # connectivity
    reached = [False] * n
    reached[0] = True
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if not reached[y]:
                reached[y] = True
                queue.append(y)
    if not all(reached):
        missing = reached.index(False)
        raise Disconnected(f"vertex {missing} is not reachable from vertex 0")

    labels = dict(labels or {})
    for v in labels:
        if not 0 <= v < n:
            raise IndexOutOfRange(f"label for vertex {v} outside 0..{n - 1}")
    return Graph(
        n=n,
        adjacency=tuple(tuple(sorted(a)) for a in adj),
        edges=tuple(sorted(seen)),
        labels=labels,
        name=name,
    )


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Pairwise hop distances; ``dist`` is a read-only ``(n, n)`` int array."""

    dist: np.ndarray

    def __call__(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    @property
    def n(self) -> int:
        return self.dist.shape[0]

    @property
    def diameter(self) -> int:
        return int(self.dist.max())


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first search from every vertex."""
    n = g.n
    dist = np.full((n, n), -1, dtype=np.int64)
    for s in range(n):
        row = dist[s]
        row[s] = 0
        frontier = [s]
        level = 0
        while frontier:
            level += 1
            nxt = []
            for x in frontier:
                for y in g.adjacency[x]:
                    if row[y] < 0:
                        row[y] = level
                        nxt.append(y)
            frontier = nxt
    dist.setflags(write=False)
    return DistanceMatrix(dist)


def item_distance(dm: DistanceMatrix, item: Item, w: int) -> int:
    """Distance from an item to vertex ``w``; an edge uses its nearer endpoint."""
    if isinstance(item, VertexItem):
        return int(dm.dist[item.v, w])
    return int(min(dm.dist[item.u, w], dm.dist[item.v, w]))


def coordinate_vector(dm: DistanceMatrix, item: Item, landmarks: Sequence[int]) -> tuple[int, ...]:
    if len(set(landmarks)) != len(landmarks):
        raise DuplicateLandmark(f"landmarks repeat a vertex: {list(landmarks)}")
    return tuple(item_distance(dm, item, w) for w in landmarks)


def item_matrix(g: Graph, dm: DistanceMatrix, kind: str = "mixed") -> np.ndarray:
    """Rows are items of ``kind`` in canonical order, columns are vertices.

    Entry ``[i, w]`` is the distance from item ``i`` to vertex ``w``.
    """
    parts = []
    if kind in ("vertex", "mixed"):
        parts.append(np.asarray(dm.dist))
    if kind in ("edge", "mixed"):
        if g.edges:
            e = np.asarray(g.edges)
            parts.append(np.minimum(dm.dist[e[:, 0]], dm.dist[e[:, 1]]))
        else:
            parts.append(np.zeros((0, g.n), dtype=np.int64))
    if not parts:
        raise ValueError(f"unknown item domain {kind!r}")
    out = np.ascontiguousarray(np.vstack(parts))
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class StructuralReport:
    min_degree: int
    max_degree: int
    is_regular: bool
    is_bridgeless: bool


def bridges(g: Graph) -> list[Edge]:
    """All bridges, found with an iterative low-link depth-first search."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: list[Edge] = []
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        # (vertex, parent, neighbour cursor)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            nbrs = g.adjacency[v]
            if i < len(nbrs):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[i]
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.append((min(v, parent), max(v, parent)))
    return sorted(out)


def structural_report(g: Graph) -> StructuralReport:
    degrees = [len(a) for a in g.adjacency]
    lo, hi = min(degrees), max(degrees)
    return StructuralReport(
        min_degree=lo,
        max_degree=hi,
        is_regular=lo == hi,
        is_bridgeless=not bridges(g),
    )


def is_path(g: Graph) -> bool:
    return g.m == g.n - 1 and max(len(a) for a in g.adjacency) <= 2
