"""Graph family generators and the reflection automorphisms of flower snarks.

Flower snark vertex layout is fixed: ``a_i -> i``, ``b_i -> n + i``,
``c_i -> 2n + i``, ``d_i -> 3n + i``.  The inner cycle runs through the
``b`` vertices; the ``c`` and ``d`` paths are joined into one outer cycle of
length ``2n`` by the twist edges ``c_{n-1} d_0`` and ``d_{n-1} c_0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from metdim.errors import IndexOutOfRange, InvalidOrder, LengthMismatch
from metdim.graph import Edge, Graph, build_graph

CLASSES = "abcd"


@dataclass(frozen=True)
class FlowerSnarkLabeling:
    n: int
    standard_order: bool = True

    @property
    def k(self) -> int:
        return (self.n - 1) // 2

    def index(self, cls: str, i: int) -> int:
        """Vertex index of ``cls_i``; ``i`` is reduced modulo ``n``."""
        return CLASSES.index(cls) * self.n + i % self.n

    def split(self, v: int) -> tuple[str, int]:
        """Inverse of :meth:`index`."""
        return CLASSES[v // self.n], v % self.n

    def block(self, cls: str) -> range:
        start = CLASSES.index(cls) * self.n
        return range(start, start + self.n)

    def label(self, v: int) -> str:
        cls, i = self.split(v)
        return f"{cls}_{i}"


def flower_snark(n: int, allow_any_order: bool = False) -> tuple[Graph, FlowerSnarkLabeling]:
    """Flower snark ``J_n`` with 4n vertices and 6n edges.

    Only odd ``n >= 5`` is accepted unless ``allow_any_order`` is set, in
    which case any ``n >= 3`` is built and the labeling is marked out of scope.
    """
    in_scope = n >= 5 and n % 2 == 1
    if not in_scope and not (allow_any_order and n >= 3):
        raise InvalidOrder(f"flower snark order must be odd and >= 5, got n={n}")
    lab = FlowerSnarkLabeling(n, standard_order=in_scope)
    a, b, c, d = (lambda i, _c=cls: lab.index(_c, i) for cls in CLASSES)
    edges: list[Edge] = []
    for i in range(n):
        edges += [(a(i), b(i)), (a(i), c(i)), (a(i), d(i)), (b(i), b(i + 1))]
    for i in range(n - 1):
        edges += [(c(i), c(i + 1)), (d(i), d(i + 1))]
    edges += [(c(n - 1), d(0)), (d(n - 1), c(0))]
    labels = {v: lab.label(v) for v in range(4 * n)}
    return build_graph(4 * n, edges, labels=labels, name=f"J_{n}"), lab


def wheel(n: int) -> tuple[Graph, dict[int, str]]:
    """Wheel ``W_n``: hub ``v_0`` joined to every vertex of the rim ``v_1..v_n``."""
    if n < 3:
        raise InvalidOrder(f"wheel order must be >= 3, got n={n}")
    edges = [(0, i) for i in range(1, n + 1)]
    edges += [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    labels = {i: f"v_{i}" for i in range(n + 1)}
    return build_graph(n + 1, edges, labels=labels, name=f"W_{n}"), labels


def path(n: int) -> Graph:
    if n < 2:
        raise InvalidOrder(f"path needs n >= 2, got n={n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)],
                       labels={i: f"v_{i}" for i in range(n)}, name=f"P_{n}")


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidOrder(f"cycle needs n >= 3, got n={n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)],
                       labels={i: f"v_{i}" for i in range(n)}, name=f"C_{n}")


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1 or p + q < 2:
        raise InvalidOrder(f"complete bipartite needs p, q >= 1, got ({p}, {q})")
    labels = {i: f"x_{i}" for i in range(p)}
    labels.update({p + j: f"y_{j}" for j in range(q)})
    edges = [(i, p + j) for i in range(p) for j in range(q)]
    return build_graph(p + q, edges, labels=labels, name=f"K_{p},{q}")


def baseline_family(kind: str, *params: int) -> Graph:
    """``kind`` is ``"path"``, ``"cycle"`` or ``"complete_bipartite"``."""
    builders = {"path": path, "cycle": cycle, "complete_bipartite": complete_bipartite}
    try:
        return builders[kind](*params)
    except KeyError:
        raise ValueError(f"unknown baseline family {kind!r}") from None


def flower_isomorphism(n: int, j: int) -> tuple[int, ...]:
    """Reflection ``h_j`` of ``J_n`` as a permutation of vertex indices.

    Index ``i`` maps to ``j - i`` when ``i <= j``; otherwise to ``n + j - i``
    and the ``c``/``d`` classes trade places.
    """
    if n < 3:
        raise InvalidOrder(f"flower snark order must be >= 3, got n={n}")
    if not 0 <= j < n:
        raise IndexOutOfRange(f"reflection index j={j} outside 0..{n - 1}")
    lab = FlowerSnarkLabeling(n)
    perm = [0] * (4 * n)
    swap = {"a": "a", "b": "b", "c": "d", "d": "c"}
    for cls in CLASSES:
        for i in range(n):
            if i <= j:
                target = lab.index(cls, j - i)
            else:
                target = lab.index(swap[cls], n + j - i)
            perm[lab.index(cls, i)] = target
    return tuple(perm)


@dataclass(frozen=True)
class AutomorphismCheck:
    ok: bool
    violation: Edge | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_automorphism(g: Graph, perm: Sequence[int]) -> AutomorphismCheck:
    """Whether ``perm`` preserves adjacency.

    On failure ``violation`` is the first edge (canonical order) whose image is
    not an edge.
    """
    if len(perm) != g.n:
        raise LengthMismatch(f"permutation has length {len(perm)}, graph has {g.n} vertices")
    if sorted(perm) != list(range(g.n)):
        raise ValueError("permutation is not a bijection on the vertex set")
    # a bijection mapping E into E maps E onto E since |E| is finite
    for u, v in g.edges:
        if not g.has_edge(perm[u], perm[v]):
            return AutomorphismCheck(False, (u, v))
    return AutomorphismCheck(True)
