"""Exact minimum resolving sets by exhaustive subset search.

Subsets are enumerated in lexicographic order over vertex indices.  A
candidate prefix is kept as a partition of the item domain (dense class ids);
adding a landmark refines it.  A prefix is abandoned as soon as some class
contains a pair of items that no later vertex can tell apart, and the size of
the abandoned subtree is still credited to the refutation count.  The last
landmark is chosen for all candidates at once with one vectorised sort.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from metdim.errors import SizeCapExceeded
from metdim.graph import DistanceMatrix, Graph, all_pairs_distances, is_path, item_matrix
from metdim.resolver import Variant

DEFAULT_SIZE_CAP = 64


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("METDIM_THREADS", "1")))
    except ValueError:
        return 1


@dataclass(frozen=True)
class Certificate:
    """Proof that no smaller set resolves.

    ``source`` is ``"search"`` when every subset of ``refuted_cardinality``
    was enumerated (``subsets_checked`` of them), or ``"bound"`` when the
    basis size equals the search floor and nothing smaller was examined.
    """

    refuted_cardinality: int
    subsets_checked: int
    source: str

    def to_dict(self) -> dict:
        return {
            "refuted_cardinality": self.refuted_cardinality,
            "subsets_checked": self.subsets_checked,
            "source": self.source,
        }


@dataclass(frozen=True)
class Basis:
    variant: Variant
    landmarks: tuple[int, ...]
    certificate: Certificate

    @property
    def cardinality(self) -> int:
        return len(self.landmarks)

    def labels(self, g: Graph) -> list[str]:
        return [g.label(v) for v in self.landmarks]


@dataclass(frozen=True)
class NoBasis:
    """No subset of V resolves; only reachable for the edge variant in theory."""

    variant: Variant
    subsets_checked: int

    cardinality = None


@dataclass(frozen=True)
class SweepResult:
    cardinality: int
    hits: tuple[tuple[int, ...], ...]
    checked: int
    complete: bool

    @property
    def refuted(self) -> bool:
        return self.complete and not self.hits


class SearchSpace:
    """Precomputed item-distance table for one graph and variant."""

    def __init__(self, g: Graph, dm: DistanceMatrix, variant: Variant | str):
        self.variant = Variant.parse(variant)
        self.g = g
        self.n = g.n
        table = item_matrix(g, dm, self.variant.value)
        self.n_items = table.shape[0]
        self.cols = np.ascontiguousarray(table.T)
        self.base = int(table.max(initial=0)) + 1
        # maxsep[x, y]: largest vertex separating items x and y, -1 if none
        maxsep = np.full((self.n_items, self.n_items), -1, dtype=np.int32)
        for w in range(self.n):
            col = self.cols[w]
            maxsep[col[:, None] != col[None, :]] = w
        np.fill_diagonal(maxsep, self.n)
        self.maxsep = maxsep

    def _refine(self, ids: np.ndarray, w: int) -> np.ndarray:
        _, inv = np.unique(ids * self.base + self.cols[w], return_inverse=True)
        return inv.reshape(-1)

    def _stalled(self, ids: np.ndarray, last: int) -> bool:
        same = ids[:, None] == ids[None, :]
        return bool((self.maxsep[same] <= last).any())

    def _last_level(self, ids: np.ndarray, start: int, want_all: bool) -> tuple[list[int], int]:
        cands = np.arange(start, self.n)
        if cands.size == 0:
            return [], 0
        codes = ids[None, :] * self.base + self.cols[cands]
        codes.sort(axis=1)
        ok = ~(codes[:, 1:] == codes[:, :-1]).any(axis=1)
        good = cands[ok].tolist()
        return (good if want_all else good[:1]), int(cands.size)

    def _descend(self, prefix: tuple[int, ...], ids: np.ndarray, r: int,
                 want_all: bool, prune: bool, hits: list) -> int:
        need = r - len(prefix)
        last = prefix[-1]
        if need == 0:
            if len(np.unique(ids)) == self.n_items:
                hits.append(prefix)
            return 1
        if need == 1:
            good, checked = self._last_level(ids, last + 1, want_all)
            hits.extend(prefix + (w,) for w in good)
            return checked
        checked = 0
        for w in range(last + 1, self.n - need + 1):
            new = self._refine(ids, w)
            if prune and self._stalled(new, w):
                checked += math.comb(self.n - w - 1, need - 1)
                continue
            checked += self._descend(prefix + (w,), new, r, want_all, prune, hits)
            if hits and not want_all:
                break
        return checked

    def subtree(self, lead: int, r: int, want_all: bool = False, prune: bool = True):
        """Search all r-subsets whose smallest element is ``lead``."""
        hits: list[tuple[int, ...]] = []
        ids = np.zeros(self.n_items, dtype=np.int64)
        ids = self._refine(ids, lead)
        if prune and r > 1 and self._stalled(ids, lead):
            return hits, math.comb(self.n - lead - 1, r - 1)
        checked = self._descend((lead,), ids, r, want_all, prune, hits)
        return hits, checked

    def resolves(self, subset: Sequence[int]) -> bool:
        """Direct uniqueness test of coordinate vectors; no pruning involved."""
        if self.n_items <= 1:
            return True
        rows = self.cols[list(subset)].T
        return len(np.unique(rows, axis=0)) == self.n_items

    def sweep(self, r: int, mode: str = "first", threads: int = 1,
              naive: bool = False) -> SweepResult:
        """Examine every r-subset (``mode="all"``) or stop at the first hit."""
        if not 1 <= r <= self.n:
            return SweepResult(r, (), 0, True)
        want_all = mode == "all"
        if naive:
            return self._naive_sweep(r, want_all)
        leads = range(0, self.n - r + 1)
        hits: list[tuple[int, ...]] = []
        checked = 0
        complete = True
        if threads <= 1:
            for lead in leads:
                h, c = self.subtree(lead, r, want_all)
                hits.extend(h)
                checked += c
                if h and not want_all:
                    complete = lead == leads[-1]
                    break
        else:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                futures = [pool.submit(self.subtree, lead, r, want_all) for lead in leads]
                for pos, fut in enumerate(futures):
                    h, c = fut.result()
                    hits.extend(h)
                    checked += c
                    if h and not want_all:
                        for rest in futures[pos + 1:]:
                            rest.cancel()
                        complete = pos == len(futures) - 1
                        break
        return SweepResult(r, tuple(hits), checked, complete)

    def _naive_sweep(self, r: int, want_all: bool) -> SweepResult:
        hits = []
        checked = 0
        for subset in itertools.combinations(range(self.n), r):
            checked += 1
            if self.resolves(subset):
                hits.append(subset)
                if not want_all:
                    return SweepResult(r, tuple(hits), checked, False)
        return SweepResult(r, tuple(hits), checked, True)


def dimension_lower_bound(g: Graph, variant: Variant | str) -> int:
    """Cheap floor for the search.

    Edge and mixed use ``1 + ceil(log2(min degree))``; the vertex variant uses
    2 unless the graph is a path.
    """
    variant = Variant.parse(variant)
    if variant is Variant.VERTEX:
        return 1 if is_path(g) else 2
    delta = min(len(a) for a in g.adjacency)
    return max(1, 1 + (delta - 1).bit_length())


def minimum_resolving_set(
    g: Graph,
    dm: DistanceMatrix | None = None,
    variant: Variant | str = Variant.MIXED,
    mode: str = "first",
    threads: int | None = None,
    naive: bool = False,
    space: SearchSpace | None = None,
):
    """Smallest resolving sets of ``g`` for ``variant``.

    ``mode="first"`` returns the lexicographically least basis as a
    :class:`Basis`; ``mode="all"`` returns a list with every basis.  If no
    subset resolves, a :class:`NoBasis` is returned instead.
    """
    if mode not in ("first", "all"):
        raise ValueError(f"mode must be 'first' or 'all', got {mode!r}")
    variant = Variant.parse(variant)
    if space is None:
        space = SearchSpace(g, dm if dm is not None else all_pairs_distances(g), variant)
    threads = default_threads() if threads is None else max(1, threads)
    floor = dimension_lower_bound(g, variant)
    previous: SweepResult | None = None
    total = 0
    for r in range(floor, g.n + 1):
        result = space.sweep(r, mode=mode, threads=threads, naive=naive)
        total += result.checked
        if result.hits:
            if previous is None:
                cert = Certificate(r - 1, 0, "bound")
            else:
                cert = Certificate(previous.cardinality, previous.checked, "search")
            bases = [Basis(variant, h, cert) for h in result.hits]
            return bases[0] if mode == "first" else bases
        previous = result
    return NoBasis(variant, total)


@dataclass
class DimensionReport:
    graph: str
    n: int
    m: int
    beta: int | None
    beta_edge: int | None
    beta_mixed: int | None
    bases: dict[str, Basis | NoBasis]
    bound_checks: dict[str, object]
    timing: dict[str, float] = field(default_factory=dict)

    def to_dict(self, g: Graph | None = None, include_timing: bool = False) -> dict:
        bases = {}
        for key, b in self.bases.items():
            if isinstance(b, Basis):
                bases[key] = {
                    "landmarks": list(b.landmarks),
                    "labels": b.labels(g) if g is not None else None,
                    "certificate": b.certificate.to_dict(),
                }
            else:
                bases[key] = None
        return {
            "graph": self.graph,
            "n": self.n,
            "m": self.m,
            "beta": self.beta,
            "beta_edge": self.beta_edge,
            "beta_mixed": self.beta_mixed,
            "bases": bases,
            "bound_checks": dict(self.bound_checks),
            "elapsed_ms": (
                {k: round(v * 1000, 3) for k, v in self.timing.items()} if include_timing else None
            ),
        }


def check_size(g: Graph, cap: int | None) -> None:
    limit = DEFAULT_SIZE_CAP if cap is None else cap
    if limit > 0 and g.n > limit:
        raise SizeCapExceeded(f"{g.name or 'graph'} has {g.n} vertices, exact-search cap is {limit}")


def dimension_profile(
    g: Graph,
    dm: DistanceMatrix | None = None,
    cap: int | None = DEFAULT_SIZE_CAP,
    threads: int | None = None,
) -> DimensionReport:
    """Metric, edge metric and mixed metric dimension of ``g`` with bound checks.

    ``cap=0`` disables the vertex-count guard.
    """
    check_size(g, cap)
    dm = dm if dm is not None else all_pairs_distances(g)
    bases: dict[str, Basis | NoBasis] = {}
    timing: dict[str, float] = {}
    for variant in Variant:
        t0 = time.perf_counter()
        bases[variant.value] = minimum_resolving_set(g, dm, variant, threads=threads)
        timing[variant.value] = time.perf_counter() - t0
    beta = bases["vertex"].cardinality
    beta_e = bases["edge"].cardinality
    beta_m = bases["mixed"].cardinality
    floor = dimension_lower_bound(g, Variant.EDGE)
    checks = {
        "mixed_ge_max": None if None in (beta, beta_e, beta_m) else beta_m >= max(beta, beta_e),
        "edge_log_floor": floor,
        "edge_ge_log_floor": None if beta_e is None else beta_e >= floor,
    }
    return DimensionReport(
        graph=g.name, n=g.n, m=g.m, beta=beta, beta_edge=beta_e, beta_mixed=beta_m,
        bases=bases, bound_checks=checks, timing=timing,
    )


def excision_criterion(g: Graph, dm: DistanceMatrix, v: int) -> bool:
    """Sufficient condition for ``V - {v}`` to be a mixed resolving set.

    For every neighbour ``w`` of ``v`` some remaining vertex ``x`` must see
    the edge ``vw`` at a different distance than ``w`` itself.
    """
    dist = dm.dist
    others = [x for x in range(g.n) if x != v]
    for w in g.adjacency[v]:
        if not any(min(dist[v, x], dist[w, x]) != dist[w, x] for x in others):
            return False
    return True

