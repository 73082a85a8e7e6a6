"""Checking whether a landmark set resolves a graph."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from metdim.errors import DuplicateLandmark, EmptyLandmarks, IndexOutOfRange
from metdim.graph import DistanceMatrix, Graph, Item, item_matrix


class Variant(str, enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    MIXED = "mixed"

    @classmethod
    def parse(cls, value: "str | Variant") -> "Variant":
        if isinstance(value, Variant):
            return value
        return cls(value.lower())


@dataclass(frozen=True)
class ResolvingVerdict:
    resolving: bool
    witness: tuple[Item, Item] | None = None
    vectors: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.resolving

    def to_dict(self, labels=None) -> dict:
        out: dict = {"resolving": self.resolving, "witness": None, "vectors": None}
        if self.witness is not None:
            out["witness"] = [it.describe(labels) for it in self.witness]
            out["vectors"] = [list(v) for v in self.vectors]
        return out


def _check_landmarks(g: Graph, landmarks: Sequence[int]) -> list[int]:
    lm = [int(w) for w in landmarks]
    if not lm:
        raise EmptyLandmarks("landmark set is empty")
    if len(set(lm)) != len(lm):
        raise DuplicateLandmark(f"landmarks repeat a vertex: {lm}")
    for w in lm:
        if not 0 <= w < g.n:
            raise IndexOutOfRange(f"landmark {w} outside 0..{g.n - 1}")
    return lm


def _group_ids(vectors: np.ndarray) -> np.ndarray:
    if vectors.shape[0] == 0:
        return np.zeros(0, dtype=np.int64)
    _, inverse = np.unique(vectors, axis=0, return_inverse=True)
    return inverse.reshape(-1)


def is_resolving(
    g: Graph,
    dm: DistanceMatrix,
    landmarks: Sequence[int],
    variant: Variant | str = Variant.MIXED,
) -> ResolvingVerdict:
    """Resolve check with a deterministic witness on failure.

    The witness is the colliding pair whose first item comes earliest in
    canonical item order, paired with the earliest later item sharing its
    coordinate vector.
    """
    variant = Variant.parse(variant)
    lm = _check_landmarks(g, landmarks)
    items = g.items(variant.value)
    vectors = item_matrix(g, dm, variant.value)[:, lm]
    ids = _group_ids(vectors)
    if len(np.unique(ids)) == len(items):
        return ResolvingVerdict(True)
    members: dict[int, list[int]] = {}
    for idx, gid in enumerate(ids.tolist()):
        members.setdefault(gid, []).append(idx)
    i, j = min(m[:2] for m in members.values() if len(m) > 1)
    vec = tuple(int(x) for x in vectors[i])
    return ResolvingVerdict(False, (items[i], items[j]), (vec, tuple(int(x) for x in vectors[j])))


def signature_table(
    g: Graph,
    dm: DistanceMatrix,
    landmarks: Sequence[int],
    variant: Variant | str = Variant.MIXED,
) -> dict[tuple[int, ...], list[Item]]:
    """Items grouped by coordinate vector, groups in order of first appearance."""
    variant = Variant.parse(variant)
    lm = _check_landmarks(g, landmarks)
    items = g.items(variant.value)
    vectors = item_matrix(g, dm, variant.value)[:, lm]
    table: dict[tuple[int, ...], list[Item]] = {}
    for item, row in zip(items, vectors.tolist()):
        table.setdefault(tuple(row), []).append(item)
    return table
