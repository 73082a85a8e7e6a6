"""Walk through the flower snarks J_5 .. J_11: structure, a basis, and why three landmarks are never enough."""

import math

import numpy as np

from metdim import (
    Variant,
    all_pairs_distances,
    flower_snark,
    is_resolving,
    minimum_resolving_set,
    structural_report,
)
from metdim.solver import SearchSpace

g, lab = flower_snark(7)
print(g.name, "vertices", g.n, "edges", g.m)
print(structural_report(g))

# the outer cycle is closed by two cross edges
print("twist edges:", g.label(lab.index("c", 6)), "-", g.label(lab.index("d", 0)), "and",
      g.label(lab.index("d", 6)), "-", g.label(lab.index("c", 0)))

dm = all_pairs_distances(g)
print("diameter", dm.diameter)
print("distance histogram", np.bincount(dm.dist.ravel()))

# a four element landmark set separates all 70 items
S = [g.index_of(t) for t in ("b_0", "c_1", "c_5", "d_3")]
print("b_0,c_1,c_5,d_3 resolves:", bool(is_resolving(g, dm, S, Variant.MIXED)))

# a three element one does not; the verdict names a colliding pair
bad = is_resolving(g, dm, [g.index_of(t) for t in ("c_0", "a_1", "a_4")], Variant.MIXED)
print("c_0,a_1,a_4:", bad.to_dict(g.labels))

for n in (5, 7, 9, 11):
    g, _ = flower_snark(n)
    dm = all_pairs_distances(g)
    basis = minimum_resolving_set(g, dm, Variant.MIXED)
    cert = basis.certificate
    print(f"{g.name}: mixed dimension {basis.cardinality}, basis {basis.labels(g)}, "
          f"{cert.subsets_checked} of C({g.n},{cert.refuted_cardinality})="
          f"{math.comb(g.n, cert.refuted_cardinality)} smaller sets refuted")

# every 3-subset of J_9, swept directly
g, _ = flower_snark(9)
sweep = SearchSpace(g, all_pairs_distances(g), Variant.MIXED).sweep(3, mode="first")
print("J_9 3-subsets checked", sweep.checked, "resolving ones found", len(sweep.hits))
