"""Closed-form coordinate tables against BFS distances, cell by cell."""

import numpy as np

from metdim import all_pairs_distances, flower_snark
from metdim.graph import item_matrix
from metdim.repro import expected_coords_flower, flower_landmarks, table_diff

k = 5
g, _ = flower_snark(2 * k + 1)
lm = flower_landmarks(k)
print(g.name, "landmarks", lm)

for item in ("a_0", "b_4", "c_0", "d_10", ("c_10", "d_0"), ("a_3", "b_3")):
    print(f"  {item!s:18} {expected_coords_flower(k, item)}")

# the same numbers straight from the distance matrix
dm = all_pairs_distances(g)
cols = [g.index_of(t) for t in lm]
rows = item_matrix(g, dm, "mixed")[:, cols]
print("distinct rows", len(np.unique(rows, axis=0)), "of", len(rows))

for fam, params in (("flower", (5, 6)), ("wheel", range(5, 11))):
    for p in params:
        rep = table_diff(fam, p)
        print(rep.summary())
