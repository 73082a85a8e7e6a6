"""Wheels W_3 .. W_10: from n = 4 on the rim alone is a mixed basis."""

from metdim import all_pairs_distances, dimension_profile, excision_criterion, wheel
from metdim.repro import verify_wheel_theorem

for n in range(3, 11):
    g, labels = wheel(n)
    rep = dimension_profile(g)
    print(f"W_{n}: beta={rep.beta} beta_E={rep.beta_edge} beta_M={rep.beta_mixed}")

g, _ = wheel(8)
dm = all_pairs_distances(g)
# dropping the hub from V still leaves a mixed resolving set
print("excision holds at the hub of W_8:", excision_criterion(g, dm, 0))
print("and at a rim vertex:", excision_criterion(g, dm, 1))

rep = verify_wheel_theorem(8)
print(rep.summary())
print("refutation", rep.details["refutation"])

# W_3 is K_4, where the rim alone is not enough
print(verify_wheel_theorem(3).details["solver_basis"])
