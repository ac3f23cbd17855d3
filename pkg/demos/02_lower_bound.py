"""
A greedy packing that stays k/|T| away
======================================

The lower-bound family G_{n,k} has every ideal load equal to 1/2, yet a
scripted greedy schedule leaves some edge with load |T|/2 + k. The schedule
is checked tree by tree against the greedy rule.
"""

from treepack.lowerbound import CapacityError, build_instance, full_schedule, min_tail

for k, n in ((1, 10), (2, 14), (3, 23)):
    inst = build_instance(n, k)
    P, rep = full_schedule(inst)
    print(f"k={k} n={n}: |T|={rep.size} max load={rep.max_load} error={rep.error} "
          f"greedy={rep.greedy} profile={rep.profile}")

# each build step consumes one pair of the tail, which bounds k for a given n
print("smallest n for k=3:", min_tail(3))
try:
    full_schedule(build_instance(20, 3))
except CapacityError as exc:
    print("n=20, k=3:", exc)
