"""
Greedy tree packing and ideal loads
===================================

Build greedy packings of growing size on a small multigraph and watch the
relative loads settle on the ideal loads. The smallest ideal load gives
back the fractional arboricity.
"""

from fractions import Fraction

from treepack.generators import complete
from treepack.ideal import ideal_loads
from treepack.multigraph import MultiGraph
from treepack.oracles import alpha_exact, phi_exact, stoer_wagner
from treepack.packing import build_greedy

# K4 plus a pendant vertex: the pendant edge is in every tree
g = MultiGraph(5)
for u, v in complete(4).edges.values():
    g.add_edge(u, v)
g.add_edge(3, 4)
print("edges:", dict(g.edges))

il = ideal_loads(g)
print("ideal loads:", {e: str(x) for e, x in il.loads.items()})
lam, _ = stoer_wagner(g)
print(f"lambda = {lam}, Phi = {phi_exact(g)}, alpha = {alpha_exact(g)}")

# odd sizes cannot split K4 evenly; the gap shrinks like 1/|T|
for size in (3, 7, 31, 127):
    P = build_greedy(g, size)
    gap = max(abs(P.rel_load(e) - il.loads[e]) for e in g.edges)
    print(f"|T| = {size:4d}   max |l - l*| = {gap}  ({float(gap):.4f})")

lo = min(il.loads.values())
assert alpha_exact(g) == 1 / lo
print("1 / min l* =", Fraction(1) / lo)
