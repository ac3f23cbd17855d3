"""
Arboricity under updates
========================

The deterministic estimator keeps a leveled packing per scale and reads
|T| / min L at the level that matches its last answer. Here it follows a
random stream; the exact value comes from subset enumeration.
"""

from fractions import Fraction

from treepack.arboricity import DetArboricityEstimator, SimpleCombinator
from treepack.generators import arboricity_stream, complete, within
from treepack.multigraph import MultiGraph, apply_update
from treepack.oracles import alpha_exact

EPS = Fraction(1, 4)
n = 7
g = MultiGraph(n)
est = DetArboricityEstimator(n, EPS, 8, Fraction(1, 4))
for t, up in enumerate(arboricity_stream(seed=3, n=n, steps=150, alpha_cap=6)):
    apply_update(g, up)
    est.apply(up)
    a = alpha_exact(g)
    assert within(est.value(), a, EPS) or a == 0
    if t % 25 == 0:
        print(f"step {t:3d}: m={g.m():2d}  alpha={a}  estimate={est.value()}  "
              f"level={est.selected_level}")

# dense simple graphs switch to exact density
for size in (4, 11):
    k = complete(size)
    sc = SimpleCombinator(size, EPS, Fraction(1, 8), list(k.iter_edges()))
    print(f"K{size}: estimate={sc.value()} regime={sc.regime} alpha={alpha_exact(k)}")
