"""
Exact min-cut along an update stream
====================================

Feed a random insert/delete stream to the dynamic estimator and compare
every answer with Stoer-Wagner. Values above lambda_max are only reported
as "above".
"""

from fractions import Fraction

from treepack.generators import mincut_stream
from treepack.mincut import MinCutConfig, MinCutEstimator
from treepack.oracles import stoer_wagner

LAMBDA_MAX = 3
g0, ups = mincut_stream(seed=7, n=8, steps=120, p_delete=0.4)
est = MinCutEstimator(MinCutConfig(LAMBDA_MAX, const=Fraction(1, 2)), g0)

exact = above = 0
for t, up in enumerate(ups):
    est.apply(up)
    rep = est.cut()
    lam, _ = stoer_wagner(est.g)
    if lam <= LAMBDA_MAX:
        assert rep.value == lam
        exact += 1
    else:
        assert rep.value > LAMBDA_MAX
        above += 1
    if t % 20 == 0:
        print(f"step {t:3d}: {up.op} {up.u} {up.v}  m={est.g.m():2d}  "
              f"estimate={rep.value}  lambda={lam}  ({rep.source})")

print(f"{exact} exact answers, {above} above lambda_max, {est.rebuilds} rebuilds")
