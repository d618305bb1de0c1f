"""
Running the checks
==================

Every check over the default window, then a smaller window on two lines.
"""
from fractions import Fraction

from jacquet import CuspidalLine
from jacquet.harness import DEFAULT_WINDOW, InstanceWindow, run_suite

for r in run_suite(["all"], DEFAULT_WINDOW):
    print(f"{r.summary():60s} {r.elapsed:6.2f} s")

print()
sigma = CuspidalLine("sigma", size=2, s=Fraction(1, 2))
small = InstanceWindow(lines=(CuspidalLine("rho"), sigma), lo=-1, hi=1, max_factors=2)
for r in run_suite(["coassociativity", "shuffle", "si-classifier"], small):
    print(r.summary())
