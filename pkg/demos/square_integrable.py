"""
Square-integrable supports
==========================

Which multisets of cuspidal points carry a square-integrable delta?  Ask the
classifier, then look at Casselman's criterion on the segment's word.
"""
from itertools import combinations

from jacquet import casselman, classify_square_integrable
from jacquet.harness import InstanceWindow

w = InstanceWindow(lo=-1, hi=1)
pts = w.points()

for r in (1, 2, 3):
    for X in combinations(pts, r):
        res = classify_square_integrable(X)
        if res.segment is not None:
            v = casselman(res.segment.word())
            print("SI  ", res.segment, "weights sum", v.weighted_sum)
        elif res.essentially_only:
            v = casselman(res.candidate.word())
            print("ess.", res.candidate, "weights sum", v.weighted_sum)

# the tie case: the first partial sum is 0, so not square integrable
print(casselman(w.points()[4:5] * 2))
