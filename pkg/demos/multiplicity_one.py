"""
Multiplicity one by extraction
==============================

For distinct unitary segments, peel delta(D_1), delta(D_2), ... off the left
of m* in turn and watch exactly one copy survive.  The same count is then
read off the iterated coproduct directly.
"""
from fractions import Fraction

from jacquet import Multisegment, RElem, Segment, filter, FilterSpec, mstar
from jacquet.config import DEFAULT_TEXT, parse_config
from jacquet.expr import format_terms
from jacquet.harness import check_lambda_equality, direct_multiplicity, extraction_blocks
from jacquet.hopf import right_factors

rho = parse_config(DEFAULT_TEXT)["rho"]
h = Fraction(1, 2)
family = [Segment(rho, 0, 0), Segment(rho, -3 * h, 3 * h), Segment(rho, -h, h)]

blocks = extraction_blocks(family)
print("order:", [b.entries[0] for b in blocks])

cur = RElem.basis(Multisegment(family))
for b in blocks:
    cur = right_factors(filter(mstar(cur), FilterSpec.left(b)))
    print("after", b, ":", format_terms(cur))

print("direct count:", direct_multiplicity(blocks))

# repeated blocks: delta([-1/2,1/2]) twice next to delta([-3/2,3/2])
rep = extraction_blocks([Segment(rho, -h, h), Segment(rho, -h, h), Segment(rho, -3 * h, 3 * h)])
print(rep, direct_multiplicity(rep))

# widened segments around a unitary one: the filtered coproduct is a single term
for k in (1, 2):
    print(check_lambda_equality(Segment(rho, -h, h), k).summary())
