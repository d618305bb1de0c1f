"""
Coproducts and cuspidal words
=============================

m* of a segment, of a product, iterated once more, and the words at the
bottom of the tower.
"""
from jacquet import RElem, Segment, comult_iterate, cuspidal_jacquet, mstar
from jacquet.config import parse_config, DEFAULT_TEXT
from jacquet.expr import format_tensor, format_words, parse_expr

lines = parse_config(DEFAULT_TEXT)
rho = lines["rho"]

# delta([rho, nu^2 rho]): four terms, the upper piece always on the left
for row in format_tensor(mstar(Segment(rho, 0, 2))):
    print(row)
print()

# m* is multiplicative, so a product expands factor by factor
x = parse_expr("d(rho,0,1) x c(rho:1)", lines)
for row in format_tensor(mstar(x)):
    print(row)
print()

# three-fold
t = comult_iterate(x, 3)
print(len(t), "terms at arity 3")

# words: shuffles of the descending segment words
for row in format_words(cuspidal_jacquet(x), bare=True):
    print(row)

# and a virtual class, z([rho, nu rho]) x nu rho
z = parse_expr("z(rho:0) x c(rho:1)", lines)
for row in format_words(cuspidal_jacquet(z), bare=True):
    print(row)

print(cuspidal_jacquet(RElem.one()))
