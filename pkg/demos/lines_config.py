"""
Several cuspidal lines
======================

Declare lines in a config document and use them from the expression grammar.
The pair a/b is dual to each other, so nothing on it is unitary.
"""
from jacquet import casselman, classify_square_integrable, mstar
from jacquet.config import parse_config
from jacquet.expr import format_tensor, parse_expr, parse_points

text = """
[line rho]

[line a]
size = 2
s = 1/2
dual = b

[line b]
size = 2
s = 1/2
dual = a
"""
lines = parse_config(text)
print(lines)

x = parse_expr("d(a,0,1) x c(rho:0)", lines)
for row in format_tensor(mstar(x)):
    print(row)

print(classify_square_integrable(parse_points("a:0", lines), lines))
print(classify_square_integrable(parse_points("rho:0", lines), lines))

# weights scale with size * s
v = casselman(parse_points("a:1,a:-1", lines))
print(v.raw_sum, v.weighted_sum, v.square_integrable)
