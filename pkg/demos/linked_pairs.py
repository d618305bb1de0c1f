"""
Products of two segments
========================

Walk over a few pairs and print whether delta(a) x delta(b) stays irreducible.
For linked pairs show the Langlands class and check its words are nonnegative.
"""
from fractions import Fraction

from jacquet import Segment, cuspidal_jacquet, decide_pair, linked
from jacquet.config import DEFAULT_TEXT, parse_config
from jacquet.expr import format_label, format_signed, format_words

rho = parse_config(DEFAULT_TEXT)["rho"]
half = Fraction(1, 2)

pairs = [
    (Segment(rho, 0, 0), Segment(rho, 1, 1)),
    (Segment(rho, 0, 1), Segment(rho, 1, 2)),
    (Segment(rho, -1, 1), Segment(rho, 0, 0)),
    (Segment(rho, 0, 0), Segment(rho, 2, 2)),
    (Segment(rho, -half, half), Segment(rho, half, 3 * half)),
]

for a, b in pairs:
    d = decide_pair(a, b)
    print(format_label(d.class_label), "->", d.status)
    if linked(a, b):
        print("   L     =", format_signed(d.langlands_class))
        print("   other =", format_label(d.other_summand))
        words = cuspidal_jacquet(d.langlands_class)
        print("   words of L:", ", ".join(format_words(words, bare=True)))
        assert words.is_nonnegative()
