"""
Decomposing a diagram into pure pieces
======================================

Every diagram in the cone decomposes uniquely along a chain of degree
sequences: repeatedly peel off the largest possible multiple of the
pure diagram whose type is the current minimal degree sequence.
`decompose` performs the elimination with exact rational arithmetic and
raises NotInCone as soon as a step is impossible.
"""

from fractions import Fraction

from betticone import (
    BettiDiagram,
    NotInCone,
    decompose,
    in_cone,
    in_lattice,
    parse_diagram,
    pure_diagram,
)

# a two-row diagram that is NOT a multiple of any single pure diagram
D = BettiDiagram({(0, 0): 2, (1, 1): 4, (2, 2): 3, (1, 2): 3, (2, 3): 4, (3, 4): 2})
print(D.format(), end="")

dec = decompose(D)
print("decomposition:", dec)

# the terms rebuild the diagram exactly
assert dec.diagram() == D
print("rebuild check passed")

# membership predicates: in_cone allows rational coefficients,
# in_lattice additionally demands integer entries
half = D.scale(Fraction(1, 2))
print("in_cone(D/2):", in_cone(half), " in_lattice(D/2):", in_lattice(half))

# perturbing a single entry usually leaves the cone
bad = D + BettiDiagram({(2, 1): 1})
try:
    decompose(bad)
except NotInCone as exc:
    print("perturbed diagram rejected:", exc)

# the text format round-trips through the parser
text = D.format()
assert parse_diagram(text) == D

# rational coefficients are preserved exactly
mix = pure_diagram((0, 1, 2)).diagram.scale(Fraction(5, 3))
mix = mix + pure_diagram((0, 2, 3)).diagram.scale(Fraction(1, 7))
for c, d in decompose(mix):
    print(f"coefficient {c} on type {d}")
