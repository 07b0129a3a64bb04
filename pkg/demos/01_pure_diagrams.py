"""
Pure Betti diagrams and the first lattice point on a ray
========================================================

A pure diagram of type d = (d_0 < d_1 < ... < d_p) has exactly one
nonzero entry per column, at position (i, d_i).  Up to scale the entries
are forced:

    beta_i = prod_{k != 0} |d_k - d_0| / prod_{k != i} |d_i - d_k|

`normalized_pure` returns that diagram scaled to beta_0 = 1, and
`pure_diagram` rescales it to the smallest integer point on the ray.
"""

from fractions import Fraction

from betticone import is_pure_multiple, normalized_pure, pure_diagram

# the normalized diagram has rational entries with beta_0 = 1
npi = normalized_pure((0, 1, 3, 4))
print("normalized pure of type (0,1,3,4):", npi.values)

# the first lattice point clears denominators and divides out the gcd
pi = pure_diagram((0, 1, 3, 4))
print("first lattice point:")
print(pi.diagram.format(), end="")

# the two diagrams lie on the same ray
scale = pi.diagram.get(0, 0)
assert pi.diagram == npi.diagram().scale(scale)
print("ray scale factor:", scale)

# the alternating column sums vanish: a pure diagram is the Betti table
# of a module of finite length, so its Hilbert numerator has a zero of
# order p at t = 1
print("Hilbert numerator:", dict(pi.diagram.hilbert_numerator()))
print("codimension:", pi.diagram.codimension())

# recognizing multiples of pure diagrams
D = pi.diagram.scale(Fraction(7, 2))
print("is_pure_multiple(7/2 * pi):", is_pure_multiple(D))
print("is_pure_multiple(pi + shifted pi):", is_pure_multiple(D + pi.diagram.shift(1)))

# a longer type: note the interior entries are small even when the
# degree gaps are large
wide = pure_diagram((0, 1, 6, 10))
print("pure of type (0,1,6,10):")
print(wide.diagram.format(), end="")
