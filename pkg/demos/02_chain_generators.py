"""
Semigroup generators over a maximal chain of degree sequences
=============================================================

Degree sequences between two bounds form a poset under the termwise
order, and each maximal chain spans a simplicial cone of diagrams.  The
integer points inside one such cone form an affine semigroup; this
script computes its minimal generators for the three-column window
(0,1,4) <= d <= (0,3,4) and cross-checks them against a brute-force
enumeration.
"""

import numpy as np

from betticone import (
    DegreeWindow,
    brute_force_generators,
    determinant,
    enumerate_chains,
    format_chain,
    generator_bound,
    phi_matrix,
    semigroup_generators,
    smith_normal_form,
    universal_denominator,
)

w = DegreeWindow((0, 1, 4), (0, 3, 4))

# every maximal chain in the window, largest sequence first
chains = enumerate_chains(w)
for c in chains:
    print(format_chain(c))

# pick the chain with the largest universal denominator; the others are
# unimodular and generated by their own pure diagrams
chain = max(chains, key=lambda c: universal_denominator(c, w))
print("working chain:", format_chain(chain))

# the matrix Phi holds the pure diagrams of the chain as columns,
# one row per (i, j) position of the window
phi = np.array(phi_matrix(chain, w))
print("Phi =")
print(phi)

# its Smith normal form gives the universal denominator m: every
# integer point of the cone is (1/m) * (nonnegative integer combination
# of the chain's pure diagrams)
divisors = smith_normal_form(phi.tolist())
m = universal_denominator(chain, w)
print("elementary divisors:", divisors, "-> m =", m)
print("|det Phi| =", abs(determinant(phi.tolist())))

# minimal generators of the semigroup, with Hilbert-basis witnesses
gens = semigroup_generators(chain, w)
print("generator count:", len(gens), "(a priori bound:", generator_bound(chain, w), ")")
for diagram, witness in gens:
    print("witness", witness)
    print(diagram.format(), end="")

# brute force: scan the full box of coefficient vectors up to m and
# keep the minimal integral ones; the two computations must agree
brute = brute_force_generators(chain, w, cap=m)
assert set(gens.diagrams()) == set(brute.diagrams())
print("brute-force cross-check passed:", len(brute), "generators")
