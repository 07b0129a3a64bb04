"""
Obstructions: lattice points of the cone that are not Betti diagrams
====================================================================

A diagram can be an integer point of the cone and still fail to be the
Betti table of any module.  The battery runs every applicable
obstruction test and reports the violated inequalities; the split
search certifies a diagram only when some decomposition into lattice
summands evades every obstruction.
"""

from betticone import (
    BettiDiagram,
    battery,
    e_alpha,
    in_lattice,
    level_decide,
    pd1_decide,
    prime_family,
    split_search,
)

# D is an integer point of the cone ...
D = BettiDiagram({(0, 0): 2, (1, 1): 4, (2, 2): 3, (1, 2): 3, (2, 3): 4, (3, 4): 2})
print("in_lattice(D):", in_lattice(D))

# ... but no module realizes it: the maximal-minor rank count fails for
# every way of splitting D into lattice summands
report = battery(D)
print("battery(D):", report.verdict)
for f in report.findings:
    print(f"  {f.kind} on {f.applied_to}: {f.lhs} > {f.rhs}")

# 2*D, in contrast, admits a split into two clean diagrams
report2 = battery(D.scale(2))
print("battery(2D):", report2.verdict)
result = split_search(D.scale(2))
print("split_search(2D):", result.verdict)
for part in result.witness:
    print(part.format(), end="")

# an infinite family of obstructed lattice points on a single ray
for alpha in (0, 1, 5):
    r = battery(e_alpha(alpha))
    print(f"E_{alpha}: {r.verdict} {sorted(r.kinds())}")

# multiples of a normalized pure diagram: obstructed below the prime,
# realizable at it
P = 5
for c in (1, P - 1, P):
    r = battery(prime_family(P, c))
    print(f"{c} * normalized pure (P={P}): {r.verdict}")

# exact deciders for small projective dimension
v = pd1_decide(BettiDiagram({(0, 0): 3, (0, 1): 1, (1, 2): 2, (1, 3): 2}))
print("pd1_decide:", v.member, v.decomposition or v.reason)

lvl = BettiDiagram({(0, 0): 2, (1, 1): 1, (1, 2): 2, (2, 4): 1})
v = level_decide(lvl)
print("level_decide:", v.member, v.reason or v.decomposition)
