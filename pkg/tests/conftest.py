"""Shared fixtures: golden tables and the worked three-column chain."""

from betticone import BettiDiagram, DegreeWindow, parse_chain

# The worked example: window (0,1,4) <= d <= (0,3,4) and its printed chain.
CHAIN_3COL = parse_chain("(0)>(0,3)>(0,3,4)>(0,2,4)>(0,1,4)")
WINDOW_3COL = DegreeWindow((0, 1, 4), (0, 3, 4))

PHI_3COL = [
    [1, 1, 1, 1, 3],
    [0, 0, 0, 0, 4],
    [0, 0, 0, 2, 0],
    [0, 1, 4, 0, 0],
    [0, 0, 3, 1, 1],
]

# First lattice points on the five rays of the chain, as displayed tables.
PURES_3COL = {
    (0,): BettiDiagram({(0, 0): 1}),
    (0, 3): BettiDiagram({(0, 0): 1, (1, 3): 1}),
    (0, 3, 4): BettiDiagram({(0, 0): 1, (1, 3): 4, (2, 4): 3}),
    (0, 2, 4): BettiDiagram({(0, 0): 1, (1, 2): 2, (2, 4): 1}),
    (0, 1, 4): BettiDiagram({(0, 0): 3, (1, 1): 4, (2, 4): 1}),
}

# The nine non-pure semigroup generators of the chain's simplex.
EXTRA_GENERATORS_3COL = [
    BettiDiagram({(0, 0): 1, (1, 1): 1, (1, 3): 1, (2, 4): 1}),
    BettiDiagram({(0, 0): 2, (1, 1): 2, (1, 2): 1, (2, 4): 1}),
    BettiDiagram({(0, 0): 1, (1, 2): 1, (1, 3): 2, (2, 4): 2}),
    BettiDiagram({(0, 0): 1, (1, 3): 2, (2, 4): 1}),
    BettiDiagram({(0, 0): 2, (1, 1): 2, (1, 3): 1, (2, 4): 1}),
    BettiDiagram({(0, 0): 3, (1, 1): 3, (1, 3): 1, (2, 4): 1}),
    BettiDiagram({(0, 0): 1, (1, 3): 3, (2, 4): 2}),
    BettiDiagram({(0, 0): 2, (1, 1): 1, (1, 2): 1, (1, 3): 1, (2, 4): 1}),
    BettiDiagram({(0, 0): 1, (1, 2): 1, (1, 3): 1, (2, 4): 1}),
]

# Two-row codimension-3 fixtures and the companion split pair.
D_TWO_ROW = BettiDiagram(
    {(0, 0): 2, (1, 1): 4, (2, 2): 3, (1, 2): 3, (2, 3): 4, (3, 4): 2}
)
D_PRIME = BettiDiagram(
    {(0, 0): 3, (1, 1): 6, (2, 2): 4, (1, 2): 4, (2, 3): 6, (3, 4): 3}
)
D_DOUBLE_PRIME = BettiDiagram(
    {(0, 0): 2, (1, 1): 3, (2, 2): 2, (1, 2): 5, (2, 3): 7, (3, 4): 3}
)

SPLIT_PAIR = (
    BettiDiagram({(0, 0): 1, (1, 2): 6, (2, 3): 8, (3, 4): 3}),
    BettiDiagram({(0, 0): 3, (1, 1): 8, (2, 2): 6, (3, 4): 1}),
)

# Realizable neighbours of D_TWO_ROW.
D_VARIANTS = [
    BettiDiagram({(0, 0): 2, (1, 1): 4, (2, 2): 1, (1, 2): 1, (2, 3): 4, (3, 4): 2}),
    BettiDiagram({(0, 0): 2, (1, 1): 4, (2, 2): 2, (1, 2): 2, (2, 3): 4, (3, 4): 2}),
    BettiDiagram(
        {(0, 0): 2, (1, 1): 4, (2, 2): 3, (3, 3): 1, (1, 2): 3, (2, 3): 5, (3, 4): 2}
    ),
    BettiDiagram({(0, 0): 4, (1, 1): 8, (2, 2): 6, (1, 2): 6, (2, 3): 8, (3, 4): 4}),
]
