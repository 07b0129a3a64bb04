"""Simplicial-fan structure of the cone of Betti diagrams.

The partial order on degree sequences, maximal chains inside a degree
window, the greedy decomposition into pure diagrams, and cone / lattice
membership tests.
"""

from fractions import Fraction
from itertools import product

from .diagram import BettiDiagram, DegreeWindow, degree_sequence
from .pure import pure_diagram


class NotInCone(ValueError):
    pass


def degseq_leq(d, d2):
    """d <= d' iff d is at least as long and entrywise <= on d' positions."""
    d = degree_sequence(d)
    d2 = degree_sequence(d2)
    if len(d) < len(d2):
        return False
    return all(a <= b for a, b in zip(d, d2))


class Chain:
    """A maximal chain of degree sequences, stored largest first.

    The largest-first convention matches both the printed chain notation
    `(0)>(0,3)>...` and the column order of the pure-diagram matrix.
    """

    __slots__ = ("sequences",)

    def __init__(self, sequences):
        self.sequences = tuple(degree_sequence(s) for s in sequences)
        for hi, lo in zip(self.sequences, self.sequences[1:]):
            if hi == lo or not degseq_leq(lo, hi):
                raise ValueError(f"not strictly descending: {hi} !> {lo}")

    def __len__(self):
        return len(self.sequences)

    def __eq__(self, other):
        return isinstance(other, Chain) and self.sequences == other.sequences

    def __hash__(self):
        return hash(self.sequences)

    def __repr__(self):
        return format_chain(self)


def format_chain(chain):
    return ">".join("(" + ",".join(map(str, s)) + ")" for s in chain.sequences)


def parse_chain(text):
    parts = [p.strip() for p in text.split(">")]
    seqs = []
    for p in parts:
        if not (p.startswith("(") and p.endswith(")")):
            raise ValueError(f"bad chain element {p!r}")
        seqs.append(tuple(int(x) for x in p[1:-1].split(",")))
    return Chain(seqs)


def window_sequences(w):
    """All degree sequences of any length fitting inside the window."""
    out = []
    for t in range(len(w.dlow)):
        ranges = [range(w.dlow[i], w.dhigh[i] + 1) for i in range(t + 1)]
        for cand in product(*ranges):
            if all(a < b for a, b in zip(cand, cand[1:])):
                out.append(cand)
    return sorted(out, key=lambda s: (len(s), s))


def enumerate_chains(w):
    """All maximal chains in the window, in sorted order, largest element first.

    The window poset has unique bottom dlow and unique top (dhigh_0), so
    maximal chains are exactly the bottom-to-top paths in the Hasse diagram.
    """
    elems = window_sequences(w)
    strictly_less = {
        e: [f for f in elems if f != e and degseq_leq(e, f)] for e in elems
    }
    covers = {}
    for e in elems:
        ups = strictly_less[e]
        covers[e] = [f for f in ups if not any(g in ups and f != g and degseq_leq(g, f) for g in ups)]
    bottom = tuple(w.dlow)
    chains = []

    def walk(path):
        ups = covers[path[-1]]
        if not ups:
            chains.append(Chain(reversed(path)))
            return
        for f in sorted(ups, key=lambda s: (len(s), s)):
            walk(path + [f])

    walk([bottom])
    chains.sort(key=lambda c: c.sequences)
    return chains


class PureDecomposition:
    """Ordered list of (positive rational coefficient, degree sequence)."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = tuple((Fraction(c), degree_sequence(d)) for c, d in terms)

    def diagram(self):
        total = BettiDiagram()
        for c, d in self.terms:
            total = total + pure_diagram(d).diagram.scale(c)
        return total

    def __iter__(self):
        return iter(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        body = " + ".join(f"{c}*pi{d}" for c, d in self.terms)
        return f"PureDecomposition({body})"


def decompose(D):
    """Greedy elimination along the minimal degree sequence of the diagram.

    At each step the candidate degree sequence is d_i = min{j : beta_{i,j} != 0}
    for i = 0..pdim; it must be strictly increasing with no column gaps.
    """
    if not D:
        raise NotInCone("the zero diagram has no decomposition")
    if any(v < 0 for v in D.entries.values()):
        raise NotInCone("negative entry")
    current = dict(D.entries)
    terms = []
    while current:
        cols = sorted({i for i, _ in current})
        if cols != list(range(len(cols))):
            raise NotInCone(f"nonzero columns {cols} are not contiguous from 0")
        d = tuple(min(j for (i, j) in current if i == ii) for ii in cols)
        if any(a >= b for a, b in zip(d, d[1:])):
            raise NotInCone(f"minimal degrees {d} are not strictly increasing")
        pi = pure_diagram(d).diagram
        c = min(current[(i, di)] / pi.get(i, di) for i, di in enumerate(d))
        for (i, j), v in pi.entries.items():
            rem = current[(i, j)] - c * v
            if rem:
                current[(i, j)] = rem
            else:
                del current[(i, j)]
        terms.append((c, d))
    return PureDecomposition(terms)


def in_cone(D):
    if not D:
        return True
    try:
        decompose(D)
    except NotInCone:
        return False
    return True


def in_lattice(D):
    return D.is_integral() and in_cone(D)
