"""Pure diagrams: the beta_0 = 1 normalization and the first lattice point."""

from fractions import Fraction
from math import gcd, lcm, prod

from .diagram import BettiDiagram, DiagramError, degree_sequence


class NormalizedPure:
    """Pure diagram of type d scaled so that beta_0 = 1."""

    __slots__ = ("degree_sequence", "values")

    def __init__(self, d, values):
        self.degree_sequence = d
        self.values = tuple(values)

    def diagram(self):
        return BettiDiagram(
            {(i, j): v for i, (j, v) in enumerate(zip(self.degree_sequence, self.values))}
        )


class PureDiagram:
    """First lattice point on the ray of pure diagrams of type d."""

    __slots__ = ("degree_sequence", "diagram")

    def __init__(self, d, diagram):
        self.degree_sequence = d
        self.diagram = diagram


def normalized_pure(d):
    """Entries beta_i = prod_{k!=0}|d_k - d_0| / prod_{k!=i}|d_i - d_k|."""
    d = degree_sequence(d)
    numer = prod(abs(dk - d[0]) for dk in d[1:])
    values = []
    for i, di in enumerate(d):
        denom = prod(abs(di - dk) for k, dk in enumerate(d) if k != i)
        values.append(Fraction(numer, denom))
    return NormalizedPure(d, values)


def pure_diagram(d):
    """Scale the normalized pure diagram by the lcm of its denominators."""
    npure = normalized_pure(d)
    lam = lcm(*(v.denominator for v in npure.values))
    ints = [int(v * lam) for v in npure.values]
    g = gcd(*ints)
    ints = [v // g for v in ints]
    diagram = BettiDiagram(
        {(i, j): v for i, (j, v) in enumerate(zip(npure.degree_sequence, ints))}
    )
    return PureDiagram(npure.degree_sequence, diagram)


def is_pure_multiple(D):
    """Return (q, d) with D = q * pure_diagram(d), or None."""
    if not D:
        return None
    cols = D.columns()
    if cols != list(range(len(cols))):
        return None
    degrees = []
    for i in cols:
        col = D.column(i)
        if len(col) != 1:
            return None
        degrees.append(col[0])
    if any(a >= b for a, b in zip(degrees, degrees[1:])):
        return None
    d = tuple(degrees)
    pi = pure_diagram(d).diagram
    q = D.get(0, d[0]) / pi.get(0, d[0])
    if D == pi.scale(q):
        return (q, d)
    return None


def _is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_family(P, c=1):
    """c-fold multiple of the normalized pure diagram of type (0,1,P+1,...,2P)."""
    if not _is_prime(P):
        raise DiagramError(f"{P} is not prime")
    if c < 1:
        raise DiagramError("multiplier must be a positive integer")
    d = (0, 1) + tuple(range(P + 1, 2 * P + 1))
    return normalized_pure(d).diagram().scale(c)
