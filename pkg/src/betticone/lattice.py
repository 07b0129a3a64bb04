"""Exact integer linear algebra and the semigroup generators of a simplex.

Smith normal form over Z, the pure-diagram matrix of a chain, the universal
denominator, Hilbert bases of homogeneous systems A*x = 0 over N, and the
minimal generators of the virtual-diagram semigroup restricted to a simplex.
"""

from fractions import Fraction
from itertools import islice, product
from math import gcd, lcm

import numpy as np

from .pure import pure_diagram
from .diagram import BettiDiagram


# ---------------------------------------------------------------------------
# Smith normal form and determinants


def smith_normal_form(A):
    """Elementary divisors e_1 | e_2 | ... of an integer matrix.

    Returns a list of min(rows, cols) nonnegative integers forming a
    divisibility chain (zeros, if any, at the end).
    """
    M = [[int(x) for x in row] for row in A]
    m = len(M)
    n = len(M[0]) if M else 0
    r = min(m, n)
    for t in range(r):
        while True:
            # find a pivot in the trailing submatrix
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if M[i][j]:
                        if pivot is None or abs(M[i][j]) < abs(M[pivot[0]][pivot[1]]):
                            pivot = (i, j)
            if pivot is None:
                break
            pi, pj = pivot
            M[t], M[pi] = M[pi], M[t]
            for row in M:
                row[t], row[pj] = row[pj], row[t]
            p = M[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = M[i][t] // p
                if q:
                    for j in range(t, n):
                        M[i][j] -= q * M[t][j]
                if M[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = M[t][j] // p
                if q:
                    for i in range(t, m):
                        M[i][j] -= q * M[i][t]
                if M[t][j]:
                    dirty = True
            if not dirty:
                break
        if M[t][t] == 0:
            break
    divisors = [abs(M[t][t]) for t in range(r)]
    # enforce the divisibility chain; diag(a, b) ~ diag(gcd, lcm)
    changed = True
    while changed:
        changed = False
        for k in range(len(divisors) - 1):
            a, b = divisors[k], divisors[k + 1]
            if a and b and b % a:
                divisors[k], divisors[k + 1] = gcd(a, b), lcm(a, b)
                changed = True
            elif a == 0 and b:
                divisors[k], divisors[k + 1] = b, 0
                changed = True
    return divisors


def determinant(A):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    M = [[int(x) for x in row] for row in A]
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant requires a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1] if n else 1


# ---------------------------------------------------------------------------
# The pure-diagram matrix of a chain


def _coordinate_rows(w):
    return [(i, j) for i in range(len(w.dlow)) for j in range(w.dlow[i], w.dhigh[i] + 1)]


def phi_matrix(chain, w):
    """Square matrix whose column l holds the coordinates of the l-th pure diagram.

    Rows run over the window coordinate space (i ascending, then j ascending);
    columns follow the chain from its largest degree sequence down.
    """
    rows = _coordinate_rows(w)
    pures = [pure_diagram(d).diagram for d in chain.sequences]
    return [[int(pi.get(i, j)) for pi in pures] for (i, j) in rows]


def universal_denominator(chain, w):
    """Largest elementary divisor of the chain's pure-diagram matrix."""
    divisors = smith_normal_form(phi_matrix(chain, w))
    if not divisors or divisors[-1] == 0:
        raise ValueError("pure-diagram matrix is singular")
    return divisors[-1]


def generator_bound(chain, w):
    """Upper bound |det Phi| + s on the number of semigroup generators."""
    return abs(determinant(phi_matrix(chain, w))) + len(chain) - 1


# ---------------------------------------------------------------------------
# Hilbert bases


def hilbert_basis(A):
    """Minimal generators of {x in N^n : A*x = 0}, sorted.

    Breadth-first completion over the unit vectors: a partial solution t with
    residual v = A*t is extended by e_j only when <v, A*e_j> < 0, and nodes
    dominating a known solution are pruned.  Levels are expanded with numpy
    (exact int64; the systems handled here stay far from overflow), and the
    collected solutions are filtered to the minimal antichain at the end.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if n == 0:
        return []
    if m == 0:
        return [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    C = np.asarray(A, dtype=np.int64)
    T = np.eye(n, dtype=np.int64)
    V = C.T.copy()
    solved = ~V.any(axis=1)
    sols = [t for t in T[solved]]
    T, V = T[~solved], V[~solved]
    while len(T):
        if sols:
            S = np.array(sols)
            dom = (T[:, None, :] >= S[None, :, :]).all(axis=2).any(axis=1)
            T, V = T[~dom], V[~dom]
        if not len(T):
            break
        node_idx, j_idx = np.nonzero(V @ C < 0)
        if not len(node_idx):
            break
        T2 = T[node_idx]
        T2[np.arange(len(node_idx)), j_idx] += 1
        V2 = V[node_idx] + C[:, j_idx].T
        T2, first = np.unique(T2, axis=0, return_index=True)
        V2 = V2[first]
        solved = ~V2.any(axis=1)
        sols.extend(T2[solved])
        T, V = T2[~solved], V2[~solved]
    return sorted(minimal_antichain(tuple(int(x) for x in s) for s in sols))


def minimal_antichain(vectors):
    """Entrywise-minimal elements of a set of equal-length integer vectors."""
    uniq = sorted(set(vectors), key=lambda v: (sum(v), v))
    kept = []
    for v in uniq:
        if not any(all(a >= b for a, b in zip(v, s)) for s in kept):
            kept.append(v)
    return kept


def _congruence_minimal_solutions(phi, m):
    """Minimal nonzero a in N^k with phi * a = 0 (mod m).

    This carries the Hilbert basis of the structured system [-m*I | phi]:
    because phi is entrywise nonnegative, the b-part of any solution is the
    determined value phi*a/m and (b, a) <= (b', a') iff a <= a'.

    A minimal solution satisfies a_l <= ord(g_l), the order of column l in
    (Z/m)^rows: ord(g_l) * e_l is itself a solution, so anything larger in
    coordinate l splits off.  The capped box is searched meet-in-the-middle,
    hashing the residues of one half against the complements of the other.
    """
    rows = len(phi)
    k = len(phi[0]) if rows else 0
    if m == 1:
        return [tuple(1 if i == l else 0 for i in range(k)) for l in range(k)]
    columns = [tuple(phi[r][l] % m for r in range(rows)) for l in range(k)]
    caps = [m // gcd(m, *g) for g in columns]
    half = k // 2
    lo_cols, hi_cols = columns[:half], columns[half:]

    def residue(cols, a):
        return tuple(sum(c[r] * x for c, x in zip(cols, a)) % m for r in range(rows))

    lo_table = {}
    for left in product(*(range(c + 1) for c in caps[:half])):
        lo_table.setdefault(residue(lo_cols, left), []).append(left)
    sols = []
    for right in product(*(range(c + 1) for c in caps[half:])):
        need = tuple((-x) % m for x in residue(hi_cols, right))
        for left in lo_table.get(need, ()):
            a = left + right
            if any(a):
                sols.append(a)
    return sorted(minimal_antichain(sols))


# ---------------------------------------------------------------------------
# Semigroup generators of the lattice points of a simplex


class GeneratorSet:
    """Minimal semigroup generators, each with its Hilbert-basis witness."""

    __slots__ = ("generators", "denominator")

    def __init__(self, generators, denominator):
        self.generators = tuple(generators)
        self.denominator = denominator

    def diagrams(self):
        return [g for g, _ in self.generators]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _witness_diagram(witness, pures, m):
    total = BettiDiagram()
    for a, pi in zip(witness, pures):
        if a:
            total = total + pi.scale(Fraction(a, m))
    return total


def semigroup_generators(chain, w):
    """Generators of the lattice-point semigroup of the chain's simplex.

    Solves [-m*I | Phi] * (b, a)^T = 0 over N and maps the a-part of each
    minimal solution to the diagram (1/m) * sum a_l * pi_l.  The b-part is
    determined by the a-part, so the minimal solutions are computed from the
    congruence Phi * a = 0 (mod m) directly.
    """
    m = universal_denominator(chain, w)
    phi = phi_matrix(chain, w)
    pures = [pure_diagram(d).diagram for d in chain.sequences]
    gens = []
    seen = set()
    for a in _congruence_minimal_solutions(phi, m):
        diagram = _witness_diagram(a, pures, m)
        if diagram in seen:
            continue
        seen.add(diagram)
        gens.append((diagram, a))
    gens.sort(key=lambda g: g[1])
    return GeneratorSet(gens, m)


def brute_force_generators(chain, w, cap):
    """Independent oracle: enumerate (1/m) sum a_l pi_l with a_l <= cap.

    Walks the whole coefficient box, keeps the combinations in which every
    window coordinate is an integer, and extracts the minimal antichain.
    A cap that is too small silently truncates the enumeration; callers must
    supply cap >= m.
    """
    m = universal_denominator(chain, w)
    phi = np.asarray(phi_matrix(chain, w), dtype=np.int64)
    s1 = len(chain)
    axes = [np.arange(cap + 1, dtype=np.int64)] * s1
    sols = []
    chunk = 1 << 18
    box = product(*axes[:-1])
    tail = axes[-1]
    while True:
        heads = list(islice(box, max(1, chunk // len(tail))))
        if not heads:
            break
        A = np.repeat(np.array(heads, dtype=np.int64), len(tail), axis=0)
        A = np.hstack([A, np.tile(tail, len(heads))[:, None]])
        integral = ((A @ phi.T) % m == 0).all(axis=1) & A.any(axis=1)
        sols.extend(tuple(int(x) for x in a) for a in A[integral])
    pures = [pure_diagram(d).diagram for d in chain.sequences]
    gens = []
    seen = set()
    for a in sorted(minimal_antichain(sols)):
        diagram = _witness_diagram(a, pures, m)
        if diagram in seen:
            continue
        seen.add(diagram)
        gens.append((diagram, a))
    gens.sort(key=lambda g: g[1])
    return GeneratorSet(gens, m)
