"""Exact sparse Betti diagrams and diagram-derivable invariants.

A Betti diagram is a finite table of nonnegative rationals beta_{i,j}
indexed by homological position i and internal degree j.  Everything here
is exact: entries are `fractions.Fraction`, equality is bit-exact, and
there is no floating point anywhere.
"""

from fractions import Fraction
from math import comb


class DiagramError(ValueError):
    pass


def degree_sequence(seq):
    """Validate and normalize a strictly increasing integer sequence."""
    d = tuple(int(x) for x in seq)
    if not d:
        raise DiagramError("degree sequence must be nonempty")
    if any(a >= b for a, b in zip(d, d[1:])):
        raise DiagramError(f"degree sequence must be strictly increasing: {d}")
    return d


class DegreeWindow:
    """A pair of componentwise bounds dlow <= dhigh on degree sequences."""

    __slots__ = ("dlow", "dhigh")

    def __init__(self, dlow, dhigh):
        self.dlow = degree_sequence(dlow)
        self.dhigh = degree_sequence(dhigh)
        if len(self.dlow) != len(self.dhigh):
            raise DiagramError("window bounds must have equal length")
        if any(a > b for a, b in zip(self.dlow, self.dhigh)):
            raise DiagramError("window requires dlow <= dhigh componentwise")

    def __repr__(self):
        return f"DegreeWindow({self.dlow}, {self.dhigh})"


class HilbertFunction:
    """Integer Hilbert function values h_start, h_{start+1}, ..."""

    __slots__ = ("start", "values")

    def __init__(self, values, start=0):
        self.start = int(start)
        self.values = tuple(values)

    def __getitem__(self, t):
        if t < self.start:
            return 0
        k = t - self.start
        if k >= len(self.values):
            raise IndexError(f"Hilbert function not computed at degree {t}")
        return self.values[k]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if isinstance(other, HilbertFunction):
            return self.start == other.start and self.values == other.values
        return tuple(self.values) == tuple(other)

    def __repr__(self):
        return f"HilbertFunction({self.values}, start={self.start})"


class BettiDiagram:
    """Sparse mapping (i, j) -> positive rational; zero entries are absent."""

    __slots__ = ("entries",)

    def __init__(self, entries=None):
        cleaned = {}
        for (i, j), v in (entries or {}).items():
            v = Fraction(v)
            if v < 0:
                raise DiagramError(f"negative entry {v} at {(i, j)}")
            if v:
                i, j = int(i), int(j)
                if i < 0:
                    raise DiagramError(f"negative homological index {i}")
                cleaned[(i, j)] = v
        self.entries = cleaned

    # -- semigroup structure -------------------------------------------------

    def __add__(self, other):
        out = dict(self.entries)
        for pos, v in other.entries.items():
            out[pos] = out.get(pos, 0) + v
        return BettiDiagram(out)

    def scale(self, q):
        q = Fraction(q)
        if q < 0:
            raise DiagramError(f"cannot scale a diagram by {q}")
        return BettiDiagram({pos: v * q for pos, v in self.entries.items()})

    def __rmul__(self, q):
        return self.scale(q)

    def __eq__(self, other):
        return isinstance(other, BettiDiagram) and self.entries == other.entries

    def __bool__(self):
        return bool(self.entries)

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def get(self, i, j):
        return self.entries.get((i, j), Fraction(0))

    def is_integral(self):
        return all(v.denominator == 1 for v in self.entries.values())

    # -- basic invariants ----------------------------------------------------

    def pdim(self):
        if not self.entries:
            raise DiagramError("pdim of the empty diagram is undefined")
        return max(i for i, _ in self.entries)

    def columns(self):
        return sorted({i for i, _ in self.entries})

    def column(self, i):
        return sorted(j for (ii, j) in self.entries if ii == i)

    def min_degree(self, i):
        col = self.column(i)
        if not col:
            raise DiagramError(f"column {i} is empty")
        return col[0]

    def max_degree(self, i):
        col = self.column(i)
        if not col:
            raise DiagramError(f"column {i} is empty")
        return col[-1]

    def generator_count(self):
        return sum((v for (i, _), v in self.entries.items() if i == 0), Fraction(0))

    def syzygy_count(self):
        return sum((v for (i, _), v in self.entries.items() if i == 1), Fraction(0))

    def shift(self, k):
        """Shift every internal degree by k."""
        return BettiDiagram({(i, j + k): v for (i, j), v in self.entries.items()})

    def dual(self):
        """Rotate by 180 degrees, then twist so column 0 starts in degree 0."""
        if not self.entries:
            return BettiDiagram()
        p = self.pdim()
        top = max(j for _, j in self.entries)
        rotated = {(p - i, top - j): v for (i, j), v in self.entries.items()}
        shift = min(j for (i, j) in rotated if i == 0)
        return BettiDiagram({(i, j - shift): v for (i, j), v in rotated.items()})

    # -- numerator, codimension, Hilbert data ---------------------------------

    def hilbert_numerator(self):
        """K-polynomial sum_{i,j} (-1)^i beta_{i,j} t^j as a degree -> coeff map."""
        poly = {}
        for (i, j), v in self.entries.items():
            poly[j] = poly.get(j, Fraction(0)) + (v if i % 2 == 0 else -v)
        return {j: c for j, c in poly.items() if c}

    def codimension(self):
        """Order of vanishing of the Hilbert numerator at t = 1."""
        poly = self.hilbert_numerator()
        if not poly:
            raise DiagramError("codimension of the zero numerator is undefined")
        lo = min(poly)
        coeffs = [poly.get(j, Fraction(0)) for j in range(lo, max(poly) + 1)]
        order = 0
        while sum(coeffs) == 0:
            # synthetic division by (1 - t)
            out = []
            acc = Fraction(0)
            for c in coeffs[:-1]:
                acc += c
                out.append(acc)
            coeffs = out
            order += 1
            if not coeffs:
                break
        return order

    def hilbert_function(self, n, t_max):
        """Hilbert function over an n-variable polynomial ring, degrees 0..t_max."""
        if n < 1:
            raise DiagramError("need at least one ring variable")
        values = []
        for t in range(t_max + 1):
            h = Fraction(0)
            for (i, j), v in self.entries.items():
                if t >= j:
                    h += (v if i % 2 == 0 else -v) * comb(t - j + n - 1, n - 1)
            values.append(h)
        if any(h.denominator != 1 for h in values):
            return HilbertFunction(values)
        return HilbertFunction([int(h) for h in values])

    def herzog_kuhl_defects(self, e):
        """The e alternating moment sums sum (-1)^i j^k beta_{i,j}, k = 0..e-1."""
        if e < 0:
            raise DiagramError("order of defects must be nonnegative")
        out = []
        for k in range(e):
            s = Fraction(0)
            for (i, j), v in self.entries.items():
                s += (v if i % 2 == 0 else -v) * j**k
            out.append(s)
        return out

    # -- text format -----------------------------------------------------------

    def format(self, comment=None):
        """Render in the bit-exact diagram text format."""
        if not self.entries:
            raise DiagramError("cannot format the empty diagram")
        p = self.pdim()
        j0 = min(j - i for (i, j) in self.entries)
        j1 = max(j - i for (i, j) in self.entries)
        lines = []
        if comment:
            lines.append(f"# {comment}")
        lines.append(f"betti p={p} j0={j0}")
        for r in range(j0, j1 + 1):
            row = []
            for i in range(p + 1):
                v = self.get(i, r + i)
                if not v:
                    row.append("-")
                elif v.denominator == 1:
                    row.append(str(v.numerator))
                else:
                    row.append(f"{v.numerator}/{v.denominator}")
            lines.append(" ".join(row))
        return "\n".join(lines) + "\n"

    def __repr__(self):
        items = ", ".join(f"{pos}: {v}" for pos, v in sorted(self.entries.items()))
        return f"BettiDiagram({{{items}}})"


def parse_diagram(text):
    """Inverse of BettiDiagram.format; raises DiagramError on malformed input."""
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise DiagramError("no data lines in diagram text")
    header = lines[0].split()
    if not header or header[0] != "betti":
        raise DiagramError(f"bad header line: {lines[0]!r}")
    fields = dict(tok.split("=", 1) for tok in header[1:] if "=" in tok)
    try:
        p = int(fields["p"])
        j0 = int(fields["j0"])
    except (KeyError, ValueError) as exc:
        raise DiagramError(f"bad header line: {lines[0]!r}") from exc
    if len(lines) < 2:
        raise DiagramError("no table rows after the header")
    entries = {}
    for r, line in enumerate(lines[1:], start=j0):
        toks = line.split()
        if len(toks) != p + 1:
            raise DiagramError(f"expected {p + 1} tokens, got {len(toks)}: {line!r}")
        for i, tok in enumerate(toks):
            if tok == "-":
                continue
            try:
                v = Fraction(tok)
            except (ValueError, ZeroDivisionError) as exc:
                raise DiagramError(f"bad entry {tok!r}") from exc
            if v < 0:
                raise DiagramError(f"negative entry {tok!r}")
            entries[(i, r + i)] = v
    return BettiDiagram(entries)


def diagram_from_rows(rows, j0=0):
    """Build a diagram from Betti-table rows (row r holds beta_{i, r+i}).

    Convenience for tests and fixtures; `rows` is a list of lists where
    None or 0 means an absent entry.
    """
    entries = {}
    for r, row in enumerate(rows, start=j0):
        for i, v in enumerate(row):
            if v:
                entries[(i, r + i)] = Fraction(v)
    return BettiDiagram(entries)
