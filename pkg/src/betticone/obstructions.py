"""Certificates that a virtual Betti diagram is not the diagram of any module.

The checks fall into three groups: Buchsbaum-Rim comparisons (second-syzygy,
codimension, and regularity inequalities, plus synthesis of the Buchsbaum-Rim
Betti table itself), the codimension-3 maximal-minor inequality with rank
bounds inferred from compression-space analysis, and exact deciders for
projective dimension 1 and for level diagrams of projective dimension 2.
Because the maximal-minor inequality is only valid for indecomposable
presentations, `battery` promotes it through `split_search`, which verifies
that every way of writing the diagram as a sum of lattice diagrams leads to an
obstructed summand.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .diagram import BettiDiagram, DiagramError
from .fan import PureDecomposition, in_cone, in_lattice
from .pure import pure_diagram

SECOND_SYZYGY = "SecondSyzygy"
CODIM_TOO_FEW = "CodimTooFew"
CODIM_EQUALITY_MISMATCH = "CodimEqualityMismatch"
REGULARITY = "Regularity"
MAXIMAL_MINOR = "MaximalMinor"
E_ALPHA_FAMILY = "EAlphaFamily"

OBSTRUCTED = "Obstructed"
NO_OBSTRUCTION_FOUND = "NoObstructionFound"

ALL_SPLITS_OBSTRUCTED = "AllSplitsObstructed"
UNRESOLVED_SPLIT_EXISTS = "UnresolvedSplitExists"
UNRESOLVED = "Unresolved"

#: Default cap on the entry sum of a diagram fed to the split enumeration.
SPLIT_SEARCH_CAP = 64

#: The level-module concavity condition is tested for i = 1 .. d2 + this
#: offset (one constant isolates the ambiguous endpoint of the index range).
LEVEL_RANGE_END_OFFSET = -2


class NotApplicable(Exception):
    """The check's hypotheses do not hold for this diagram."""


@dataclass(frozen=True)
class Finding:
    """One violated inequality: lhs/rhs re-evaluate to the violation."""

    kind: str
    applied_to: str
    lhs: object
    rhs: object
    note: str = ""


@dataclass(frozen=True)
class ObstructionReport:
    findings: tuple
    notes: tuple = ()

    @property
    def verdict(self):
        return OBSTRUCTED if self.findings else NO_OBSTRUCTION_FOUND

    def kinds(self):
        return {f.kind for f in self.findings}


@dataclass(frozen=True)
class RankBounds:
    """Lower bounds for the ranks of the linear first and last maps."""

    tau_min: int
    mu_min: int
    assumptions: tuple = ("indecomposable", "no_koszul_summand")


# ---------------------------------------------------------------------------
# Shared preconditions


def _as_count(v, what):
    if v.denominator != 1 or v < 0:
        raise NotApplicable(f"{what} {v} is not a nonnegative integer")
    return int(v)


def _normalize_generated(D):
    """Shift so that the single generator degree is 0."""
    if not D:
        raise NotApplicable("empty diagram")
    col = D.column(0)
    if len(col) != 1:
        raise NotApplicable("diagram is not generated in a single degree")
    return D.shift(-col[0])


def syzygy_degrees(D):
    """The multiset {j_ell} of first-syzygy degrees, sorted ascending."""
    D0 = _normalize_generated(D)
    out = []
    for j in D0.column(1):
        out.extend([j] * _as_count(D0.get(1, j), "first Betti number"))
    return out


def cm_consistent(D):
    """All Herzog-Kuhl defects through codimension - 1 vanish."""
    try:
        e = D.codimension()
    except DiagramError:
        return False
    return all(s == 0 for s in D.herzog_kuhl_defects(e))


# ---------------------------------------------------------------------------
# Buchsbaum-Rim checks


def second_syzygy_check(D, applied_to="D"):
    """Finding if the minimal second-syzygy degree exceeds sum of a+1 smallest j."""
    D0 = _normalize_generated(D)
    e = D0.codimension()
    if e < 2:
        raise NotApplicable("codimension < 2")
    if D0.pdim() < 2:
        raise NotApplicable("no second syzygies")
    a = _as_count(D0.generator_count(), "generator count")
    js = syzygy_degrees(D0)
    if len(js) < e + a - 1:
        # with too few first syzygies the diagram is already codimension
        # obstructed and the Buchsbaum-Rim second syzygy need not be minimal
        raise NotApplicable("fewer than e + a - 1 first syzygies")
    lhs = D0.min_degree(2)
    rhs = sum(js[: a + 1])
    if lhs > rhs:
        return Finding(SECOND_SYZYGY, applied_to, lhs, rhs)
    return None


def buchsbaum_rim_table(a, degrees):
    """Betti table of the Buchsbaum-Rim complex on a map S(-j_1)+...+S(-j_b) -> S^a."""
    degrees = tuple(sorted(degrees))
    b = len(degrees)
    if a < 1:
        raise DiagramError("target rank must be positive")
    if b <= a:
        raise DiagramError(f"need more than {a} presentation degrees, got {b}")
    # counts[k][j] = number of k-element submultisets of {j_ell} with sum j
    counts = [{0: 1}] + [{} for _ in range(b)]
    for d in degrees:
        for k in range(b - 1, -1, -1):
            for j, n in counts[k].items():
                counts[k + 1][j + d] = counts[k + 1].get(j + d, 0) + n
    entries = {(0, 0): Fraction(a)}
    for j in degrees:
        entries[(1, j)] = entries.get((1, j), Fraction(0)) + 1
    for i in range(2, b - a + 2):
        factor = comb(a + i - 3, i - 2)
        for j, n in counts[a + i - 1].items():
            entries[(i, j)] = Fraction(factor * n)
    return BettiDiagram(entries)


def codimension_check(D, applied_to="D"):
    """Finding if b < e + a - 1, or if equality holds but the table is wrong."""
    D0 = _normalize_generated(D)
    e = D0.codimension()
    if e < 2:
        raise NotApplicable("codimension < 2")
    a = _as_count(D0.generator_count(), "generator count")
    js = syzygy_degrees(D0)
    b = len(js)
    if b < e + a - 1:
        return Finding(CODIM_TOO_FEW, applied_to, b, e + a - 1)
    if b == e + a - 1:
        table = buchsbaum_rim_table(a, js)
        if D0 != table:
            (i, j) = min(
                pos
                for pos in set(D0.entries) | set(table.entries)
                if D0.get(*pos) != table.get(*pos)
            )
            return Finding(
                CODIM_EQUALITY_MISMATCH,
                applied_to,
                D0.get(i, j),
                table.get(i, j),
                note=f"entry ({i},{j}) of the Buchsbaum-Rim table",
            )
    return None


def regularity_check(D, applied_to="D"):
    """Finding if the top degree in column e exceeds the e+a-1 largest j (CM only)."""
    D0 = _normalize_generated(D)
    e = D0.codimension()
    if e < 2:
        raise NotApplicable("codimension < 2")
    if not cm_consistent(D0) or D0.pdim() != e:
        raise NotApplicable("diagram is not Cohen-Macaulay-consistent")
    a = _as_count(D0.generator_count(), "generator count")
    js = syzygy_degrees(D0)
    if len(js) <= e + a - 1:
        # with b = e + a - 1 the whole diagram is pinned down by the
        # Buchsbaum-Rim table comparison; with b < e + a - 1 it is already
        # codimension obstructed
        raise NotApplicable("at most e + a - 1 first syzygies")
    lhs = D0.max_degree(e)
    rhs = sum(js[len(js) - (e + a - 1) :])
    if lhs > rhs:
        return Finding(REGULARITY, applied_to, lhs, rhs)
    return None


# ---------------------------------------------------------------------------
# The codimension-3 maximal-minor obstruction


def _two_row_shape(D):
    """Entries (a, b, c, d, b', c', d') of a two-row diagram generated in degree 0."""
    D0 = _normalize_generated(D)
    for (i, j), v in D0.entries.items():
        if j - i not in (0, 1) or i > 3:
            raise NotApplicable("not a diagram with two rows and at most 4 columns")
        _as_count(v, "entry")
    return tuple(
        int(D0.get(i, j))
        for i, j in [(0, 0), (1, 1), (2, 2), (3, 3), (1, 2), (2, 3), (3, 4)]
    )


def _compression_infeasible(rows, cols, rho, s):
    """Is the rank-rho compression shape with s low rows impossible?

    The shape forces a (rows-s) x (cols-(rho-s)) zero block.  It is ruled out
    when the block spans a full row or column (the matrix would decompose) or
    when more than 3s independent columns would be supported on s rows of
    linear forms in 3 variables.
    """
    zero_rows = rows - s
    zero_cols = cols - (rho - s)
    if zero_rows <= 0 or zero_cols <= 0:
        return False
    if zero_cols == cols or zero_rows == rows:
        return True
    return zero_cols > 3 * s


def _min_rank(rows, cols):
    """Lower bound for the rank of an indecomposable rows x cols matrix of
    linear forms in 3 variables, via compression-space elimination."""
    if rows == 0 or cols == 0:
        return 0
    cap = min(rows, cols)
    bound = 2 if rows >= 2 and cols >= 3 else 1
    for rho in range(bound, cap):
        if rho > 3:
            # the compression classification is only applied through rank 3
            break
        if all(_compression_infeasible(rows, cols, rho, s) for s in range(rho + 1)):
            bound = rho + 1
        else:
            break
    return bound


def infer_rank_bounds(D):
    """Rank bounds for the linear strand maps of a two-row codimension-3 diagram."""
    a, b, c, d, bp, cp, dp = _two_row_shape(D)
    if d != 0:
        raise NotApplicable("beta_{3,3} != 0: a Koszul complex splits off")
    return RankBounds(tau_min=_min_rank(a, b), mu_min=_min_rank(dp, cp))


def maximal_minor_check(D, bounds=None, applied_to="D"):
    """Finding if b' - a + tau + mu > c' (valid for indecomposable presentations)."""
    a, b, c, d, bp, cp, dp = _two_row_shape(D)
    if d != 0:
        raise NotApplicable("beta_{3,3} != 0: a Koszul complex splits off")
    if D.codimension() != 3:
        raise NotApplicable("codimension != 3")
    if bounds is None:
        bounds = infer_rank_bounds(D)
    lhs = bp - a + bounds.tau_min + bounds.mu_min
    if lhs > cp:
        return Finding(
            MAXIMAL_MINOR,
            applied_to,
            lhs,
            cp,
            note=f"tau >= {bounds.tau_min}, mu >= {bounds.mu_min}",
        )
    return None


def e_alpha_check(D, applied_to="D"):
    """Finding if D is literally (2+a, 3, 2, - ; -, 5+6a, 7+8a, 3+3a) for some a >= 0."""
    alpha = D.get(0, 0) - 2
    if alpha < 0 or alpha.denominator != 1:
        return None
    alpha = int(alpha)
    if D == e_alpha(alpha):
        return Finding(E_ALPHA_FAMILY, applied_to, alpha, alpha, note="family parameter")
    return None


def e_alpha(alpha):
    """The diagram (2+a, 3, 2, - ; -, 5+6a, 7+8a, 3+3a)."""
    if alpha < 0:
        raise DiagramError("the family is indexed by nonnegative integers")
    return BettiDiagram(
        {
            (0, 0): 2 + alpha,
            (1, 1): 3,
            (2, 2): 2,
            (1, 2): 5 + 6 * alpha,
            (2, 3): 7 + 8 * alpha,
            (3, 4): 3 + 3 * alpha,
        }
    )


# ---------------------------------------------------------------------------
# Split search


@dataclass(frozen=True)
class SplitSearchResult:
    verdict: str
    witness: tuple = None


def leaf_obstructed(D):
    """Would D be obstructed as the diagram of a single indecomposable module?"""
    sides = [(D, "D")]
    if cm_consistent(D):
        sides.append((D.dual(), "dual(D)"))
    for side, _ in sides:
        for check in (
            second_syzygy_check,
            codimension_check,
            regularity_check,
            e_alpha_check,
        ):
            try:
                if check(side) is not None:
                    return True
            except NotApplicable:
                continue
    try:
        if maximal_minor_check(D) is not None:
            return True
    except NotApplicable:
        pass
    return False


def _splits(D):
    """All unordered pairs (D1, D2) of nonzero lattice diagrams with D1 + D2 = D."""
    items = sorted(D.entries.items())
    positions = [pos for pos, _ in items]
    maxes = [int(v) for _, v in items]
    for combo in product(*(range(m + 1) for m in maxes)):
        rest = tuple(m - c for m, c in zip(maxes, combo))
        if not any(combo) or not any(rest) or combo > rest:
            continue
        d1 = BettiDiagram(dict(zip(positions, combo)))
        if not in_cone(d1):
            continue
        d2 = BettiDiagram(dict(zip(positions, rest)))
        if in_cone(d2):
            yield d1, d2


def split_search(D, leaf_test=None, cap=SPLIT_SEARCH_CAP):
    """Decide whether every decomposition of D ends in an obstructed summand.

    A summand with no nontrivial lattice split is a leaf and fails iff
    leaf_test holds (under the indecomposability assumption); a composite
    summand fails iff every split has a failing side.  Exceeding the entry-sum
    cap yields Unresolved, never a false AllSplitsObstructed.
    """
    if not D or not in_lattice(D):
        raise DiagramError("split search needs a nonzero lattice diagram")
    if leaf_test is None:
        leaf_test = leaf_obstructed
    if sum(D.entries.values()) > cap:
        return SplitSearchResult(UNRESOLVED)
    memo = {}

    def bad(E):
        if E in memo:
            return memo[E]
        if not leaf_test(E):
            memo[E] = False
            return False
        result = all(bad(e1) or bad(e2) for e1, e2 in _splits(E))
        memo[E] = result
        return result

    if bad(D):
        return SplitSearchResult(ALL_SPLITS_OBSTRUCTED)
    for d1, d2 in _splits(D):
        if not bad(d1) and not bad(d2):
            return SplitSearchResult(UNRESOLVED_SPLIT_EXISTS, witness=(d1, d2))
    return SplitSearchResult(UNRESOLVED_SPLIT_EXISTS)


# ---------------------------------------------------------------------------
# The battery


def battery(D, split_search_enabled=True, cap=SPLIT_SEARCH_CAP):
    """Run every applicable check on D (and on its dual when CM-consistent)."""
    findings = []
    notes = []
    sides = [(D, "D")]
    if cm_consistent(D):
        sides.append((D.dual(), "dual(D)"))
    else:
        notes.append("dual checks skipped: not Cohen-Macaulay-consistent")
    for side, label in sides:
        for check in (
            second_syzygy_check,
            codimension_check,
            regularity_check,
            e_alpha_check,
        ):
            try:
                finding = check(side, applied_to=label)
            except NotApplicable as exc:
                notes.append(f"{check.__name__} skipped on {label}: {exc}")
                continue
            if finding is not None:
                findings.append(finding)
    try:
        finding = maximal_minor_check(D)
    except NotApplicable as exc:
        finding = None
        notes.append(f"maximal_minor_check skipped on D: {exc}")
    if finding is not None:
        if not split_search_enabled:
            notes.append("maximal-minor finding not promoted: split search disabled")
        elif not in_lattice(D):
            notes.append("maximal-minor finding not promoted: not a lattice diagram")
        else:
            result = split_search(D, cap=cap)
            if result.verdict == ALL_SPLITS_OBSTRUCTED:
                findings.append(finding)
            else:
                notes.append(
                    f"maximal-minor finding not promoted: split search {result.verdict}"
                )
    return ObstructionReport(tuple(findings), tuple(notes))


# ---------------------------------------------------------------------------
# Exact deciders for small projective dimension


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    decomposition: PureDecomposition = None
    reason: str = ""


def pd1_decide(D):
    """Decide membership for integral diagrams of projective dimension <= 1.

    Sort generator degrees alpha and syzygy degrees gamma ascending; the
    diagram is realizable iff the counts agree and alpha_i + 1 <= gamma_i for
    all i, in which case it is the sum of the pure diagrams pi_(alpha_i, gamma_i).
    """
    if not D:
        raise DiagramError("empty diagram")
    if D.pdim() > 1 or not D.is_integral():
        raise DiagramError("need an integral diagram of projective dimension <= 1")
    if any(v < 0 for v in D.entries.values()):
        raise DiagramError("negative entry")
    alphas = []
    gammas = []
    for (i, j), v in sorted(D.entries.items()):
        (alphas if i == 0 else gammas).extend([j] * int(v))
    if len(alphas) != len(gammas):
        return MembershipVerdict(
            False, reason=f"{len(alphas)} generators vs {len(gammas)} syzygies"
        )
    for al, ga in zip(alphas, gammas):
        if al + 1 > ga:
            return MembershipVerdict(False, reason=f"generator degree {al} has no syzygy after it")
    terms = PureDecomposition([(1, (al, ga)) for al, ga in zip(alphas, gammas)])
    return MembershipVerdict(True, decomposition=terms)


def level_decide(D, n=2):
    """Decide membership for level diagrams of projective dimension <= 2.

    The Hilbert function over n = 2 variables must satisfy
    h_{i-1} - 2 h_i + h_{i+1} <= 0 for i = 1 .. d2 - 2, where d2 is the single
    top-column degree.  Diagrams of projective dimension < 2 satisfy the
    condition vacuously.
    """
    if not D:
        raise DiagramError("empty diagram")
    D0 = D.shift(-D.min_degree(0))
    if D0.column(0) != [0]:
        raise DiagramError("diagram is not generated in a single degree")
    if D0.pdim() > 2:
        raise DiagramError("projective dimension exceeds 2")
    if D0.pdim() < 2:
        return MembershipVerdict(True)
    col = D0.column(2)
    if len(col) != 1:
        raise DiagramError("socle column is not concentrated in a single degree")
    d2 = col[0]
    last = d2 + LEVEL_RANGE_END_OFFSET
    h = D0.hilbert_function(n, last + 1)
    for i in range(1, last + 1):
        if h[i - 1] - 2 * h[i] + h[i + 1] > 0:
            return MembershipVerdict(
                False, reason=f"Hilbert function is not concave at degree {i}"
            )
    return MembershipVerdict(True)


# ---------------------------------------------------------------------------
# Recorded facts (membership established by arguments outside this toolkit)


@dataclass(frozen=True)
class RecordedFact:
    diagram: BettiDiagram
    in_semigroup: bool
    source: str


_D2 = BettiDiagram({(0, 0): 2, (1, 1): 4, (2, 2): 3, (1, 2): 3, (2, 3): 4, (3, 4): 2})

RECORDED_FACTS = (
    RecordedFact(2 * _D2, True, "direct sum of a square of the maximal ideal and its twisted dual"),
    RecordedFact(3 * _D2, False, "linear-strand case analysis over three variables"),
)


def recorded_fact(D):
    """A hand-established membership fact about D, if one is on record."""
    for fact in RECORDED_FACTS:
        if fact.diagram == D:
            return fact
    return None
