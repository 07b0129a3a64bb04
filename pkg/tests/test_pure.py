"""Unit tests for pure diagrams and the prime family."""

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from betticone import (
    BettiDiagram,
    DiagramError,
    is_pure_multiple,
    normalized_pure,
    prime_family,
    pure_diagram,
)


def test_normalized_pure_closed_form():
    # beta_i = prod_{k != 0} |d_k - d_0| / prod_{k != i} |d_i - d_k|, beta_0 = 1
    d = (0, 2, 3, 7)
    bar = normalized_pure(d)
    D = bar.diagram()
    assert D.get(0, 0) == 1
    for i, di in enumerate(d):
        expect = Fraction(1)
        for k, dk in enumerate(d):
            if k != 0:
                expect *= abs(dk - d[0])
            if k != i:
                expect /= abs(di - dk)
        assert D.get(i, di) == expect


def test_pure_diagram_is_first_lattice_point():
    for d in [(0, 1, 3, 4), (0, 2, 3, 7), (1, 2, 4), (0, 5)]:
        P = pure_diagram(d).diagram
        assert P.is_integral()
        values = [P.get(i, j).numerator for (i, j) in sorted(P.entries)]
        assert gcd(*values) == 1
        assert len(P.entries) == len(d)
        assert [P.min_degree(i) for i in P.columns()] == list(d)


def test_pure_diagram_degree_shift():
    base = pure_diagram((0, 1, 3, 4)).diagram
    assert pure_diagram((2, 3, 5, 6)).diagram == base.shift(2)


def test_herzog_kuhl_defects_vanish():
    for d in [(0, 1, 3, 4), (0, 2, 5), (0, 3, 4, 6, 7)]:
        P = pure_diagram(d).diagram
        assert P.herzog_kuhl_defects(len(d) - 1) == [0] * (len(d) - 1)


def test_is_pure_multiple():
    P = pure_diagram((0, 1, 3, 4)).diagram
    assert is_pure_multiple(P)
    assert is_pure_multiple(P.scale(Fraction(5, 3)))
    assert not is_pure_multiple(P + pure_diagram((0, 2, 3, 4)).diagram)
    assert not is_pure_multiple(BettiDiagram({(0, 0): 1, (0, 1): 1, (1, 2): 1}))


def test_degenerate_inputs_rejected():
    with pytest.raises(DiagramError):
        pure_diagram((0, 0, 1))
    with pytest.raises(DiagramError):
        pure_diagram(())


def test_prime_family_shape():
    # Degrees (0, 1, P+1, ..., 2P), normalized so the multiplier is explicit.
    for P in (2, 3, 5, 7):
        F = prime_family(P, c=P)
        assert F.columns() == list(range(P + 2))
        assert F.min_degree(0) == 0 and F.min_degree(1) == 1
        assert F.min_degree(2) == P + 1 and F.max_degree(P + 1) == 2 * P
        assert prime_family(P, c=2 * P) == 2 * F


def test_prime_family_integrality_threshold():
    # The smallest integral multiple of the normalized table is c = P.
    for P in (2, 3, 5):
        assert prime_family(P, 1).is_integral()
        assert prime_family(P, 1).get(1, 1) == 2
        denominators = {
            c for c in range(1, P + 1) if not prime_family(P, c).is_integral()
        }
        assert P not in denominators


@given(st.sets(st.integers(0, 12), min_size=2, max_size=6))
def test_alternating_sum_of_normalized_pure_vanishes(degrees):
    d = tuple(sorted(degrees))
    D = normalized_pure(d).diagram()
    total = sum(
        (v if i % 2 == 0 else -v) for (i, _), v in D.entries.items()
    )
    assert total == 0
