"""Unit tests for exact integer linear algebra and semigroup generators."""

from fractions import Fraction
from math import prod

from hypothesis import given, settings, strategies as st

from betticone import (
    BettiDiagram,
    DegreeWindow,
    brute_force_generators,
    determinant,
    enumerate_chains,
    generator_bound,
    hilbert_basis,
    minimal_antichain,
    phi_matrix,
    pure_diagram,
    semigroup_generators,
    smith_normal_form,
    universal_denominator,
)

from conftest import CHAIN_3COL, PHI_3COL, WINDOW_3COL


square_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n
    )
)


@given(square_matrices)
@settings(max_examples=100)
def test_smith_normal_form_properties(A):
    divisors = smith_normal_form(A)
    assert len(divisors) == len(A)
    for a, b in zip(divisors, divisors[1:]):
        if a:
            assert b % a == 0
        else:
            assert b == 0
    assert abs(determinant(A)) == prod(divisors)


def test_smith_normal_form_known_values():
    assert smith_normal_form([[2, 4], [6, 8]]) == [2, 4]
    assert smith_normal_form([[1, 0], [0, 0]]) == [1, 0]
    assert smith_normal_form(PHI_3COL) == [1, 1, 1, 2, 12]


def test_determinant_known_values():
    assert determinant([[2]]) == 2
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant(PHI_3COL) == 24 or determinant(PHI_3COL) == -24


def test_phi_matrix_and_denominator():
    assert phi_matrix(CHAIN_3COL, WINDOW_3COL) == PHI_3COL
    assert universal_denominator(CHAIN_3COL, WINDOW_3COL) == 12
    assert generator_bound(CHAIN_3COL, WINDOW_3COL) == 28


def test_hilbert_basis_small_systems():
    # x - y = 0 over N^2: the diagonal generator.
    assert hilbert_basis([[1, -1]]) == [(1, 1)]
    # x + y - z = 0: two generators.
    assert hilbert_basis([[1, 1, -1]]) == [(0, 1, 1), (1, 0, 1)]
    # 2x - 3y = 0: primitive solution (3, 2).
    assert hilbert_basis([[2, -3]]) == [(3, 2)]
    # Empty system: no columns at all.
    assert hilbert_basis([]) == []
    # Infeasible apart from zero.
    assert hilbert_basis([[1, 1]]) == []


def test_hilbert_basis_solutions_are_minimal():
    A = [[1, 2, -2, 0], [0, 1, 1, -2]]
    basis = hilbert_basis(A)
    assert basis
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in A)
    assert minimal_antichain(basis) == sorted(basis)


def test_minimal_antichain():
    vs = [(1, 0), (0, 1), (1, 1), (2, 0), (0, 3)]
    assert minimal_antichain(vs) == sorted([(1, 0), (0, 1)])


def test_semigroup_generators_witnesses():
    gens = semigroup_generators(CHAIN_3COL, WINDOW_3COL)
    assert gens.denominator == 12
    assert len(gens) == 14
    pures = [pure_diagram(d).diagram for d in CHAIN_3COL.sequences]
    for diagram, witness in gens:
        assert len(witness) == len(pures)
        rebuilt = BettiDiagram()
        for a, p in zip(witness, pures):
            rebuilt = rebuilt + p.scale(a)
        assert rebuilt.scale(Fraction(1, 12)) == diagram


def test_hilbert_basis_solves_the_worked_doubled_system():
    # The full [-12*I | Phi] system has 14 minimal solutions with nonzero
    # a-part, matching the specialized congruence path inside
    # semigroup_generators.
    m = 12
    rows = len(PHI_3COL)
    system = [
        [-m if c == r else 0 for c in range(rows)] + PHI_3COL[r] for r in range(rows)
    ]
    basis = hilbert_basis(system)
    a_parts = sorted({v[rows:] for v in basis if any(v[rows:])})
    gens = semigroup_generators(CHAIN_3COL, WINDOW_3COL)
    assert a_parts == sorted(a for _, a in gens)
    for v in basis:
        b, a = v[:rows], v[rows:]
        assert all(
            m * b[r] == sum(PHI_3COL[r][l] * a[l] for l in range(len(a)))
            for r in range(rows)
        )


def test_brute_force_matches_on_tiny_window():
    w = DegreeWindow((0, 1), (0, 2))
    for chain in enumerate_chains(w):
        m = universal_denominator(chain, w)
        fast = semigroup_generators(chain, w)
        slow = brute_force_generators(chain, w, cap=m)
        assert set(fast.diagrams()) == set(slow.diagrams())
