"""RREF, kernels, subspaces, and the structure-constant solver."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cofactor_det, matrix_in_span, naive_rank
from triality.errors import LinearlyDependent, NotClosed
from triality.field import ONE, ZERO, rational
from triality.linalg import (CoordSolver, Subspace, det, is_closed,
                             kernel_basis, rref, rref_kernel,
                             structure_constants)
from triality.matrix import Matrix, commutator
from triality.representations import vector_basis
from triality.subalgebras import g2_basis

fractions = st.fractions(min_value=-3, max_value=3, max_denominator=3)


def test_kernel_of_identity_is_trivial():
    rows = Matrix.identity(8).rows
    assert rref_kernel(rows).dim == 0


def test_kernel_of_zero_map_is_everything():
    rows = [[ZERO] * 5 for _ in range(3)]
    assert rref_kernel(rows, 5).dim == 5


def test_rref_pivots_are_deterministic_and_normalized():
    rows = [[rational(0), rational(2), rational(4)],
            [rational(0), rational(1), rational(3)]]
    red, pivots = rref(rows)
    assert pivots == (1, 2)
    assert red[0][1] == ONE and red[1][2] == ONE
    assert red[0][2] == ZERO  # fully reduced above and below


@given(st.lists(st.lists(fractions, min_size=4, max_size=4),
                min_size=1, max_size=5))
@settings(max_examples=40, deadline=None)
def test_rref_is_idempotent(rows):
    rows = [[rational(x) for x in row] for row in rows]
    red, _ = rref(rows)
    again, _ = rref(list(red))
    assert again == red


@given(st.lists(st.lists(fractions, min_size=5, max_size=5),
                min_size=2, max_size=5))
@settings(max_examples=40, deadline=None)
def test_rank_plus_nullity(rows):
    rows = [[rational(x) for x in row] for row in rows]
    red, pivots = rref(rows)
    assert len(red) + len(kernel_basis(rows, 5)) == 5
    assert len(red) == naive_rank(rows)


def test_vector_basis_structure_constants_close_and_antisymmetric():
    gens = vector_basis().matrices()
    f = structure_constants(gens)
    assert f.size == 28
    for (a, b, c), val in f.entries.items():
        assert f[(b, a, c)] == -val


def test_structure_constants_rejects_dependent_input():
    v = vector_basis()
    gens = [v[(0, 1)], v[(0, 2)], v[(0, 1)] + v[(0, 2)]]
    with pytest.raises(LinearlyDependent):
        structure_constants(gens)


def test_not_closed_reports_the_offending_pair():
    v = vector_basis()
    with pytest.raises(NotClosed) as err:
        structure_constants([v[(0, 1)], v[(1, 2)]])
    assert (err.value.a, err.value.b) == (0, 1)
    assert not err.value.residual.is_zero


def test_lambda_commutator_stays_in_su3_span_by_rref_oracle():
    g2 = g2_basis()
    bracket = commutator(g2[1], g2[8])
    assert matrix_in_span(list(g2.su3_part()), bracket)


def test_coord_solver_round_trip():
    gens = vector_basis().matrices()
    solver = CoordSolver(gens)
    target = gens[3].scale(rational(2)) - gens[17]
    coeffs = solver.solve(target)
    rebuilt = Matrix.zero(8)
    for c, g in zip(coeffs, gens):
        if c._nz:
            rebuilt = rebuilt + g.scale(c)
    assert rebuilt == target
    outside = Matrix.identity(8)
    assert solver.solve(outside) is None


def test_subspace_intersection_is_idempotent():
    gens = vector_basis().matrices()[:5]
    s = Subspace.from_matrices(gens)
    assert s.intersection(s) == s


def test_det_matches_cofactor_oracle():
    from triality.subalgebras import su3_transform
    u = su3_transform()
    assert det(u) == cofactor_det(u)
    assert det(Matrix.identity(5)) == ONE
    assert det(Matrix.zero(3)) == ZERO


def test_is_closed():
    v = vector_basis()
    assert is_closed(v.matrices())
    assert not is_closed([v[(0, 1)], v[(1, 2)]])
