"""Matrix algebra: products, brackets, Kronecker products, predicates."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_bracket, naive_matmul
from triality.clifford import I2, SIGMA_X, SIGMA_Y, SIGMA_Z
from triality.errors import DimensionMismatch
from triality.field import ExactScalar, I, ONE, ZERO
from triality.matrix import Matrix, commutator, kron
from triality.representations import vector_basis

small_fractions = st.fractions(min_value=-2, max_value=2, max_denominator=2)
scalars = st.builds(ExactScalar, st.tuples(*([small_fractions] * 8)))


def sparse_matrix(n, entries=4):
    return st.lists(
        st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), scalars),
        min_size=1, max_size=entries,
    ).map(lambda items: Matrix.from_entries(
        n, {(i, j): v for i, j, v in items}))


def test_commutator_of_equal_arguments_vanishes():
    v = vector_basis()
    m = v[(2, 5)]
    assert commutator(m, m).is_zero


def test_bracket_v01_v12_is_v02_against_naive_oracle():
    v = vector_basis()
    got = commutator(v[(0, 1)], v[(1, 2)])
    oracle = naive_bracket(v[(0, 1)], v[(1, 2)])
    assert got == oracle
    assert got == v[(0, 2)]


def test_matmul_matches_naive_oracle_on_vector_generators():
    v = vector_basis()
    a, b = v[(1, 4)], v[(4, 7)]
    assert (a @ b) == naive_matmul(a, b)


def test_kron_identities():
    assert kron(I2, Matrix.identity(4)) == Matrix.identity(8)
    expected = Matrix.diag([1, 1, 1, 1, -1, -1, -1, -1])
    assert kron(SIGMA_Z, Matrix.identity(4)) == expected


def test_kron_reproduces_a_clifford_generator():
    from triality.clifford import cl7_basis, dirac_gammas
    d = dirac_gammas()
    g5 = kron(SIGMA_X, d.gamma5 @ d.gammas[2])
    assert g5 == cl7_basis().gammas[4]


def test_dimension_mismatch_raises():
    with pytest.raises(DimensionMismatch):
        commutator(Matrix.identity(4), Matrix.identity(8))


def test_pauli_predicates():
    assert SIGMA_X.is_hermitian and SIGMA_Y.is_hermitian
    assert SIGMA_Y.is_unitary
    assert not SIGMA_Y.is_real
    assert SIGMA_X.is_real and SIGMA_X.is_symmetric
    assert (SIGMA_Y.scale(I)).is_antisymmetric


def test_trace_and_dagger():
    m = Matrix(((I, ONE), (ZERO, -I)))
    assert m.trace() == ZERO
    assert m.dagger()[0, 0] == -I
    assert m.dagger()[1, 0] == ONE


@given(sparse_matrix(8), sparse_matrix(8), sparse_matrix(8))
@settings(max_examples=25, deadline=None)
def test_jacobi_identity(a, b, c):
    total = (commutator(a, commutator(b, c))
             + commutator(b, commutator(c, a))
             + commutator(c, commutator(a, b)))
    assert total.is_zero


@given(sparse_matrix(3), sparse_matrix(3))
@settings(max_examples=25, deadline=None)
def test_matmul_agrees_with_definition(a, b):
    assert (a @ b) == naive_matmul(a, b)
