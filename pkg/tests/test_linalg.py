from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from vermajet.linalg import (SparseMatrix, in_span, kernel_basis, rank, rref,
                             span_dim)


def test_identity_rref():
    m = SparseMatrix.from_rows([[1, 0], [0, 1]])
    result = rref(m)
    assert result.rank == 2
    assert result.pivots == [0, 1]
    assert result.reduced == m


def test_proportional_rows():
    m = SparseMatrix.from_rows([[1, 2], [2, 4]])
    assert rank(m) == 1


def test_sl2_cubic_action_rows():
    # Rows: {v, E12.v, H1.v, E21.v} on v = e1^3, in coordinates over
    # (e1^3, e1^2 e2).  By the Leibniz rule: E12.v = 0, H1.v = 3v,
    # E21.v = 3 e1^2 e2.
    m = SparseMatrix.from_rows([[1, 0], [0, 0], [3, 0], [0, 3]])
    assert rref(m).rank == 2


def test_kernel_identity_empty():
    m = SparseMatrix.from_rows([[1, 0], [0, 1]])
    assert kernel_basis(m) == []


def test_kernel_single_relation():
    m = SparseMatrix.from_rows([[1, 1]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    x, y = basis[0]
    assert x == -y != 0


def test_kernel_of_sl2_evaluation():
    # Columns: {1, E12, E21, H1} applied to e1^3; rows: ambient coordinates
    # (e1^3, e1^2 e2, e1 e2^2, e2^3).  The kernel encodes the annihilator:
    # E12 and H1 - 3*1.
    m = SparseMatrix.from_rows([
        [1, 0, 0, 3],
        [0, 0, 3, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 0],
    ])
    basis = kernel_basis(m)
    assert len(basis) == 2
    for vec in basis:
        assert all(v == 0 for v in m.matvec(vec))
    assert in_span(basis, (0, 1, 0, 0))
    assert in_span(basis, (-3, 0, 0, 1))


def test_span_dim_empty():
    assert span_dim([]) == 0


def test_span_dim_plane():
    assert span_dim([(1, 0), (0, 1), (1, 1)]) == 2


def test_span_dim_chart_polynomials():
    # The six 2x2 minors of [[I],[T]] on Gr(2,4), as coefficient vectors over
    # the monomials (1, t31, t32, t41, t42, t31*t42, t32*t41):
    # p12=1, p13=t32, p14=t42, p23=-t31, p24=-t41, p34=t31*t42-t32*t41.
    vectors = [
        (1, 0, 0, 0, 0, 0, 0),
        (0, 0, 1, 0, 0, 0, 0),
        (0, 0, 0, 0, 1, 0, 0),
        (0, -1, 0, 0, 0, 0, 0),
        (0, 0, 0, -1, 0, 0, 0),
        (0, 0, 0, 0, 0, 1, -1),
    ]
    assert span_dim(vectors) == 6


_entries = st.fractions(min_value=-10, max_value=10, max_denominator=4)


@st.composite
def _matrices(draw):
    rows = draw(st.integers(min_value=1, max_value=5))
    cols = draw(st.integers(min_value=1, max_value=5))
    data = draw(st.lists(
        st.lists(_entries, min_size=cols, max_size=cols),
        min_size=rows, max_size=rows))
    return SparseMatrix.from_rows(data)


@settings(max_examples=60, deadline=None)
@given(_matrices())
def test_rank_equals_rank_of_transpose(m):
    assert rank(m) == rank(m.transpose())


@settings(max_examples=60, deadline=None)
@given(_matrices())
def test_rank_nullity(m):
    basis = kernel_basis(m)
    assert rank(m) + len(basis) == m.cols
    for vec in basis:
        assert all(v == 0 for v in m.matvec(vec))
    assert span_dim(basis, m.cols) == len(basis)


@settings(max_examples=60, deadline=None)
@given(_matrices())
def test_rref_idempotent(m):
    first = rref(m)
    second = rref(first.reduced)
    assert second.rank == first.rank
    assert second.pivots == first.pivots
    assert second.reduced == first.reduced


def test_kernel_of_empty_matrix():
    m = SparseMatrix(0, 3, {})
    assert len(kernel_basis(m)) == 3


def test_entries_validated():
    import pytest
    with pytest.raises(ValueError):
        SparseMatrix(1, 1, {(1, 0): Fraction(1)})
