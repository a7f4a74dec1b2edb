from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superalg.errors import ShapeError
from superalg.linalg import Matrix, SubspaceBasis, sparse_kernel

from _oracles import gauss_rank, mat_vec

F = Fraction


def M(rows):
    return Matrix.from_rows(rows)


class TestRank:
    def test_identity(self):
        assert Matrix.identity(2).rank() == 2

    def test_zero(self):
        assert Matrix.zeros(2, 2).rank() == 0

    def test_rank_one(self):
        # hand row-reduction: R2 -> R2 - 2*R1 gives a zero row
        assert M([[1, 2], [2, 4]]).rank() == 1


class TestKernel:
    def test_identity_empty(self):
        assert Matrix.identity(3).kernel().dim == 0

    def test_zero_full(self):
        assert Matrix.zeros(3, 3).kernel().dim == 3

    def test_substitute_back(self):
        m = M([[1, 1]])
        ker = m.kernel()
        assert ker.dim == 1
        for v in ker.vectors:
            assert mat_vec([[1, 1]], v) == [0]
        assert ker.contains([1, -1])


class TestSolve:
    def test_identity(self):
        part, hom = Matrix.identity(2).solve([1, 2])
        assert part == (1, 2)
        assert hom.dim == 0

    def test_underdetermined(self):
        m = M([[1, 1]])
        part, hom = m.solve([0])
        assert mat_vec([[1, 1]], part) == [0]
        assert hom.dim == 1
        assert hom.contains([1, -1])

    def test_inconsistent(self):
        assert M([[0, 0]]).solve([1]) is None


class TestDet:
    def test_identity(self):
        assert Matrix.identity(3).det() == 1

    def test_cofactor(self):
        # cofactor expansion: 0*0 - 1*(-1) = 1
        assert M([[0, 1], [-1, 0]]).det() == 1

    def test_singular(self):
        assert M([[1, 2], [2, 4]]).det() == 0

    def test_non_square(self):
        with pytest.raises(ShapeError):
            M([[1, 2]]).det()

    def test_fractions(self):
        assert M([[F(1, 2), F(1, 3)], [F(1, 5), F(1, 7)]]).det() == F(1, 14) - F(1, 15)


small_entries = st.integers(min_value=-6, max_value=6).map(F)
small_matrix = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.integers(min_value=1, max_value=5).flatmap(
        lambda m: st.lists(
            st.lists(small_entries, min_size=m, max_size=m), min_size=n, max_size=n
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_rank_nullity(rows):
    m = M(rows)
    assert m.rank() + m.kernel().dim == m.cols
    assert m.rank() == gauss_rank(rows)


@settings(max_examples=60, deadline=None)
@given(small_matrix)
def test_solve_substitution(rows):
    m = M(rows)
    b = [sum(r, F(0)) for r in rows]  # consistent rhs: x = all-ones works
    out = m.solve(b)
    assert out is not None
    part, hom = out
    assert list(m.apply(part)) == b
    for v in hom.vectors:
        assert all(x == 0 for x in m.apply(v))


@settings(max_examples=40, deadline=None)
@given(small_matrix.filter(lambda r: len(r) == len(r[0])))
def test_det_rank_consistency(rows):
    m = M(rows)
    assert (m.det() != 0) == (m.rank() == m.rows)


@settings(max_examples=40, deadline=None)
@given(small_matrix)
def test_sparse_kernel_matches_dense(rows):
    m = M(rows)
    sparse_rows = [
        {j: x for j, x in enumerate(r) if x != 0} for r in rows
    ]
    assert sparse_kernel(sparse_rows, m.cols) == m.kernel()


class TestSubspace:
    def test_canonical_equality(self):
        a = SubspaceBasis.from_vectors(3, [[1, 1, 0], [0, 0, 1]])
        b = SubspaceBasis.from_vectors(3, [[2, 2, 2], [0, 0, -1]])
        assert a == b

    def test_sum_intersect(self):
        a = SubspaceBasis.from_vectors(3, [[1, 0, 0], [0, 1, 0]])
        b = SubspaceBasis.from_vectors(3, [[0, 1, 0], [0, 0, 1]])
        assert a.sum(b).dim == 3
        inter = a.intersect(b)
        assert inter.dim == 1
        assert inter.contains([0, 1, 0])

    def test_coordinates(self):
        a = SubspaceBasis.from_vectors(3, [[1, 2, 0], [0, 0, 3]])
        coords = a.coordinates([2, 4, 3])
        assert coords is not None
        rebuilt = [F(0)] * 3
        for c, v in zip(coords, a.vectors):
            rebuilt = [r + c * x for r, x in zip(rebuilt, v)]
        assert rebuilt == [2, 4, 3]
        assert a.coordinates([1, 0, 0]) is None
